//! Monomials as fixed-length exponent vectors, plus the Borel poset moves.
//!
//! A monomial in `n+1` variables is the exponent vector `(a_0, ..., a_n)`.
//! The Borel poset on the degree-`d` monomials is generated by the covering
//! relation that moves one unit of exponent from `x_i` to `x_{i-1}`; an ideal
//! is Borel-fixed exactly when its monomials form a filter of this poset in
//! every degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::ring::PolyRing;

/// Exponent vector. The derived `Ord` (entrywise-lexicographic) is only a
/// canonical storage order; term-order comparisons go through [`TermOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1`.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Largest variable index with positive exponent; `None` for `1`.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Smallest variable index with positive exponent; `None` for `1`.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials one covering move up in the Borel poset
    /// (`x_i -> x_{i-1}` for each variable present).
    pub fn borel_covers(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in 1..self.exps.len() {
            if self.exps[i] > 0 {
                let mut exps = self.exps.clone();
                exps[i] -= 1;
                exps[i - 1] += 1;
                out.push(Monomial { exps });
            }
        }
        out
    }

    /// All monomials one covering move down (`x_i -> x_{i+1}`).
    pub fn borel_downs(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in 0..self.exps.len().saturating_sub(1) {
            if self.exps[i] > 0 {
                let mut exps = self.exps.clone();
                exps[i] -= 1;
                exps[i + 1] += 1;
                out.push(Monomial { exps });
            }
        }
        out
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        debug_assert_eq!(self.nvars(), ring.nvars());
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// `a <= b` in the Borel partial order: `b` is reachable from `a` by moving
/// exponent weight to smaller variable indices. Equivalent to the prefix-sum
/// test `sum_{i<=k} a_i <= sum_{i<=k} b_i` for all `k` (each covering move
/// raises one prefix sum by one, and conversely a maximal chain can be built
/// greedily whenever all prefix sums dominate).
pub fn borel_leq(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(format!(
            "borel_leq needs equal degrees, got {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    let mut pa = 0u32;
    let mut pb = 0u32;
    for (ea, eb) in a.exps.iter().zip(&b.exps) {
        pa += ea;
        pb += eb;
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monomials of the given degree, in descending term order.
pub fn monomials_of_degree(nvars: usize, d: u32, order: &TermOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut out, &mut exps, 0, d);
    out.sort_by(|a, b| order.compare(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, i: usize, remaining: u32) {
    if i + 1 == exps.len() {
        exps[i] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[i] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[i] = e;
        fill(out, exps, i + 1, remaining - e);
        exps[i] = 0;
    }
}

/// `C(n+d, n)`: the number of monomials of degree `d` in `n+1` variables is
/// `count_monomials(n+1, d)`.
pub fn count_monomials(nvars: usize, d: u32) -> usize {
    // C(d + nvars - 1, nvars - 1)
    let k = nvars - 1;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= d as u128 + 1 + i as u128;
        den *= 1 + i as u128;
    }
    (num / den) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degree_and_extremal_vars() {
        let xyz = m(&[1, 2, 3]);
        assert_eq!(xyz.degree(), 6);
        assert_eq!(xyz.max_var(), Some(2));
        assert_eq!(xyz.min_var(), Some(0));
        assert_eq!(Monomial::one(3).max_var(), None);
    }

    #[test]
    fn borel_covers_examples() {
        // yz in 3 vars -> {xz, y^2}
        let yz = m(&[0, 1, 1]);
        let covers = yz.borel_covers();
        assert_eq!(covers, vec![m(&[1, 0, 1]), m(&[0, 2, 0])]);
        // z^2 -> {yz}
        assert_eq!(m(&[0, 0, 2]).borel_covers(), vec![m(&[0, 1, 1])]);
        // x^d is the maximum of the poset
        assert!(m(&[3, 0, 0]).borel_covers().is_empty());
    }

    #[test]
    fn borel_leq_examples() {
        let xy = m(&[1, 1, 0]);
        let xx = m(&[2, 0, 0]);
        assert!(borel_leq(&xy, &xy).unwrap());
        assert!(borel_leq(&xy, &xx).unwrap());
        assert!(!borel_leq(&xx, &xy).unwrap());
        // y^2 and xz are incomparable in 3 variables
        let yy = m(&[0, 2, 0]);
        let xz = m(&[1, 0, 1]);
        assert!(!borel_leq(&yy, &xz).unwrap());
        assert!(!borel_leq(&xz, &yy).unwrap());
        assert!(borel_leq(&yy, &m(&[1, 1, 0])).unwrap());
        assert!(borel_leq(&m(&[1, 1, 1]), &m(&[2, 0, 1])).unwrap());
        assert!(borel_leq(&m(&[1, 1, 0]), &m(&[2, 0, 1])).is_err());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(count_monomials(3, 1), 3);
        assert_eq!(count_monomials(3, 3), 10);
        assert_eq!(count_monomials(4, 3), 20);
        let ms = monomials_of_degree(3, 3, &TermOrder::Lex);
        assert_eq!(ms.len(), 10);
        let ms1 = monomials_of_degree(3, 1, &TermOrder::Lex);
        assert_eq!(ms1, vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
    }

    #[test]
    fn render_monomials() {
        let ring = PolyRing::standard(3);
        assert_eq!(m(&[2, 1, 0]).render(&ring), "x^2*y");
        assert_eq!(m(&[0, 0, 0]).render(&ring), "1");
    }
}
