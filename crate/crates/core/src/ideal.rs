//! Monomial ideals with the Borel/stable structure: membership, closure,
//! Borel generators, the Eliahou-Kervaire decomposition, first syzygies,
//! Hilbert functions and polynomials, truncation, lex segments, and the
//! classical persistence growth check.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{borel_leq, count_monomials, monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::rat::{rat_int, Rat};
use crate::ring::PolyRing;
use crate::unipoly::UniPoly;

/// A monomial ideal held by its unique minimal generating set. Generators
/// are stored sorted by degree, then descending lexicographically.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: PolyRing,
    gens: Vec<Monomial>,
}

/// Witness that an ideal fails the Borel-fixed criterion: moving `var` one
/// index down in `gen` produces `missing`, which is not in the ideal.
#[derive(Clone, Debug)]
pub struct BorelViolation {
    pub gen: Monomial,
    pub var: usize,
    pub missing: Monomial,
}

/// One first syzygy of an equigenerated Borel-fixed ideal:
/// `x_i * a = x_k * c` with `i < k = max_var(a)` and both `a`, `c` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyRelation {
    pub i: usize,
    pub a: Monomial,
    pub k: usize,
    pub c: Monomial,
}

/// How [`MonomialIdeal::degree_basis_with_method`] produced its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBasisMethod {
    /// Blockwise via the Eliahou-Kervaire partition (stable ideals).
    EkPartition,
    /// Divisibility scan over all monomials of the degree.
    Enumeration,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing the generating set.
    pub fn new(ring: &PolyRing, gens: Vec<Monomial>) -> Self {
        let mut kept: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.cmp(a))
        });
        sorted.dedup();
        for m in sorted {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        MonomialIdeal {
            ring: ring.clone(),
            gens: kept,
        }
    }

    pub fn zero(ring: &PolyRing) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(|g| g.is_one())
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Largest generator degree. For a Borel-fixed ideal this is the
    /// Castelnuovo-Mumford regularity.
    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// `Some(m)` when every generator has degree `m`.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// First failure of the Borel exchange `x_i | g  =>  (x_{i-1}/x_i) g in I`,
    /// scanning generators in storage order.
    pub fn borel_violation(&self) -> Option<BorelViolation> {
        for g in &self.gens {
            for i in 1..self.nvars() {
                if g.exp(i) > 0 {
                    let moved = g.div_var(i).expect("exp > 0").mul_var(i - 1);
                    if !self.contains(&moved) {
                        return Some(BorelViolation {
                            gen: g.clone(),
                            var: i,
                            missing: moved,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_borel_fixed(&self) -> bool {
        self.borel_violation().is_none()
    }

    /// Eliahou-Kervaire stability: for each generator `g` with `k = max_var(g)`
    /// and each `i < k`, the exchange `(x_i/x_k) g` stays in the ideal.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            let Some(k) = g.max_var() else { return true };
            (0..k).all(|i| {
                let swapped = g.div_var(k).expect("max var present").mul_var(i);
                self.contains(&swapped)
            })
        })
    }

    /// The smallest Borel-fixed ideal containing `gens`: saturate each
    /// generator upward through the covering moves and minimalize.
    pub fn borel_closure(ring: &PolyRing, gens: &[Monomial]) -> Self {
        let mut closure: BTreeSet<Monomial> = BTreeSet::new();
        let mut stack: Vec<Monomial> = gens.to_vec();
        while let Some(m) = stack.pop() {
            if !closure.insert(m.clone()) {
                continue;
            }
            for up in m.borel_covers() {
                if !closure.contains(&up) {
                    stack.push(up);
                }
            }
        }
        MonomialIdeal::new(ring, closure.into_iter().collect())
    }

    /// Minimal generators that are also minimal elements of the degreewise
    /// filter: none of their downward neighbours stays in the ideal. The
    /// Borel closure of the result regenerates the ideal.
    pub fn borel_generators(&self) -> Result<Vec<Monomial>> {
        self.require_borel_fixed()?;
        Ok(self
            .gens
            .iter()
            .filter(|g| g.borel_downs().iter().all(|d| !self.contains(d)))
            .cloned()
            .collect())
    }

    fn require_borel_fixed(&self) -> Result<()> {
        match self.borel_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotBorelFixed {
                gen: v.gen.render(&self.ring),
                missing_factor: v.missing.render(&self.ring),
            }),
        }
    }

    fn require_stable(&self) -> Result<()> {
        if self.is_stable() {
            Ok(())
        } else {
            let witness = self
                .gens
                .first()
                .map(|g| g.render(&self.ring))
                .unwrap_or_default();
            Err(Error::NotStable { gen: witness })
        }
    }

    /// The unique factorization `m = generator * cofactor` with
    /// `max_var(generator) <= min_var(cofactor)`, obtained by stripping the
    /// largest variable while membership persists.
    pub fn ek_decompose(&self, m: &Monomial) -> Result<(Monomial, Monomial)> {
        self.require_stable()?;
        if !self.contains(m) {
            return Err(Error::NotInIdeal(m.render(&self.ring)));
        }
        let mut core = m.clone();
        loop {
            let Some(k) = core.max_var() else { break };
            let stripped = core.div_var(k).expect("max var present");
            if self.contains(&stripped) {
                core = stripped;
            } else {
                break;
            }
        }
        let cofactor = core.quotient_of(m).expect("core divides m");
        Ok((core, cofactor))
    }

    /// All monomials of the ideal in degree `d`, sorted descending
    /// lexicographically.
    pub fn degree_basis(&self, d: u32) -> Vec<Monomial> {
        self.degree_basis_with_method(d).0
    }

    /// Stable ideals go through the Eliahou-Kervaire partition, with each
    /// block `g * {cofactors in x_{max_var(g)}..x_n}` emitted exactly once;
    /// everything else falls back to enumeration.
    pub fn degree_basis_with_method(&self, d: u32) -> (Vec<Monomial>, DegreeBasisMethod) {
        let nv = self.nvars();
        if self.is_stable() {
            let mut out = Vec::new();
            for g in &self.gens {
                if g.degree() > d {
                    continue;
                }
                let start = g.max_var().unwrap_or(0);
                let tail_vars = nv - start;
                for tail in monomials_of_degree(tail_vars, d - g.degree(), &TermOrder::Lex) {
                    let mut exps = g.exps().to_vec();
                    for (offset, &e) in tail.exps().iter().enumerate() {
                        exps[start + offset] += e;
                    }
                    out.push(Monomial::new(exps));
                }
            }
            out.sort_by(|a, b| b.cmp(a));
            (out, DegreeBasisMethod::EkPartition)
        } else {
            let out = monomials_of_degree(nv, d, &TermOrder::Lex)
                .into_iter()
                .filter(|m| self.contains(m))
                .collect();
            (out, DegreeBasisMethod::Enumeration)
        }
    }

    /// Monomials of degree `d` outside the ideal, descending under `order`.
    pub fn standard_monomials(&self, d: u32, order: &TermOrder) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), d, order)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `dim I_d`: the number of degree-`d` monomials in the ideal.
    pub fn hilbert_function(&self, d: u32) -> usize {
        let nv = self.nvars();
        if self.is_stable() {
            self.gens
                .iter()
                .filter(|g| g.degree() <= d)
                .map(|g| count_monomials(nv - g.max_var().unwrap_or(0), d - g.degree()))
                .sum()
        } else {
            monomials_of_degree(nv, d, &TermOrder::Lex)
                .iter()
                .filter(|m| self.contains(m))
                .count()
        }
    }

    /// Hilbert polynomial of the quotient ring, by Lagrange interpolation at
    /// `reg, ..., reg + n` with one extra point checked as a guard against
    /// interpolating before the Hilbert function turns polynomial.
    pub fn hilbert_polynomial(&self) -> Result<UniPoly> {
        let nv = self.nvars();
        let reg = self.max_gen_degree().unwrap_or(0);
        let quotient_dim = |d: u32| -> Rat {
            rat_int((count_monomials(nv, d) - self.hilbert_function(d)) as i64)
        };
        let points: Vec<(Rat, Rat)> = (reg..reg + nv as u32)
            .map(|d| (rat_int(d as i64), quotient_dim(d)))
            .collect();
        let poly = UniPoly::interpolate(&points);
        let check_at = reg + nv as u32;
        let expected = poly.eval(&rat_int(check_at as i64));
        let actual = quotient_dim(check_at);
        if expected != actual {
            return Err(Error::HilbertInconsistent {
                degree: check_at,
                expected: crate::rat::format_rat(&expected),
                actual: crate::rat::format_rat(&actual),
            });
        }
        Ok(poly)
    }

    /// The truncation `I_{>= d}`: generated by the degree-`d` monomials of
    /// the ideal together with the generators of larger degree.
    pub fn truncate(&self, d: u32) -> MonomialIdeal {
        let mut gens = self.degree_basis(d);
        gens.extend(self.gens.iter().filter(|g| g.degree() > d).cloned());
        MonomialIdeal::new(&self.ring, gens)
    }

    /// First syzygies of an equigenerated Borel-fixed ideal: one relation
    /// `x_i a = x_k c` per generator `a` and variable `i < k = max_var(a)`.
    pub fn first_syzygies(&self) -> Result<Vec<SyzygyRelation>> {
        self.require_borel_fixed()?;
        if self.is_zero() {
            return Ok(Vec::new());
        }
        if self.equigenerated_degree().is_none() {
            return Err(Error::NotEquigenerated);
        }
        let mut out = Vec::new();
        for a in &self.gens {
            let Some(k) = a.max_var() else { continue };
            for i in 0..k {
                let c = a.mul_var(i).div_var(k).expect("max var present");
                debug_assert!(self.contains(&c), "exchange lands in the ideal");
                out.push(SyzygyRelation {
                    i,
                    a: a.clone(),
                    k,
                    c,
                });
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ring)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.render(), self.ring)
    }
}

/// Ideal generated by the `r` lexicographically largest monomials of degree
/// `d`. Always a stable ideal.
pub fn lex_segment(ring: &PolyRing, d: u32, r: usize) -> Result<MonomialIdeal> {
    let total = count_monomials(ring.nvars(), d);
    if r > total {
        return Err(Error::OutOfRange(format!(
            "segment size {r} exceeds the {total} monomials of degree {d}"
        )));
    }
    let mons = monomials_of_degree(ring.nvars(), d, &TermOrder::Lex);
    Ok(MonomialIdeal::new(ring, mons[..r].to_vec()))
}

/// The classical persistence hypothesis: does a dimension pair
/// `(dim I_m, dim I_{m+1})` grow exactly as the lex segment does?
pub fn gotzmann_growth_check(dim_m: usize, dim_m1: usize, nvars: usize, m: u32) -> Result<bool> {
    if dim_m1 > count_monomials(nvars, m + 1) {
        return Err(Error::OutOfRange(format!(
            "dim in degree {} exceeds the graded piece",
            m + 1
        )));
    }
    let ring = PolyRing::standard(nvars);
    let segment = lex_segment(&ring, m, dim_m)?;
    Ok(segment.hilbert_function(m + 1) == dim_m1)
}

/// Borel-minimal monomials among the degree-`d` monomials of the ideal
/// (minimal elements of the filter).
pub fn borel_minimal_members(ideal: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    ideal
        .degree_basis(d)
        .into_iter()
        .filter(|m| m.borel_downs().iter().all(|down| !ideal.contains(down)))
        .collect()
}

/// Borel-maximal standard monomials in degree `d` (maximal elements of the
/// complementary order ideal).
pub fn borel_maximal_standard(ideal: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    ideal
        .standard_monomials(d, &TermOrder::Lex)
        .into_iter()
        .filter(|m| m.borel_covers().iter().all(|up| ideal.contains(up)))
        .collect()
}

/// Exhaustive check that `a <= b` via the covers relation; used as the
/// oracle for the prefix-sum test in property suites.
pub fn borel_leq_bfs(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch("borel_leq_bfs".into()));
    }
    let _ = borel_leq(a, b)?; // same precondition
    let mut seen = BTreeSet::new();
    let mut stack = vec![a.clone()];
    while let Some(m) = stack.pop() {
        if m == *b {
            return Ok(true);
        }
        if seen.insert(m.clone()) {
            stack.extend(m.borel_covers());
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::standard(n)
    }

    fn mon(ring: &PolyRing, s: &str) -> Monomial {
        let p = crate::poly::MultiPoly::parse(ring, s).unwrap();
        let (m, _) = p.terms().next().expect("monomial");
        m.clone()
    }

    fn ideal(ring: &PolyRing, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(ring, gens.iter().map(|s| mon(ring, s)).collect())
    }

    #[test]
    fn minimal_generating_set() {
        let r = ring(3);
        let i = ideal(&r, &["x^2", "x^2*y", "y", "y*z"]);
        assert_eq!(i.gens().len(), 2);
        assert!(i.contains(&mon(&r, "x^2*z")));
        assert!(!i.contains(&mon(&r, "x*z")));
    }

    #[test]
    fn borel_fixed_examples() {
        let r4 = ring(4);
        assert!(ideal(&r4, &["x^2", "x*y", "x*z", "y^3"]).is_borel_fixed());
        let r3 = ring(3);
        let j = ideal(&r3, &["x^2", "x*z", "y^3"]);
        let v = j.borel_violation().unwrap();
        assert_eq!(v.missing, mon(&r3, "x*y"));
        assert!(ideal(&r3, &["x^2", "x*y", "y^2"]).is_borel_fixed());
    }

    #[test]
    fn stability_examples() {
        let r3 = ring(3);
        assert!(ideal(&r3, &["x^2", "x*y", "x*z", "y^3"]).is_stable());
        assert!(!ideal(&r3, &["y^2"]).is_stable());
        assert!(ideal(&r3, &["x"]).is_stable());
        // stable but not Borel-fixed: yz moved by y -> x gives xz, which is missing
        let s = ideal(&r3, &["x^2", "x*y", "y^2", "y*z"]);
        assert!(s.is_stable());
        assert!(!s.is_borel_fixed());
    }

    #[test]
    fn closure_examples() {
        let r3 = ring(3);
        let c = MonomialIdeal::borel_closure(&r3, &[mon(&r3, "x*z"), mon(&r3, "y^3")]);
        assert_eq!(c, ideal(&r3, &["x^2", "x*y", "x*z", "y^3"]));
        let single = MonomialIdeal::borel_closure(&r3, &[mon(&r3, "x^3")]);
        assert_eq!(single, ideal(&r3, &["x^3"]));
        let z2 = MonomialIdeal::borel_closure(&r3, &[mon(&r3, "z^2")]);
        assert_eq!(
            z2,
            ideal(&r3, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"])
        );
    }

    #[test]
    fn borel_generator_examples() {
        let r3 = ring(3);
        let i = ideal(&r3, &["x^2", "x*y", "x*z", "y^3"]);
        let bg = i.borel_generators().unwrap();
        assert_eq!(bg, vec![mon(&r3, "x*z"), mon(&r3, "y^3")]);
        assert_eq!(
            ideal(&r3, &["x"]).borel_generators().unwrap(),
            vec![mon(&r3, "x")]
        );
        assert_eq!(
            ideal(&r3, &["x^2", "x*y", "y^2"]).borel_generators().unwrap(),
            vec![mon(&r3, "y^2")]
        );
        assert!(ideal(&r3, &["x^2", "x*z", "y^3"]).borel_generators().is_err());
    }

    #[test]
    fn ek_decompose_examples() {
        let r3 = ring(3);
        let i = ideal(&r3, &["x^2", "x*y", "x*z", "y^3"]);
        let (g, c) = i.ek_decompose(&mon(&r3, "x^2*y*z")).unwrap();
        assert_eq!((g, c), (mon(&r3, "x^2"), mon(&r3, "y*z")));
        let (g2, c2) = i.ek_decompose(&mon(&r3, "x*z")).unwrap();
        assert_eq!((g2, c2), (mon(&r3, "x*z"), Monomial::one(3)));
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        let (g3, c3) = j.ek_decompose(&mon(&r3, "x*y*z^2")).unwrap();
        assert_eq!((g3, c3), (mon(&r3, "x*y"), mon(&r3, "z^2")));
        assert!(matches!(
            j.ek_decompose(&mon(&r3, "x*z")),
            Err(Error::NotInIdeal(_))
        ));
        assert!(ideal(&r3, &["y^2"]).ek_decompose(&mon(&r3, "y^2")).is_err());
    }

    #[test]
    fn degree_basis_examples() {
        let r3 = ring(3);
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        let (b3, method) = j.degree_basis_with_method(3);
        assert_eq!(method, DegreeBasisMethod::EkPartition);
        assert_eq!(b3.len(), 7);
        let names: Vec<String> = b3.iter().map(|m| m.render(&r3)).collect();
        let expected: Vec<String> = ["x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "y^3", "y^2*z"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(names, expected);
        let l = ideal(&r3, &["x"]);
        assert_eq!(
            l.degree_basis(2),
            vec![mon(&r3, "x^2"), mon(&r3, "x*y"), mon(&r3, "x*z")]
        );
        // equigenerated ideal at its own degree: exactly the generators
        assert_eq!(j.degree_basis(2), j.gens().to_vec());
        // non-stable fallback
        let ns = ideal(&r3, &["y^2"]);
        let (b, method2) = ns.degree_basis_with_method(3);
        assert_eq!(method2, DegreeBasisMethod::Enumeration);
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn hilbert_function_examples() {
        let r3 = ring(3);
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        assert_eq!(j.hilbert_function(2), 3);
        assert_eq!(j.hilbert_function(3), 7);
        let l = ideal(&r3, &["x", "y^3"]);
        assert_eq!(l.hilbert_function(3), 7);
        assert_eq!(j.hilbert_function(0), 0);
        assert_eq!(MonomialIdeal::zero(&r3).hilbert_function(4), 0);
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let r3 = ring(3);
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        assert_eq!(j.hilbert_polynomial().unwrap(), UniPoly::constant(rat_int(3)));
        let l = ideal(&r3, &["x", "y^3"]);
        assert_eq!(l.hilbert_polynomial().unwrap(), UniPoly::constant(rat_int(3)));
        let zero = MonomialIdeal::zero(&r3);
        let hp = zero.hilbert_polynomial().unwrap();
        assert_eq!(hp.eval(&rat_int(5)), rat_int(21)); // C(7,2)
    }

    #[test]
    fn truncate_examples() {
        let r3 = ring(3);
        let l = ideal(&r3, &["x"]);
        assert_eq!(l.truncate(2), ideal(&r3, &["x^2", "x*y", "x*z"]));
        let i = ideal(&r3, &["x^2", "x*y", "x*z", "y^3"]);
        let t = i.truncate(3);
        assert_eq!(t.gens().len(), 7);
        let bg = t.borel_generators().unwrap();
        assert_eq!(bg, vec![mon(&r3, "x*z^2"), mon(&r3, "y^3")]);
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        assert_eq!(j.truncate(2), j);
    }

    #[test]
    fn syzygy_examples() {
        let r3 = ring(3);
        let j = ideal(&r3, &["x^2", "x*y", "y^2"]);
        let syz = j.first_syzygies().unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            assert_eq!(s.a.mul_var(s.i), s.c.mul_var(s.k));
            assert!(s.i < s.k);
        }
        let pow = ideal(&r3, &["x^3"]);
        assert!(pow.first_syzygies().unwrap().is_empty());
        let non_equi = ideal(&r3, &["x", "y^3"]);
        assert!(matches!(
            non_equi.first_syzygies(),
            Err(Error::NotEquigenerated)
        ));
    }

    #[test]
    fn lex_segment_examples() {
        let r3 = ring(3);
        assert_eq!(
            lex_segment(&r3, 2, 3).unwrap(),
            ideal(&r3, &["x^2", "x*y", "x*z"])
        );
        assert_eq!(lex_segment(&r3, 1, 1).unwrap(), ideal(&r3, &["x"]));
        let seg7 = lex_segment(&r3, 3, 7).unwrap();
        assert_eq!(seg7, ideal(&r3, &["x", "y^3"]).truncate(3));
        assert!(seg7.is_stable());
        assert!(lex_segment(&r3, 2, 7).is_err());
        assert!(lex_segment(&r3, 2, 0).unwrap().is_zero());
    }

    #[test]
    fn growth_check_examples() {
        // lex segment (x^2, x*y, x*z) grows to 6 in degree 3
        assert!(gotzmann_growth_check(3, 6, 3, 2).unwrap());
        assert!(!gotzmann_growth_check(3, 7, 3, 2).unwrap());
        assert!(gotzmann_growth_check(0, 0, 3, 2).unwrap());
        assert!(!gotzmann_growth_check(0, 1, 3, 2).unwrap());
        // the whole piece grows to the whole piece
        assert!(gotzmann_growth_check(6, 10, 3, 2).unwrap());
    }

    #[test]
    fn borel_extremes() {
        let r4 = ring(4);
        let i = ideal(&r4, &["x^2", "x*y", "x*z", "y^3"]);
        let mins = borel_minimal_members(&i, 3);
        assert_eq!(mins, vec![mon(&r4, "x*z*w"), mon(&r4, "y^3")]);
        let maxs = borel_maximal_standard(&i, 3);
        assert_eq!(maxs, vec![mon(&r4, "x*w^2"), mon(&r4, "y^2*z")]);
    }
}
