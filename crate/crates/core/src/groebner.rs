//! A deterministic Buchberger engine over the rationals.
//!
//! The basis returned by [`buchberger`] is always the reduced Groebner basis
//! (monic, interreduced, sorted ascending by leading term), which is unique
//! for a given ideal and term order. Pair selection uses the normal strategy
//! (lowest lcm degree first, ties by the term order on lcms, then by index),
//! with the product and chain criteria to discard useless pairs; none of
//! that affects the output, only the route there.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::ring::PolyRing;

#[derive(Clone)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: TermOrder,
    gens: Vec<MultiPoly>,
    leads: Vec<Monomial>,
}

/// The S-polynomial of `f` and `g` under `order`; zero if either is zero.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &TermOrder) -> MultiPoly {
    let ring = f.ring().clone();
    let (Some((lf, cf)), Some((lg, cg))) = (f.leading(order), g.leading(order)) else {
        return MultiPoly::zero(&ring);
    };
    let lcm = lf.lcm(lg);
    let mf = lf.quotient_of(&lcm).expect("lcm divisible by lt");
    let mg = lg.quotient_of(&lcm).expect("lcm divisible by lt");
    let mut s = MultiPoly::zero(&ring);
    let inv_cf = Rat::one() / cf.clone();
    let neg_inv_cg = -(Rat::one() / cg.clone());
    s.add_assign_scaled(f, &mf, &inv_cf);
    s.add_assign_scaled(g, &mg, &neg_inv_cg);
    s
}

/// Full multivariate division: no term of the remainder is divisible by any
/// leading term of `basis`. Divisors are scanned in slice order.
fn reduce(f: &MultiPoly, basis: &[MultiPoly], leads: &[Monomial], order: &TermOrder) -> MultiPoly {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut remainder = MultiPoly::zero(&ring);
    'outer: while let Some((lm, lc)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        for (g, glm) in basis.iter().zip(leads) {
            if glm.divides(&lm) {
                let shift = glm.quotient_of(&lm).expect("divides");
                let gc = g.leading(order).expect("nonzero basis element").1;
                let factor = -(lc.clone() / gc.clone());
                work.add_assign_scaled(g, &shift, &factor);
                continue 'outer;
            }
        }
        work.remove_term(&lm);
        remainder.insert_term(lm, lc);
    }
    remainder
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn pair_cmp(a: &Pair, b: &Pair, order: &TermOrder) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| order.compare(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
/// All-zero (or empty) input yields the empty basis for the zero ideal.
pub fn buchberger(gens: &[MultiPoly], order: &TermOrder) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    let ring = first.ring().clone();
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let seed: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut gb = GroebnerBasis {
        ring,
        order: order.clone(),
        gens: Vec::new(),
        leads: Vec::new(),
    };
    gb.complete(seed, 0);
    Ok(gb)
}

impl GroebnerBasis {
    /// Basis of the zero ideal.
    pub fn empty(ring: &PolyRing, order: &TermOrder) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            gens: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// `true` unless the basis contains a nonzero constant.
    pub fn is_proper(&self) -> bool {
        !self.leads.iter().any(|m| m.is_one())
    }

    /// Remainder of `f` modulo the basis; zero exactly when `f` is in the
    /// ideal. Idempotent.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        reduce(f, &self.gens, &self.leads, &self.order)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Reduced Groebner basis of the ideal enlarged by `extra`. The existing
    /// basis is taken as already confluent, so only pairs touching the new
    /// elements are processed.
    pub fn extended(&self, extra: &[MultiPoly]) -> Result<GroebnerBasis> {
        for g in extra {
            self.ring.check_same(g.ring())?;
        }
        let mut gb = self.clone();
        let start = gb.gens.len();
        let seed: Vec<MultiPoly> = extra.iter().filter(|g| !g.is_zero()).cloned().collect();
        gb.complete(seed, start);
        Ok(gb)
    }

    /// Core completion loop. `self.gens[..skip_before]` are assumed to have
    /// pairwise-confluent S-polynomials already.
    fn complete(&mut self, mut seed: Vec<MultiPoly>, skip_before: usize) {
        seed.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.compare_under(b, &self.order))
        });
        let mut queue: Vec<Pair> = Vec::new();
        let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();
        for p in seed {
            let p = p.make_monic(&self.order);
            self.push_with_pairs(p, &mut queue);
        }
        while !queue.is_empty() {
            let best = queue
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| pair_cmp(a, b, &self.order))
                .map(|(k, _)| k)
                .expect("nonempty queue");
            let pair = queue.swap_remove(best);
            treated.insert((pair.i, pair.j));
            let (fi, fj) = (&self.gens[pair.i], &self.gens[pair.j]);
            let (li, lj) = (&self.leads[pair.i], &self.leads[pair.j]);
            // Product criterion: coprime leading terms reduce to zero.
            if li.coprime_with(lj) {
                continue;
            }
            // Chain criterion: a third element dividing the lcm whose two
            // pairs were already treated makes this pair redundant.
            let chained = (0..self.gens.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && self.leads[k].divides(&pair.lcm)
                    && treated.contains(&key(pair.i, k))
                    && treated.contains(&key(pair.j, k))
            });
            if chained {
                continue;
            }
            let s = s_polynomial(fi, fj, &self.order);
            let r = reduce(&s, &self.gens, &self.leads, &self.order);
            if !r.is_zero() {
                let r = r.make_monic(&self.order);
                self.push_with_pairs(r, &mut queue);
            }
        }
        let _ = skip_before; // confluence of the old block is what lets `queue` start without old-old pairs
        self.reduce_basis();
    }

    fn push_with_pairs(&mut self, p: MultiPoly, queue: &mut Vec<Pair>) {
        let lead = p
            .leading(&self.order)
            .expect("basis elements are nonzero")
            .0
            .clone();
        let idx = self.gens.len();
        for (k, lk) in self.leads.iter().enumerate() {
            queue.push(Pair {
                i: k,
                j: idx,
                lcm: lk.lcm(&lead),
            });
        }
        self.gens.push(p);
        self.leads.push(lead);
    }

    /// Interreduces to the canonical reduced basis: drop elements whose lead
    /// is divisible by another lead, tail-reduce the survivors to a fixed
    /// point, sort ascending by leading term.
    fn reduce_basis(&mut self) {
        let order = self.order.clone();
        let mut alive: Vec<bool> = vec![true; self.gens.len()];
        for i in 0..self.gens.len() {
            if !alive[i] {
                continue;
            }
            for j in 0..self.gens.len() {
                if i == j || !alive[j] {
                    continue;
                }
                if self.leads[j].divides(&self.leads[i])
                    && (self.leads[j] != self.leads[i] || j < i)
                {
                    alive[i] = false;
                    break;
                }
            }
        }
        let mut gens: Vec<MultiPoly> = Vec::new();
        let mut leads: Vec<Monomial> = Vec::new();
        for (i, a) in alive.iter().enumerate() {
            if *a {
                gens.push(self.gens[i].clone());
                leads.push(self.leads[i].clone());
            }
        }
        loop {
            let mut changed = false;
            for i in 0..gens.len() {
                let mut others = gens.clone();
                let mut other_leads = leads.clone();
                others.remove(i);
                other_leads.remove(i);
                let r = reduce(&gens[i], &others, &other_leads, &order).make_monic(&order);
                if r != gens[i] {
                    assert!(!r.is_zero(), "minimal basis element reduced away");
                    leads[i] = r.leading(&order).expect("nonzero").0.clone();
                    gens[i] = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by(|&a, &b| order.compare(&leads[a], &leads[b]));
        self.gens = idx.iter().map(|&k| gens[k].clone()).collect();
        self.leads = idx.iter().map(|&k| leads[k].clone()).collect();
    }

    /// Confluence check: every S-polynomial of basis pairs reduces to zero.
    pub fn verify_s_polynomials(&self) -> bool {
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let s = s_polynomial(&self.gens[i], &self.gens[j], &self.order);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Krull dimension of the quotient ring: the largest number of variables
    /// supporting no leading term entirely, found by subset enumeration.
    pub fn krull_dimension(&self) -> Result<usize> {
        if !self.is_proper() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        assert!(n <= 24, "dimension enumeration is for small rings");
        let supports: Vec<u32> = self
            .leads
            .iter()
            .map(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &e)| if e > 0 { acc | 1 << i } else { acc })
            })
            .collect();
        let mut best = 0usize;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|s| s & !mask != 0) {
                best = size;
            }
        }
        Ok(best)
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Deterministically prunes `gens` to an irredundant generating subset of the
/// same ideal: candidates are sorted by total degree then by the term order,
/// a forward pass drops anything already generated by the kept prefix, and
/// backward sweeps drop anything in the ideal of the rest until a fixed
/// point. Removing any surviving element changes the ideal.
pub fn trim_generators(gens: &[MultiPoly], order: &TermOrder) -> Result<Vec<MultiPoly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let mut sorted: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sorted.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.compare_under(b, order))
    });
    sorted.dedup();

    let mut kept: Vec<MultiPoly> = Vec::new();
    let mut gb = GroebnerBasis::empty(&ring, order);
    for c in sorted {
        if gb.contains(&c) {
            continue;
        }
        gb = gb.extended(std::slice::from_ref(&c))?;
        kept.push(c);
    }

    loop {
        let mut dropped = false;
        let mut i = 0;
        while i < kept.len() {
            let mut others = kept.clone();
            others.remove(i);
            let redundant = if others.is_empty() {
                kept[i].is_zero()
            } else {
                buchberger(&others, order)?.contains(&kept[i])
            };
            if redundant {
                kept.remove(i);
                dropped = true;
            } else {
                i += 1;
            }
        }
        if !dropped {
            break;
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;

    fn ring2() -> PolyRing {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn p(ring: &PolyRing, s: &str) -> MultiPoly {
        MultiPoly::parse(ring, s).unwrap()
    }

    #[test]
    fn already_a_basis() {
        let r = ring2();
        let gb = buchberger(&[p(&r, "x"), p(&r, "y")], &TermOrder::Lex).unwrap();
        assert_eq!(gb.generators().len(), 2);
        assert_eq!(gb.generators()[0], p(&r, "y"));
        assert_eq!(gb.generators()[1], p(&r, "x"));
        assert!(gb.verify_s_polynomials());
    }

    #[test]
    fn lex_elimination_produces_y_cubed_minus_one() {
        let r = ring2();
        let gb = buchberger(&[p(&r, "x^2 - y"), p(&r, "x*y - 1")], &TermOrder::Lex).unwrap();
        let target = p(&r, "y^3 - 1");
        assert!(gb.generators().iter().any(|g| *g == target));
        // membership of the inputs
        assert!(gb.contains(&p(&r, "x^2 - y")));
        assert!(gb.contains(&p(&r, "x*y - 1")));
        assert!(!gb.contains(&p(&r, "x")));
        assert!(gb.verify_s_polynomials());
    }

    #[test]
    fn zero_ideal_input() {
        let r = ring2();
        let gb = buchberger(&[MultiPoly::zero(&r)], &TermOrder::Lex).unwrap();
        assert!(gb.is_zero_ideal());
        assert!(buchberger(&[], &TermOrder::Lex).is_err());
    }

    #[test]
    fn normal_form_is_idempotent_and_detects_units() {
        let r = ring2();
        let gb = buchberger(&[p(&r, "x^2 - y"), p(&r, "x*y - 1")], &TermOrder::Lex).unwrap();
        let f = p(&r, "x^3*y + x");
        let n1 = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&n1), n1);
        assert!(gb.is_proper());
        assert_eq!(gb.normal_form(&p(&r, "1")), p(&r, "1"));
        let unit = buchberger(&[p(&r, "x"), p(&r, "x - 1")], &TermOrder::Lex).unwrap();
        assert!(!unit.is_proper());
    }

    #[test]
    fn krull_dimension_examples() {
        let r3 = PolyRing::standard(3);
        let gb = buchberger(&[p(&r3, "x"), p(&r3, "y")], &TermOrder::DegRevLex).unwrap();
        assert_eq!(gb.krull_dimension().unwrap(), 1);
        let zero = GroebnerBasis::empty(&r3, &TermOrder::DegRevLex);
        assert_eq!(zero.krull_dimension().unwrap(), 3);
        let unit = buchberger(&[p(&r3, "x - 1"), p(&r3, "x")], &TermOrder::DegRevLex).unwrap();
        assert!(matches!(unit.krull_dimension(), Err(Error::UnitIdeal)));
    }

    #[test]
    fn trim_examples() {
        let r = ring2();
        let order = TermOrder::DegRevLex;
        let trimmed =
            trim_generators(&[p(&r, "x"), p(&r, "x^2"), p(&r, "x + x^2")], &order).unwrap();
        assert_eq!(trimmed, vec![p(&r, "x")]);

        let trimmed2 =
            trim_generators(&[p(&r, "x"), p(&r, "y"), p(&r, "x + y")], &order).unwrap();
        assert_eq!(trimmed2.len(), 2);

        assert!(trim_generators(&[], &order).unwrap().is_empty());
        assert!(trim_generators(&[MultiPoly::zero(&r)], &order).unwrap().is_empty());
    }

    #[test]
    fn extended_matches_from_scratch() {
        let r = ring2();
        let order = TermOrder::DegRevLex;
        let g1 = buchberger(&[p(&r, "x^2 - y")], &order).unwrap();
        let g2 = g1.extended(&[p(&r, "x*y - 1")]).unwrap();
        let direct = buchberger(&[p(&r, "x^2 - y"), p(&r, "x*y - 1")], &order).unwrap();
        assert_eq!(g2.generators(), direct.generators());
    }
}
