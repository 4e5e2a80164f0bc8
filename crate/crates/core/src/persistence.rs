//! The local persistence test: given an extremal base ideal `J` and a point
//! of the Grassmannian chart centered at `[J_m]`, decide from one rank
//! computation in degree `m+1` whether the chart ideal grows exactly like
//! `J` in every degree, and materialize the one-parameter flat degeneration
//! that the argument rests on.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::RngCore;

use crate::error::{Error, Result};
use crate::extremal::{check_extremal, find_extremal_weight, WeightSearch};
use crate::groebner::buchberger;
use crate::ideal::MonomialIdeal;
use crate::matrix::QMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::{TermOrder, WeightVector};
use crate::poly::MultiPoly;
use crate::rat::{is_nonneg_integer, rat_int, Rat};

/// A rational point of the chart around `[J_m]`: one coefficient `c_AB` per
/// (member, standard) pair of degree-`m` monomials, zero when unspecified.
/// A base that is not generated in a single degree is replaced by its
/// truncation at the top generator degree on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint {
    base: MonomialIdeal,
    m: u32,
    members: Vec<Monomial>,
    standard: Vec<Monomial>,
    coefficients: BTreeMap<(Monomial, Monomial), Rat>,
}

/// Outcome of [`local_persistence_check`].
#[derive(Clone, Debug)]
pub struct PersistenceVerdict {
    pub dim_expected: usize,
    pub dim_actual: usize,
    pub persists: bool,
    /// `(degree, dim I_z, dim J_z)` for `z = m ..= m + forward`.
    pub checked_degrees: Vec<(u32, usize, usize)>,
}

impl ChartPoint {
    pub fn new(
        base: &MonomialIdeal,
        coefficients: impl IntoIterator<Item = ((Monomial, Monomial), Rat)>,
    ) -> Result<Self> {
        if let Some(v) = base.borel_violation() {
            return Err(Error::NotBorelFixed {
                gen: v.gen.render(base.ring()),
                missing_factor: v.missing.render(base.ring()),
            });
        }
        let m = base.max_gen_degree().ok_or(Error::ZeroIdeal)?;
        let base = if base.equigenerated_degree().is_some() {
            base.clone()
        } else {
            base.truncate(m)
        };
        let members = base.degree_basis(m);
        let standard = base.standard_monomials(m, &TermOrder::Lex);
        let mut map = BTreeMap::new();
        for ((a, b), c) in coefficients {
            if !members.contains(&a) || !standard.contains(&b) {
                return Err(Error::BadChartKey {
                    a: a.render(base.ring()),
                    b: b.render(base.ring()),
                });
            }
            if !c.is_zero() {
                map.insert((a, b), c);
            }
        }
        Ok(ChartPoint {
            base,
            m,
            members,
            standard,
            coefficients: map,
        })
    }

    /// The origin of the chart: the point `[J_m]` itself.
    pub fn origin(base: &MonomialIdeal) -> Result<Self> {
        Self::new(base, std::iter::empty())
    }

    /// The (truncated, equigenerated) base ideal.
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Degree-`m` monomials of the base, descending lexicographically.
    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    /// Degree-`m` standard monomials, descending lexicographically.
    pub fn standard(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn coefficients(&self) -> &BTreeMap<(Monomial, Monomial), Rat> {
        &self.coefficients
    }

    pub fn coefficient(&self, a: &Monomial, b: &Monomial) -> Rat {
        self.coefficients
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// The generators `f_A = x^A + sum_B c_AB x^B`, one per member, in member
    /// order.
    pub fn generators(&self) -> Vec<MultiPoly> {
        let ring = self.base.ring();
        self.members
            .iter()
            .map(|a| {
                let mut f = MultiPoly::from_monomial(ring, a.clone(), Rat::one());
                for b in &self.standard {
                    let c = self.coefficient(a, b);
                    if !c.is_zero() {
                        f = &f + &MultiPoly::from_monomial(ring, b.clone(), c);
                    }
                }
                f
            })
            .collect()
    }
}

/// Chart generators of a point; the origin recovers the monomial generators.
pub fn chart_generators(point: &ChartPoint) -> Vec<MultiPoly> {
    point.generators()
}

/// Rank of the coefficient matrix of homogeneous degree-`d` polynomials,
/// rows in the given order, columns the degree-`d` monomials descending
/// lexicographically.
fn rank_of_degree_slice(polys: &[MultiPoly], d: u32) -> Result<usize> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let ring = first.ring();
    let cols = monomials_of_degree(ring.nvars(), d, &TermOrder::Lex);
    let index: BTreeMap<&Monomial, usize> =
        cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = QMatrix::zeros(polys.len(), cols.len());
    for (r, p) in polys.iter().enumerate() {
        if p.homogeneous_degree() != Some(d) {
            return Err(Error::Inhomogeneous);
        }
        for (m, c) in p.terms() {
            matrix.set(r, index[m], c.clone());
        }
    }
    Ok(matrix.rref().rank)
}

/// Exact dimension of the degree-`d` piece of the ideal generated by
/// homogeneous polynomials of one common degree `m <= d`.
pub fn dim_in_degree(gens: &[MultiPoly], d: u32) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(0);
    };
    let ring = first.ring().clone();
    let mut m = None;
    for g in gens {
        ring.check_same(g.ring())?;
        let Some(dg) = g.homogeneous_degree() else {
            return Err(Error::Inhomogeneous);
        };
        if *m.get_or_insert(dg) != dg {
            return Err(Error::Inhomogeneous);
        }
    }
    let m = m.expect("nonempty gens");
    if d < m {
        return Err(Error::OutOfRange(format!(
            "degree {d} below generator degree {m}"
        )));
    }
    let cofactors = monomials_of_degree(ring.nvars(), d - m, &TermOrder::Lex);
    let mut rows = Vec::with_capacity(gens.len() * cofactors.len());
    for g in gens {
        for u in &cofactors {
            rows.push(g.mul_monomial(u));
        }
    }
    rank_of_degree_slice(&rows, d)
}

/// The degree-`(m+1)` persistence test, with optional forward verification.
///
/// Re-derives an extremality certificate for the base (the theorem needs
/// one) and compares `dim I_{m+1}` against `dim J_{m+1}`. With `forward > 0`
/// it also records `dim I_z` against `dim J_z` for `z = m ..= m + forward`.
/// The rank in degree `m+1` is taken with the rows `x_j f_A`, `j >= max(A)`
/// first, so that when they are a basis the pivots land on them.
pub fn local_persistence_check(point: &ChartPoint, forward: u32) -> Result<PersistenceVerdict> {
    let base = point.base();
    match find_extremal_weight(base)? {
        WeightSearch::Found { .. } => {}
        WeightSearch::Infeasible { .. } => return Err(Error::NotExtremal),
    }
    let m = point.degree();
    let gens = point.generators();
    let ring = base.ring();
    let nv = ring.nvars();

    let mut ek_rows = Vec::new();
    let mut other_rows = Vec::new();
    for (a, f) in point.members().iter().zip(&gens) {
        let split = a.max_var().unwrap_or(0);
        for j in 0..nv {
            let row = f.mul_monomial(&Monomial::var(j, nv));
            if j >= split {
                ek_rows.push(row);
            } else {
                other_rows.push(row);
            }
        }
    }
    ek_rows.extend(other_rows);
    let dim_actual = rank_of_degree_slice(&ek_rows, m + 1)?;
    let dim_expected = base.hilbert_function(m + 1);
    let persists = dim_actual == dim_expected;

    let mut checked_degrees = Vec::new();
    for z in m..=m + forward {
        let di = if z == m + 1 {
            dim_actual
        } else {
            dim_in_degree(&gens, z)?
        };
        checked_degrees.push((z, di, base.hilbert_function(z)));
    }
    Ok(PersistenceVerdict {
        dim_expected,
        dim_actual,
        persists,
        checked_degrees,
    })
}

/// The fiber `I(t)` of the one-parameter family rescaling every chart
/// coefficient by `t^(w.(A-B))`. Needs a weight that certifies extremality
/// of the base (all the exponents are then positive) and produces integral
/// exponents; `t = 1` recovers the chart generators and `t = 0` the monomial
/// generators of the base.
pub fn flat_family_fiber(
    point: &ChartPoint,
    w: &WeightVector,
    t: &Rat,
) -> Result<Vec<MultiPoly>> {
    if !check_extremal(point.base(), w)?.is_certified() {
        return Err(Error::NotExtremal);
    }
    let ring = point.base().ring();
    let mut out = Vec::new();
    for a in point.members() {
        let mut f = MultiPoly::from_monomial(ring, a.clone(), Rat::one());
        for b in point.standard() {
            let c = point.coefficient(a, b);
            if c.is_zero() {
                continue;
            }
            let gap = w.weight_of(a) - w.weight_of(b);
            if !is_nonneg_integer(&gap) || gap.is_zero() {
                return Err(Error::NonIntegralExponent(crate::rat::format_rat(&gap)));
            }
            let e: i32 = gap
                .numer()
                .try_into()
                .map_err(|_| Error::OutOfRange("weight gap exponent too large".into()))?;
            let coeff = c * num_traits::Pow::pow(t.clone(), e);
            if !coeff.is_zero() {
                f = &f + &MultiPoly::from_monomial(ring, b.clone(), coeff);
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Monomial ideal of leading terms of the ideal generated by `gens`.
pub fn initial_ideal(gens: &[MultiPoly], order: &TermOrder) -> Result<MonomialIdeal> {
    let gb = buchberger(gens, order)?;
    if gb.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    let ring = gb.ring().clone();
    Ok(MonomialIdeal::new(&ring, gb.leading_monomials().to_vec()))
}

/// Chart presentation of the degree-`m` part of the vanishing ideal of
/// affine plane points `(x, y) -> (x : y : 1)`, for a base ideal in three
/// variables. Returns `None` when the subspace misses the chart (its
/// reduced basis is not pivoted on the member monomials).
pub fn plane_points_chart(
    base: &MonomialIdeal,
    points: &[(Rat, Rat)],
) -> Result<Option<ChartPoint>> {
    if base.nvars() != 3 {
        return Err(Error::OutOfRange(
            "plane point charts need a three-variable ring".into(),
        ));
    }
    let origin = ChartPoint::origin(base)?;
    let m = origin.degree();
    let members = origin.members().to_vec();
    let standard = origin.standard().to_vec();
    let columns: Vec<Monomial> = members.iter().chain(&standard).cloned().collect();

    let mut eval = QMatrix::zeros(points.len(), columns.len());
    for (r, (px, py)) in points.iter().enumerate() {
        for (c, mon) in columns.iter().enumerate() {
            let mut v = Rat::one();
            for _ in 0..mon.exp(0) {
                v *= px;
            }
            for _ in 0..mon.exp(1) {
                v *= py;
            }
            eval.set(r, c, v);
        }
    }
    let kernel = eval.kernel_basis();
    if kernel.len() < members.len() {
        return Ok(None);
    }
    let reduced = QMatrix::from_rows(kernel)?.rref();
    if reduced.pivots[..members.len()] != (0..members.len()).collect::<Vec<_>>()[..] {
        return Ok(None);
    }
    let mut coeffs = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in standard.iter().enumerate() {
            let c = reduced.matrix.get(i, members.len() + j).clone();
            if !c.is_zero() {
                coeffs.push(((a.clone(), b.clone()), c));
            }
        }
    }
    Some(ChartPoint::new(base, coeffs)).transpose()
}

/// A seeded random chart point with coefficients `p/q`, `p in -3..=3`,
/// `q in 1..=3`.
pub fn random_chart_point(base: &MonomialIdeal, rng: &mut dyn RngCore) -> Result<ChartPoint> {
    let origin = ChartPoint::origin(base)?;
    let mut coeffs = Vec::new();
    for a in origin.members() {
        for b in origin.standard() {
            let p = (rng.next_u32() % 7) as i64 - 3;
            let q = (rng.next_u32() % 3) as i64 + 1;
            if p != 0 {
                coeffs.push(((a.clone(), b.clone()), crate::rat::rat(p, q)));
            }
        }
    }
    ChartPoint::new(base, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::ring::PolyRing;

    fn mon(ring: &PolyRing, s: &str) -> Monomial {
        crate::poly::MultiPoly::parse(ring, s)
            .unwrap()
            .terms()
            .next()
            .unwrap()
            .0
            .clone()
    }

    fn ideal(ring: &PolyRing, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(ring, gens.iter().map(|s| mon(ring, s)).collect())
    }

    fn three_conics(ring: &PolyRing) -> MonomialIdeal {
        ideal(ring, &["x^2", "x*y", "y^2"])
    }

    #[test]
    fn origin_generators_are_the_monomials() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let origin = ChartPoint::origin(&j).unwrap();
        let gens = origin.generators();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0], MultiPoly::parse(&r3, "x^2").unwrap());
        assert_eq!(gens[2], MultiPoly::parse(&r3, "y^2").unwrap());
    }

    #[test]
    fn chart_point_rejects_bad_keys() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let bad = ChartPoint::new(
            &j,
            vec![((mon(&r3, "x^2"), mon(&r3, "x*y")), rat_int(1))],
        );
        assert!(matches!(bad, Err(Error::BadChartKey { .. })));
    }

    #[test]
    fn dim_in_degree_consistency_with_hilbert_function() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let origin = ChartPoint::origin(&j).unwrap();
        let gens = origin.generators();
        for d in 2..=5 {
            assert_eq!(dim_in_degree(&gens, d).unwrap(), j.hilbert_function(d));
        }
        assert!(dim_in_degree(&gens, 1).is_err());
        let mixed = vec![
            MultiPoly::parse(&r3, "x^2").unwrap(),
            MultiPoly::parse(&r3, "x + y").unwrap(),
        ];
        assert!(matches!(dim_in_degree(&mixed, 3), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn origin_persists() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let origin = ChartPoint::origin(&j).unwrap();
        let verdict = local_persistence_check(&origin, 4).unwrap();
        assert!(verdict.persists);
        assert_eq!(verdict.dim_expected, 7);
        for (_, di, dj) in &verdict.checked_degrees {
            assert_eq!(di, dj);
        }
    }

    #[test]
    fn truncation_first_for_mixed_degrees() {
        let r3 = PolyRing::standard(3);
        let l = ideal(&r3, &["x", "y^3"]);
        let point = ChartPoint::origin(&l).unwrap();
        assert_eq!(point.degree(), 3);
        assert_eq!(point.members().len(), 7);
        assert_eq!(point.base().equigenerated_degree(), Some(3));
    }

    #[test]
    fn flat_family_endpoints() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let a = mon(&r3, "x^2");
        let b = mon(&r3, "z^2");
        let point = ChartPoint::new(&j, vec![((a, b), rat_int(3))]).unwrap();
        let w = WeightVector::from_ints(&[2, 1, 0]);
        let at_one = flat_family_fiber(&point, &w, &rat_int(1)).unwrap();
        assert_eq!(at_one, point.generators());
        let at_zero = flat_family_fiber(&point, &w, &rat_int(0)).unwrap();
        assert_eq!(at_zero, ChartPoint::origin(&j).unwrap().generators());
        // w.(A - B) for A = x^2, B = z^2 is 4: coefficient picks up (1/2)^4
        let at_half = flat_family_fiber(&point, &w, &rat(1, 2)).unwrap();
        let coeff = at_half[0].coeff(&mon(&r3, "z^2"));
        assert_eq!(coeff, rat(3, 16));
    }

    #[test]
    fn flat_family_needs_certifying_weight_and_integral_gaps() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let point = ChartPoint::origin(&j).unwrap();
        // (1,1,1) gives every monomial of a degree the same weight: refuted
        let w = WeightVector::from_ints(&[1, 1, 1]);
        assert!(matches!(
            flat_family_fiber(&point, &w, &rat_int(1)),
            Err(Error::NotExtremal)
        ));
        // (3/2, 1, 0) certifies (members weigh >= 2, standard <= 3/2) but the
        // gap for the pair (x^2, x*z) is 3 - 3/2 = 3/2, not an integer
        let frac = WeightVector::new(vec![rat(3, 2), rat_int(1), rat_int(0)]);
        assert!(check_extremal(&j, &frac).unwrap().is_certified());
        let a = mon(&r3, "x^2");
        let b = mon(&r3, "x*z");
        let p2 = ChartPoint::new(&j, vec![((a, b), rat_int(1))]).unwrap();
        assert!(matches!(
            flat_family_fiber(&p2, &frac, &rat_int(2)),
            Err(Error::NonIntegralExponent(_))
        ));
    }

    #[test]
    fn initial_ideal_examples() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let gens = ChartPoint::origin(&j).unwrap().generators();
        assert_eq!(initial_ideal(&gens, &TermOrder::DegRevLex).unwrap(), j);
        let single = vec![MultiPoly::parse(&r3, "x^2 - y*z").unwrap()];
        let init = initial_ideal(&single, &TermOrder::Lex).unwrap();
        assert_eq!(init, ideal(&r3, &["x^2"]));
        assert!(initial_ideal(&[MultiPoly::zero(&r3)], &TermOrder::Lex).is_err());
    }

    #[test]
    fn three_point_charts_persist() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let pts = [
            (rat_int(1), rat_int(2)),
            (rat_int(3), rat_int(5)),
            (rat_int(-1), rat_int(1)),
        ];
        let point = plane_points_chart(&j, &pts).unwrap().expect("in chart");
        let verdict = local_persistence_check(&point, 3).unwrap();
        assert!(verdict.persists);
        assert_eq!(verdict.dim_actual, 7);
        // all ten chart equations of the worked example vanish here, so the
        // generators really cut out the three points
        for (px, py) in &pts {
            for f in point.generators() {
                let v = f
                    .evaluate(&[px.clone(), py.clone(), rat_int(1)])
                    .unwrap();
                assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn two_point_rig_fails_persistence() {
        let r3 = PolyRing::standard(3);
        let j = three_conics(&r3);
        let pts = [(rat_int(1), rat_int(2)), (rat_int(3), rat_int(5))];
        let point = plane_points_chart(&j, &pts).unwrap().expect("in chart");
        // frozen coefficients of the rank-8 rig
        assert_eq!(point.coefficient(&mon(&r3, "x^2"), &mon(&r3, "y*z")), rat(-8, 3));
        assert_eq!(point.coefficient(&mon(&r3, "x^2"), &mon(&r3, "z^2")), rat(13, 3));
        assert_eq!(point.coefficient(&mon(&r3, "y^2"), &mon(&r3, "y*z")), rat_int(-7));
        let verdict = local_persistence_check(&point, 3).unwrap();
        assert!(!verdict.persists);
        assert_eq!(verdict.dim_actual, 8);
        assert!(verdict
            .checked_degrees
            .iter()
            .any(|(_, di, dj)| di != dj));
    }
}
