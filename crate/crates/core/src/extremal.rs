//! Extremal ideals: certify that the degree-`m` monomials of a Borel-fixed
//! ideal beat every standard monomial under a weight order, or find such a
//! weight, or prove that none exists.
//!
//! For a non-increasing weight the scan collapses to the Borel-minimal
//! monomials of the ideal against the Borel-maximal standard monomials,
//! since moving exponent weight to an earlier variable can only raise a
//! non-increasing weight. The full scan stays available as a reference.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fm::{self, Feasibility, LinearConstraint};
use crate::ideal::{borel_maximal_standard, borel_minimal_members, MonomialIdeal};
use crate::monomial::Monomial;
use crate::order::{TermOrder, WeightVector};
use crate::rat::{rat_int, Rat};

/// A verified strict separation `min_ideal_weight > max_standard_weight`.
/// `max_standard_weight` is `None` when the degree-`m` piece has no standard
/// monomials at all (the separation is then vacuous).
#[derive(Clone, Debug)]
pub struct ExtremalityCertificate {
    pub weight: WeightVector,
    pub min_ideal_weight: Rat,
    pub max_standard_weight: Option<Rat>,
    pub min_witness: Monomial,
    pub max_witness: Option<Monomial>,
}

/// A weight that fails to separate, with witnesses.
#[derive(Clone, Debug)]
pub struct ExtremalityRefutation {
    pub weight: WeightVector,
    pub ideal_monomial: Monomial,
    pub ideal_weight: Rat,
    pub standard_monomial: Monomial,
    pub standard_weight: Rat,
}

#[derive(Clone, Debug)]
pub enum ExtremalityCheck {
    Certified(ExtremalityCertificate),
    Refuted(ExtremalityRefutation),
}

impl ExtremalityCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, ExtremalityCheck::Certified(_))
    }
}

/// One inequality of the feasibility system behind [`find_extremal_weight`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalConstraint {
    /// `w . (ideal - standard) >= 1`.
    Separation { ideal: Monomial, standard: Monomial },
    /// `w_i >= w_{i+1}`.
    NonIncreasing { i: usize },
    /// `w_n >= 0`.
    LastNonNegative,
}

impl ExtremalConstraint {
    pub fn render(&self, ideal: &MonomialIdeal) -> String {
        let ring = ideal.ring();
        match self {
            ExtremalConstraint::Separation { ideal: a, standard: b } => {
                format!("w.({}) > w.({})", a.render(ring), b.render(ring))
            }
            ExtremalConstraint::NonIncreasing { i } => format!(
                "w({}) >= w({})",
                ring.var_name(*i),
                ring.var_name(*i + 1)
            ),
            ExtremalConstraint::LastNonNegative => {
                format!("w({}) >= 0", ring.var_name(ring.nvars() - 1))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum WeightSearch {
    Found {
        weight: WeightVector,
        certificate: ExtremalityCertificate,
    },
    Infeasible {
        conflict: Vec<ExtremalConstraint>,
    },
}

impl WeightSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, WeightSearch::Found { .. })
    }
}

impl fmt::Display for ExtremalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.max_standard_weight {
            Some(max) => write!(
                f,
                "certified: weight {} separates {} > {}",
                self.weight, self.min_ideal_weight, max
            ),
            None => write!(
                f,
                "certified vacuously: no standard monomials in the generator degree"
            ),
        }
    }
}

fn prepare(ideal: &MonomialIdeal, weight: Option<&WeightVector>) -> Result<u32> {
    if let Some(v) = ideal.borel_violation() {
        return Err(Error::NotBorelFixed {
            gen: v.gen.render(ideal.ring()),
            missing_factor: v.missing.render(ideal.ring()),
        });
    }
    let m = ideal.max_gen_degree().ok_or(Error::ZeroIdeal)?;
    if let Some(w) = weight {
        if w.len() != ideal.nvars() {
            return Err(Error::OutOfRange(format!(
                "weight vector of length {} for {} variables",
                w.len(),
                ideal.nvars()
            )));
        }
    }
    Ok(m)
}

fn scan(
    ideal: &MonomialIdeal,
    w: &WeightVector,
    ideal_monomials: &[Monomial],
    standard_monomials: &[Monomial],
) -> ExtremalityCheck {
    let (min_witness, min_ideal_weight) = ideal_monomials
        .iter()
        .map(|m| (m, w.weight_of(m)))
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(m, v)| (m.clone(), v))
        .expect("nonzero ideal has degree-m monomials");
    let max = standard_monomials
        .iter()
        .map(|m| (m, w.weight_of(m)))
        .max_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(m, v)| (m.clone(), v));
    match max {
        Some((max_witness, max_weight)) if max_weight >= min_ideal_weight => {
            ExtremalityCheck::Refuted(ExtremalityRefutation {
                weight: w.clone(),
                ideal_monomial: min_witness,
                ideal_weight: min_ideal_weight,
                standard_monomial: max_witness,
                standard_weight: max_weight,
            })
        }
        Some((max_witness, max_weight)) => {
            ExtremalityCheck::Certified(ExtremalityCertificate {
                weight: w.clone(),
                min_ideal_weight,
                max_standard_weight: Some(max_weight),
                min_witness,
                max_witness: Some(max_witness),
            })
        }
        None => ExtremalityCheck::Certified(ExtremalityCertificate {
            weight: w.clone(),
            min_ideal_weight,
            max_standard_weight: None,
            min_witness,
            max_witness: None,
        }),
    }
}

/// Checks strict weight separation in the top generator degree. Uses the
/// Borel-extremes shortcut when the weight is non-increasing.
pub fn check_extremal(ideal: &MonomialIdeal, w: &WeightVector) -> Result<ExtremalityCheck> {
    let m = prepare(ideal, Some(w))?;
    if w.is_non_increasing() {
        let mins = borel_minimal_members(ideal, m);
        let maxs = borel_maximal_standard(ideal, m);
        Ok(scan(ideal, w, &mins, &maxs))
    } else {
        check_extremal_full(ideal, w)
    }
}

/// Reference implementation scanning every degree-`m` monomial.
pub fn check_extremal_full(ideal: &MonomialIdeal, w: &WeightVector) -> Result<ExtremalityCheck> {
    let m = prepare(ideal, Some(w))?;
    let members = ideal.degree_basis(m);
    let standard = ideal.standard_monomials(m, &TermOrder::Lex);
    Ok(scan(ideal, w, &members, &standard))
}

/// Does every degree-`m` monomial of the ideal beat every degree-`m` standard
/// monomial under `o`? Being a total order, this reduces to comparing the
/// order-minimal member with the order-maximal standard monomial.
pub fn is_extremal_wrt(ideal: &MonomialIdeal, o: &TermOrder) -> Result<bool> {
    let m = prepare(ideal, None)?;
    let members = ideal.degree_basis(m);
    let standard = ideal.standard_monomials(m, &TermOrder::Lex);
    let min_member = members
        .iter()
        .min_by(|a, b| o.compare(a, b))
        .expect("nonzero ideal");
    let Some(max_standard) = standard.iter().max_by(|a, b| o.compare(a, b)) else {
        return Ok(true);
    };
    Ok(o.compare(min_member, max_standard) == std::cmp::Ordering::Greater)
}

/// Searches for a non-increasing nonnegative weight with margin-1 separation
/// `w.(A - B) >= 1` for every Borel-minimal member `A` and Borel-maximal
/// standard monomial `B` of the top degree, by exact Fourier-Motzkin
/// elimination. A found weight is integer-scaled and re-certified; an
/// infeasible system is returned with the conflicting constraint subset.
pub fn find_extremal_weight(ideal: &MonomialIdeal) -> Result<WeightSearch> {
    let m = prepare(ideal, None)?;
    let nv = ideal.nvars();
    let mins = borel_minimal_members(ideal, m);
    let maxs = borel_maximal_standard(ideal, m);

    let mut labels: Vec<ExtremalConstraint> = Vec::new();
    let mut system: Vec<LinearConstraint> = Vec::new();
    for a in &mins {
        for b in &maxs {
            let coeffs: Vec<Rat> = a
                .exps()
                .iter()
                .zip(b.exps())
                .map(|(&ea, &eb)| rat_int(ea as i64 - eb as i64))
                .collect();
            system.push(LinearConstraint::new(coeffs, rat_int(1)));
            labels.push(ExtremalConstraint::Separation {
                ideal: a.clone(),
                standard: b.clone(),
            });
        }
    }
    for i in 0..nv - 1 {
        let mut coeffs = vec![rat_int(0); nv];
        coeffs[i] = rat_int(1);
        coeffs[i + 1] = rat_int(-1);
        system.push(LinearConstraint::new(coeffs, rat_int(0)));
        labels.push(ExtremalConstraint::NonIncreasing { i });
    }
    let mut coeffs = vec![rat_int(0); nv];
    coeffs[nv - 1] = rat_int(1);
    system.push(LinearConstraint::new(coeffs, rat_int(0)));
    labels.push(ExtremalConstraint::LastNonNegative);

    match fm::solve(&system, nv) {
        Feasibility::Infeasible { conflict } => Ok(WeightSearch::Infeasible {
            conflict: conflict.into_iter().map(|i| labels[i].clone()).collect(),
        }),
        Feasibility::Feasible(solution) => {
            let mut denom_lcm = BigInt::one();
            for v in &solution {
                denom_lcm = denom_lcm.lcm(v.denom());
            }
            let scaled: Vec<Rat> = solution
                .iter()
                .map(|v| v * Rat::from_integer(denom_lcm.clone()))
                .collect();
            let weight = WeightVector::new(scaled);
            match check_extremal(ideal, &weight)? {
                ExtremalityCheck::Certified(certificate) => Ok(WeightSearch::Found {
                    weight,
                    certificate,
                }),
                ExtremalityCheck::Refuted(r) => unreachable!(
                    "feasible margin-1 weight must certify, got refutation {r:?}"
                ),
            }
        }
    }
}
