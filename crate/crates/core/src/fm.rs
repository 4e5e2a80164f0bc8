//! Fourier-Motzkin elimination over exact rationals.
//!
//! Solves systems of inequalities `sum_i c_i x_i >= rhs`. Every derived
//! inequality carries the set of original constraint indices it came from,
//! so an infeasible system is reported together with a conflicting subset
//! (for the systems built in this crate that subset is typically a single
//! pair). A feasible system yields one deterministic solution: variables are
//! back-substituted last-eliminated-first, each set to the midpoint of its
//! interval, or one unit inside the finite end when the interval is a ray.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::rat::{rat_int, Rat};

/// `coeffs . x >= rhs`.
#[derive(Clone, Debug)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        LinearConstraint { coeffs, rhs }
    }
}

#[derive(Clone, Debug)]
pub enum Feasibility {
    /// One exact solution of the system.
    Feasible(Vec<Rat>),
    /// Indices of original constraints whose combination is contradictory.
    Infeasible { conflict: Vec<usize> },
}

#[derive(Clone)]
struct Work {
    coeffs: Vec<Rat>,
    rhs: Rat,
    sources: BTreeSet<usize>,
}

/// Runs the elimination. All constraints must have `nvars` coefficients.
pub fn solve(constraints: &[LinearConstraint], nvars: usize) -> Feasibility {
    let mut system: Vec<Work> = constraints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            assert_eq!(c.coeffs.len(), nvars, "constraint arity");
            Work {
                coeffs: c.coeffs.clone(),
                rhs: c.rhs.clone(),
                sources: BTreeSet::from([i]),
            }
        })
        .collect();

    // stages[v] holds the system as it stood before eliminating variable v.
    let mut stages: Vec<Vec<Work>> = Vec::with_capacity(nvars);
    for v in 0..nvars {
        if let Some(w) = system
            .iter()
            .find(|w| w.coeffs.iter().all(|c| c.is_zero()) && w.rhs.is_positive())
        {
            return Feasibility::Infeasible {
                conflict: w.sources.iter().copied().collect(),
            };
        }
        stages.push(system.clone());
        let mut lowers: Vec<Work> = Vec::new();
        let mut uppers: Vec<Work> = Vec::new();
        let mut next: Vec<Work> = Vec::new();
        for w in system {
            if w.coeffs[v].is_positive() {
                lowers.push(normalize(w, v));
            } else if w.coeffs[v].is_negative() {
                uppers.push(normalize(w, v));
            } else {
                next.push(w);
            }
        }
        for lo in &lowers {
            for up in &uppers {
                let coeffs: Vec<Rat> = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(a, b)| a + b)
                    .collect();
                let rhs = &lo.rhs + &up.rhs;
                debug_assert!(coeffs[v].is_zero());
                let sources: BTreeSet<usize> =
                    lo.sources.union(&up.sources).copied().collect();
                if coeffs.iter().all(|c| c.is_zero()) {
                    if rhs.is_positive() {
                        return Feasibility::Infeasible {
                            conflict: sources.iter().copied().collect(),
                        };
                    }
                    continue;
                }
                next.push(Work { coeffs, rhs, sources });
            }
        }
        system = next;
    }
    if let Some(w) = system
        .iter()
        .find(|w| w.coeffs.iter().all(|c| c.is_zero()) && w.rhs.is_positive())
    {
        return Feasibility::Infeasible {
            conflict: w.sources.iter().copied().collect(),
        };
    }

    // Back-substitute, last eliminated variable first.
    let mut solution = vec![Rat::zero(); nvars];
    for v in (0..nvars).rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for w in &stages[v] {
            if w.coeffs[v].is_zero() {
                continue;
            }
            let mut bound = w.rhs.clone();
            for j in v + 1..nvars {
                if !w.coeffs[j].is_zero() {
                    bound -= &w.coeffs[j] * &solution[j];
                }
            }
            bound /= w.coeffs[v].clone();
            if w.coeffs[v].is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        solution[v] = match (lower, upper) {
            (Some(lo), Some(hi)) => {
                debug_assert!(lo <= hi, "projection guarantees a nonempty interval");
                (lo + hi) / rat_int(2)
            }
            (Some(lo), None) => lo + rat_int(1),
            (None, Some(hi)) => hi - rat_int(1),
            (None, None) => Rat::zero(),
        };
    }
    Feasibility::Feasible(solution)
}

/// Scales so that the coefficient of variable `v` is `+-1`.
fn normalize(mut w: Work, v: usize) -> Work {
    let scale = w.coeffs[v].abs();
    for c in w.coeffs.iter_mut() {
        *c /= scale.clone();
    }
    w.rhs /= scale;
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn c(coeffs: &[i64], rhs: i64) -> LinearConstraint {
        LinearConstraint::new(coeffs.iter().map(|&v| rat_int(v)).collect(), rat_int(rhs))
    }

    #[test]
    fn simple_feasible() {
        // x >= 1, -x >= -3 (x <= 3) -> midpoint 2
        let sol = solve(&[c(&[1], 1), c(&[-1], -3)], 1);
        match sol {
            Feasibility::Feasible(x) => assert_eq!(x, vec![rat_int(2)]),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn unbounded_above_takes_lower_plus_one() {
        let sol = solve(&[c(&[1], 5)], 1);
        match sol {
            Feasibility::Feasible(x) => assert_eq!(x, vec![rat_int(6)]),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn contradiction_names_the_pair() {
        // x - 2y >= 1 and -x + 2y >= 1 cannot both hold.
        let sys = [c(&[1, -2], 1), c(&[0, 1], 0), c(&[-1, 2], 1)];
        match solve(&sys, 2) {
            Feasibility::Infeasible { conflict } => assert_eq!(conflict, vec![0, 2]),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn two_variable_midpoints() {
        // 1 <= x <= 3, x <= y <= 4: x first eliminated, y assigned from its stage.
        let sys = [
            c(&[1, 0], 1),
            c(&[-1, 0], -3),
            c(&[-1, 1], 0),
            c(&[0, -1], -4),
        ];
        match solve(&sys, 2) {
            Feasibility::Feasible(x) => {
                assert_eq!(x[1], rat(5, 2)); // y in [1,4] after eliminating x
                assert!(x[0] >= rat_int(1) && x[0] <= x[1].clone());
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn degenerate_zero_row_input() {
        // 0 >= 1 alone is already contradictory.
        match solve(&[c(&[0], 1)], 1) {
            Feasibility::Infeasible { conflict } => assert_eq!(conflict, vec![0]),
            _ => panic!("expected infeasible"),
        }
    }
}
