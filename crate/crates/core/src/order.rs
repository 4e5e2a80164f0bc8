//! Term orders: lexicographic, degree-reverse-lexicographic, and
//! weight-refined orders.
//!
//! All orders here satisfy `x_0 > x_1 > ... > x_n` and are multiplicative,
//! so each one linearly refines the Borel partial order. Weighted orders
//! compare total degree first (the weight only ever has to separate
//! monomials of one fixed degree), then the weight, then the tiebreak.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rat::{format_rat, parse_rat, Rat};

/// One rational weight per variable. Comparison uses an integer rescaling of
/// the weights (common denominator cleared once, at construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Rat>,
    scaled: Vec<BigInt>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rat>) -> Self {
        let mut denom_lcm = BigInt::one();
        for w in &weights {
            denom_lcm = denom_lcm.lcm(w.denom());
        }
        let scaled = weights
            .iter()
            .map(|w| w.numer() * (&denom_lcm / w.denom()))
            .collect();
        WeightVector { weights, scaled }
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        Self::new(weights.iter().map(|&w| crate::rat::rat_int(w)).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// `w . A` as an exact rational.
    pub fn weight_of(&self, m: &Monomial) -> Rat {
        let mut acc = Rat::zero();
        for (w, &e) in self.weights.iter().zip(m.exps()) {
            if e > 0 {
                acc += w * Rat::from_integer(BigInt::from(e));
            }
        }
        acc
    }

    fn scaled_weight_of(&self, m: &Monomial) -> BigInt {
        let mut acc = BigInt::zero();
        for (w, &e) in self.scaled.iter().zip(m.exps()) {
            if e > 0 {
                acc += w * BigInt::from(e);
            }
        }
        acc
    }

    /// The same weight direction with integer entries (denominators cleared).
    pub fn integer_scaled(&self) -> WeightVector {
        WeightVector::new(self.scaled.iter().map(|s| Rat::from_integer(s.clone())).collect())
    }

    pub fn is_non_increasing(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn parse(s: &str) -> Result<WeightVector> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.is_empty() || parts.iter().any(|p| p.trim().is_empty()) {
            return Err(Error::Parse(format!("invalid weight vector `{s}`")));
        }
        Ok(WeightVector::new(
            parts.iter().map(|p| parse_rat(p)).collect::<Result<_>>()?,
        ))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(format_rat).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Tiebreak used below a weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    DegRevLex,
}

/// A monomial total order.
#[derive(Clone, Debug, PartialEq)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    Weighted {
        weight: WeightVector,
        tiebreak: BaseOrder,
    },
}

impl TermOrder {
    pub fn weighted(weight: WeightVector, tiebreak: BaseOrder) -> Self {
        TermOrder::Weighted { weight, tiebreak }
    }

    /// Compares two monomials of the same ring. Panics on an exponent-length
    /// mismatch; use [`TermOrder::try_compare`] at trust boundaries.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "term-order comparison across rings");
        match self {
            TermOrder::Lex => lex_cmp(a, b),
            TermOrder::DegRevLex => degrevlex_cmp(a, b),
            TermOrder::Weighted { weight, tiebreak } => {
                assert_eq!(a.nvars(), weight.len(), "weight length mismatch");
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    c => return c,
                }
                match weight.scaled_weight_of(a).cmp(&weight.scaled_weight_of(b)) {
                    Ordering::Equal => {}
                    c => return c,
                }
                match tiebreak {
                    BaseOrder::Lex => lex_cmp(a, b),
                    BaseOrder::DegRevLex => degrevlex_cmp(a, b),
                }
            }
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::RingMismatch(format!(
                "monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        if let TermOrder::Weighted { weight, .. } = self {
            if weight.len() != a.nvars() {
                return Err(Error::OutOfRange(format!(
                    "weight vector of length {} against {} variables",
                    weight.len(),
                    a.nvars()
                )));
            }
        }
        Ok(self.compare(a, b))
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.exps().iter().zip(b.exps()) {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            c => return c,
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        c => return c,
    }
    // Larger is the one whose last differing exponent is smaller.
    for (ea, eb) in a.exps().iter().zip(b.exps()).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            c => return c.reverse(),
        }
    }
    Ordering::Equal
}

impl FromStr for TermOrder {
    type Err = Error;

    /// `lex`, `degrevlex`, or `weight:<w0>,<w1>,...:<tiebreak>`.
    fn from_str(s: &str) -> Result<TermOrder> {
        match s {
            "lex" => return Ok(TermOrder::Lex),
            "degrevlex" => return Ok(TermOrder::DegRevLex),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("weight:") {
            let (ws, tb) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("invalid order spec `{s}`")))?;
            let tiebreak = match tb {
                "lex" => BaseOrder::Lex,
                "degrevlex" => BaseOrder::DegRevLex,
                _ => return Err(Error::Parse(format!("unknown tiebreak `{tb}`"))),
            };
            return Ok(TermOrder::Weighted {
                weight: WeightVector::parse(ws)?,
                tiebreak,
            });
        }
        Err(Error::Parse(format!("unknown term order `{s}`")))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Weighted { weight, tiebreak } => {
                let tb = match tiebreak {
                    BaseOrder::Lex => "lex",
                    BaseOrder::DegRevLex => "degrevlex",
                };
                write!(f, "weight:{weight}:{tb}")
            }
        }
    }
}

/// Positivity of a weight difference `w . (a - b)`, as an exact rational.
pub fn weight_gap(w: &WeightVector, a: &Monomial, b: &Monomial) -> Rat {
    w.weight_of(a) - w.weight_of(b)
}
