//! File formats: ideal files, chart-point files, and weight strings.
//!
//! An ideal file is a JSON object `{"vars": ["x","y","z"], "gens": ["x^2",
//! "x*y"]}`. The same schema carries general polynomial systems (for the
//! Groebner and initial-ideal commands); monomial-ideal consumers insist on
//! single-term generators. A point file maps `"A:B"` monomial-pair keys to
//! rationals, either as JSON integers or as `"p/q"` strings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::persistence::ChartPoint;
use crate::poly::MultiPoly;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::ring::PolyRing;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

impl IdealFile {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn ring(&self) -> Result<PolyRing> {
        PolyRing::from_names(self.vars.clone())
    }

    /// Parses the generators as general polynomials.
    pub fn poly_system(&self) -> Result<(PolyRing, Vec<MultiPoly>)> {
        let ring = self.ring()?;
        let gens = self
            .gens
            .iter()
            .map(|s| MultiPoly::parse(&ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ok((ring, gens))
    }

    /// Parses the generators as monomials (single-term, nonzero coefficient).
    pub fn monomial_ideal(&self) -> Result<MonomialIdeal> {
        let ring = self.ring()?;
        let mut gens = Vec::new();
        for s in &self.gens {
            let p = MultiPoly::parse(&ring, s)?;
            if p.num_terms() != 1 {
                return Err(Error::Parse(format!(
                    "generator `{s}` is not a monomial"
                )));
            }
            let (m, _) = p.terms().next().expect("one term");
            gens.push(m.clone());
        }
        Ok(MonomialIdeal::new(&ring, gens))
    }

    /// Renders an ideal with generators descending in the given order.
    pub fn from_monomial_ideal(ideal: &MonomialIdeal, order: &TermOrder) -> Self {
        let mut gens = ideal.gens().to_vec();
        gens.sort_by(|a, b| order.compare(b, a));
        IdealFile {
            vars: ideal.ring().var_names().to_vec(),
            gens: gens.iter().map(|m| m.render(ideal.ring())).collect(),
        }
    }
}

/// Chart-point file payload: `"member:standard" -> rational`.
pub type PointFile = BTreeMap<String, serde_json::Value>;

fn rational_from_value(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::String(s) => parse_rat(s),
        serde_json::Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}")))?;
            Ok(crate::rat::rat_int(i))
        }
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

fn monomial_from_str(ring: &PolyRing, s: &str) -> Result<Monomial> {
    let p = MultiPoly::parse(ring, s)?;
    if p.num_terms() != 1 {
        return Err(Error::Parse(format!("`{s}` is not a monomial")));
    }
    Ok(p.terms().next().expect("one term").0.clone())
}

/// Builds a chart point over `base` from a parsed point file.
pub fn chart_point_from_file(base: &MonomialIdeal, file: &PointFile) -> Result<ChartPoint> {
    let ring = base.ring();
    let mut coeffs = Vec::new();
    for (key, value) in file {
        let (a, b) = key.split_once(':').ok_or_else(|| {
            Error::Parse(format!("point key `{key}` is not `member:standard`"))
        })?;
        let a = monomial_from_str(ring, a.trim())?;
        let b = monomial_from_str(ring, b.trim())?;
        coeffs.push(((a, b), rational_from_value(value)?));
    }
    ChartPoint::new(base, coeffs)
}

pub fn load_point_file(path: impl AsRef<Path>) -> Result<PointFile> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Renders a chart point back into the file map form.
pub fn point_file_of(point: &ChartPoint) -> PointFile {
    let ring = point.base().ring();
    point
        .coefficients()
        .iter()
        .map(|((a, b), c)| {
            (
                format!("{}:{}", a.render(ring), b.render(ring)),
                serde_json::Value::String(format_rat(c)),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_file_round_trip() {
        let file: IdealFile = serde_json::from_str(
            r#"{"vars": ["x", "y", "z"], "gens": ["x^2", "x*y", "y^2"]}"#,
        )
        .unwrap();
        let ideal = file.monomial_ideal().unwrap();
        assert_eq!(ideal.gens().len(), 3);
        let back = IdealFile::from_monomial_ideal(&ideal, &TermOrder::DegRevLex);
        assert_eq!(back.gens, vec!["x^2", "x*y", "y^2"]);
        let again = back.monomial_ideal().unwrap();
        assert_eq!(again, ideal);
    }

    #[test]
    fn rejects_polynomial_generators_for_monomial_ideals() {
        let file: IdealFile =
            serde_json::from_str(r#"{"vars": ["x", "y"], "gens": ["x + y"]}"#).unwrap();
        assert!(file.monomial_ideal().is_err());
        assert!(file.poly_system().is_ok());
    }

    #[test]
    fn point_file_round_trip() {
        let ring = PolyRing::standard(3);
        let file: IdealFile = serde_json::from_str(
            r#"{"vars": ["x", "y", "z"], "gens": ["x^2", "x*y", "y^2"]}"#,
        )
        .unwrap();
        let base = file.monomial_ideal().unwrap();
        let json = r#"{"x^2:x*z": "1/2", "y^2:z^2": -3}"#;
        let map: PointFile = serde_json::from_str(json).unwrap();
        let point = chart_point_from_file(&base, &map).unwrap();
        let a = monomial_from_str(&ring, "x^2").unwrap();
        let b = monomial_from_str(&ring, "x*z").unwrap();
        assert_eq!(point.coefficient(&a, &b), crate::rat::rat(1, 2));
        let back = point_file_of(&point);
        let reparsed = chart_point_from_file(&base, &back).unwrap();
        assert_eq!(reparsed, point);
    }

    #[test]
    fn bad_point_keys_are_reported() {
        let file: IdealFile = serde_json::from_str(
            r#"{"vars": ["x", "y", "z"], "gens": ["x^2", "x*y", "y^2"]}"#,
        )
        .unwrap();
        let base = file.monomial_ideal().unwrap();
        let map: PointFile =
            serde_json::from_str(r#"{"x^2|x*z": 1}"#).unwrap();
        assert!(chart_point_from_file(&base, &map).is_err());
        let map2: PointFile = serde_json::from_str(r#"{"x^2:x*y": 1}"#).unwrap();
        assert!(matches!(
            chart_point_from_file(&base, &map2),
            Err(Error::BadChartKey { .. })
        ));
    }
}
