//! Polynomial ring context: an ordered list of variable names.
//!
//! The index order is the variable order: index 0 is the largest variable
//! (`x_0 > x_1 > ... > x_n` in every term order provided by this crate).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    vars: Vec<String>,
}

/// Shared, immutable ring context. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<Inner>);

impl PolyRing {
    pub fn new(vars: &[&str]) -> Result<Self> {
        Self::from_names(vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_names(vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::Parse("a ring needs at least one variable".into()));
        }
        for v in &vars {
            let mut chars = v.chars();
            let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid variable name `{v}`")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate variable name `{v}`")));
            }
        }
        Ok(PolyRing(Arc::new(Inner { vars })))
    }

    /// `x, y, z, w` for up to four variables, `x0..xn` beyond that.
    pub fn standard(nvars: usize) -> Self {
        let names: Vec<String> = if nvars <= 4 {
            ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (0..nvars).map(|i| format!("x{i}")).collect()
        };
        PolyRing::from_names(names).expect("standard names are valid")
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }

    pub fn check_same(&self, other: &PolyRing) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(PolyRing::new(&[]).is_err());
        assert!(PolyRing::new(&["x", "x"]).is_err());
        assert!(PolyRing::new(&["2x"]).is_err());
        assert!(PolyRing::new(&["x^2"]).is_err());
        assert!(PolyRing::new(&["x", "y_1"]).is_ok());
    }

    #[test]
    fn standard_names() {
        assert_eq!(PolyRing::standard(3).var_names(), &["x", "y", "z"]);
        assert_eq!(PolyRing::standard(5).var_name(4), "x4");
    }
}
