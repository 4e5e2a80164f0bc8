//! Dense univariate polynomials over the rationals, used for Hilbert
//! polynomials.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rat::{format_rat, Rat};

/// Coefficients ascending by degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn add_scaled(&mut self, other: &UniPoly, s: &Rat) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * s;
        }
        self.trim();
    }

    fn mul_linear(&self, a: &Rat, b: &Rat) -> UniPoly {
        // (a + b*x) * self
        let mut out = vec![Rat::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c * a;
            out[i + 1] += c * b;
        }
        UniPoly::from_coeffs(out)
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(Rat::one());
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul_linear(&-xj.clone(), &Rat::one());
                denom *= xi - xj;
            }
            let s = yi / denom;
            acc.add_scaled(&basis, &s);
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    /// Renders in the variable `d`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{}", format_rat(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", format_rat(&abs))?;
                    }
                    if e == 1 {
                        write!(f, "d")?;
                    } else {
                        write!(f, "d^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn interpolate_constant() {
        let pts = vec![(rat_int(0), rat_int(3)), (rat_int(1), rat_int(3))];
        let p = UniPoly::interpolate(&pts);
        assert_eq!(p, UniPoly::constant(rat_int(3)));
    }

    #[test]
    fn interpolate_binomial() {
        // d -> C(d+2, 2) = (d^2 + 3d + 2)/2 through four points
        let pts: Vec<(Rat, Rat)> = (0..4)
            .map(|d: i64| (rat_int(d), rat_int((d + 2) * (d + 1) / 2)))
            .collect();
        let p = UniPoly::interpolate(&pts);
        assert_eq!(p.coeffs(), &[rat_int(1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p.eval(&rat_int(10)), rat_int(66));
        assert_eq!(p.to_string(), "1/2*d^2 + 3/2*d + 1");
    }
}
