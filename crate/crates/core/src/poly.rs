//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored in a canonical map keyed by exponent vector, so equality,
//! hashing and iteration are deterministic independently of how a polynomial
//! was built. Term-order-sorted views are produced on demand for printing
//! and for the division algorithm.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::rat::{format_rat, Rat};
use crate::ring::PolyRing;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(ring: &PolyRing) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn constant(ring: &PolyRing, c: Rat) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn from_monomial(ring: &PolyRing, m: Monomial, c: Rat) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Self::from_monomial(ring, Monomial::var(i, ring.nvars()), Rat::one())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` if nonzero and every term has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Rat> {
        self.terms.remove(m)
    }

    pub(crate) fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &MultiPoly, mon: &Monomial, c: &Rat) {
        debug_assert!(self.ring.same_ring(&other.ring));
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            self.insert_term(m.mul(mon), k * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mon: &Monomial) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mon), k.clone()))
                .collect(),
        }
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: &TermOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    pub fn make_monic(&self, order: &TermOrder) -> MultiPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Terms sorted descending under `order`.
    pub fn terms_desc(&self, order: &TermOrder) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.compare(b, a));
        v
    }

    /// Evaluates at one rational value per variable.
    pub fn evaluate(&self, values: &[Rat]) -> Result<Rat> {
        if values.len() != self.ring.nvars() {
            return Err(Error::OutOfRange(format!(
                "{} values for {} variables",
                values.len(),
                self.ring.nvars()
            )));
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Total comparison of two polynomials under `order`: compares the
    /// descending term sequences, monomial first, coefficient second; a
    /// proper prefix sorts below. Used for deterministic tie-breaking.
    pub fn compare_under(&self, other: &MultiPoly, order: &TermOrder) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let a = self.terms_desc(order);
        let b = other.terms_desc(order);
        for ((ma, ca), (mb, cb)) in a.iter().zip(&b) {
            match order.compare(ma, mb) {
                Ordering::Equal => {}
                c => return c,
            }
            match ca.cmp(cb) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        a.len().cmp(&b.len())
    }

    pub fn render(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms_desc(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&format_rat(&abs));
            } else if abs.is_one() {
                out.push_str(&m.render(&self.ring));
            } else {
                out.push_str(&format_rat(&abs));
                out.push('*');
                out.push_str(&m.render(&self.ring));
            }
        }
        out
    }

    /// Parses the textual syntax produced by [`MultiPoly::render`]: terms
    /// joined by `+`/`-`, each term `coef*v^e*...` with rational `coef`.
    pub fn parse(ring: &PolyRing, input: &str) -> Result<MultiPoly> {
        Parser {
            ring,
            bytes: input.as_bytes(),
            pos: 0,
            input,
        }
        .parse()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&TermOrder::DegRevLex))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        let mut out = MultiPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_assign_scaled(rhs, m, c);
        }
        out
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    bytes: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} of `{}`", self.pos, self.input))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<MultiPoly> {
        let mut poly = MultiPoly::zero(self.ring);
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.err("empty polynomial"));
        }
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rat::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rat::one()
            }
            _ => Rat::one(),
        };
        loop {
            let (m, c) = self.parse_term()?;
            poly.insert_term(m, c * &sign);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rat::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rat::one();
                }
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
        }
        Ok(poly)
    }

    fn parse_term(&mut self) -> Result<(Monomial, Rat)> {
        let mut coef = Rat::one();
        let mut mon = Monomial::one(self.ring.nvars());
        let mut any = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coef *= self.parse_number()?;
                    any = true;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (i, e) = self.parse_var_power()?;
                    for _ in 0..e {
                        mon = mon.mul_var(i);
                    }
                    any = true;
                }
                _ => return Err(self.err("expected a coefficient or a variable")),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !any {
            return Err(self.err("empty term"));
        }
        Ok((mon, coef))
    }

    fn parse_number(&mut self) -> Result<Rat> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let numer: num_bigint::BigInt = self.input[start..self.pos]
            .parse()
            .map_err(|_| self.err("bad integer"))?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let dstart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if dstart == self.pos {
                return Err(self.err("missing denominator"));
            }
            let denom: num_bigint::BigInt = self.input[dstart..self.pos]
                .parse()
                .map_err(|_| self.err("bad denominator"))?;
            if denom == num_bigint::BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    fn parse_var_power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        let name = &self.input[start..self.pos];
        let i = self
            .ring
            .var_index(name)
            .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
        self.skip_ws();
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let estart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if estart == self.pos {
                return Err(self.err("missing exponent"));
            }
            e = self.input[estart..self.pos]
                .parse()
                .map_err(|_| self.err("bad exponent"))?;
        }
        Ok((i, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn ring3() -> PolyRing {
        PolyRing::standard(3)
    }

    fn p(ring: &PolyRing, s: &str) -> MultiPoly {
        MultiPoly::parse(ring, s).unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        let r = ring3();
        for s in [
            "x^2 - 3/2*y*z + 1",
            "-x + y",
            "5",
            "0",
            "x*y*z",
            "2*x^3 + x^2*y - x^2*z - 7",
        ] {
            let f = p(&r, s);
            assert_eq!(f.render(&TermOrder::Lex), s, "round trip through lex");
        }
    }

    #[test]
    fn parse_oddities() {
        let r = ring3();
        assert_eq!(p(&r, " + x"), p(&r, "x"));
        assert_eq!(p(&r, "2*3*x"), p(&r, "6*x"));
        assert_eq!(p(&r, "x - x"), MultiPoly::zero(&r));
        assert_eq!(p(&r, "1/2*x + 1/2*x"), p(&r, "x"));
        assert!(MultiPoly::parse(&r, "q").is_err());
        assert!(MultiPoly::parse(&r, "x +").is_err());
        assert!(MultiPoly::parse(&r, "").is_err());
        assert!(MultiPoly::parse(&r, "1/0").is_err());
    }

    #[test]
    fn arithmetic() {
        let r = ring3();
        let f = p(&r, "x + y");
        let g = p(&r, "x - y");
        assert_eq!(&f * &g, p(&r, "x^2 - y^2"));
        assert_eq!(&f + &g, p(&r, "2*x"));
        assert_eq!(&f - &f, MultiPoly::zero(&r));
        let h = p(&r, "x^2 + 2*x*y + y^2");
        assert_eq!(&f * &f, h);
    }

    #[test]
    fn leading_terms_and_monic() {
        let r = ring3();
        let f = p(&r, "2*x*y^2 + 3*x^2*z");
        let (lm, lc) = f.leading(&TermOrder::Lex).unwrap();
        assert_eq!(lm, &Monomial::new(vec![2, 0, 1]));
        assert_eq!(lc, &rat_int(3));
        // degrevlex prefers x*y^2 (no z)
        let (lm2, _) = f.leading(&TermOrder::DegRevLex).unwrap();
        assert_eq!(lm2, &Monomial::new(vec![1, 2, 0]));
        let monic = f.make_monic(&TermOrder::Lex);
        assert_eq!(monic.coeff(&Monomial::new(vec![2, 0, 1])), rat_int(1));
        assert_eq!(monic.coeff(&Monomial::new(vec![1, 2, 0])), rat(2, 3));
    }

    #[test]
    fn evaluation() {
        let r = ring3();
        let f = p(&r, "x^2*y - z + 1/3");
        let v = f.evaluate(&[rat_int(2), rat_int(-1), rat(1, 2)]).unwrap();
        assert_eq!(v, rat(-25, 6));
        assert!(f.evaluate(&[rat_int(0)]).is_err());
    }

    #[test]
    fn homogeneity() {
        let r = ring3();
        assert_eq!(p(&r, "x^2 + y*z").homogeneous_degree(), Some(2));
        assert_eq!(p(&r, "x^2 + y").homogeneous_degree(), None);
        assert_eq!(MultiPoly::zero(&r).homogeneous_degree(), None);
    }
}
