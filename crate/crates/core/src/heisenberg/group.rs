use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::parse::{eval_expr, parse_expr};
use crate::arith::{FieldElem, Scalar, Q};
use crate::error::Result;

/// `lambda^r y^m x^n` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct HeisElem {
    pub r: i64,
    pub m: i64,
    pub n: i64,
}

impl HeisElem {
    pub const IDENTITY: HeisElem = HeisElem { r: 0, m: 0, n: 0 };
    pub const X: HeisElem = HeisElem { r: 0, m: 0, n: 1 };
    pub const Y: HeisElem = HeisElem { r: 0, m: 1, n: 0 };
    pub const LAMBDA: HeisElem = HeisElem { r: 1, m: 0, n: 0 };

    pub fn new(r: i64, m: i64, n: i64) -> Self {
        HeisElem { r, m, n }
    }

    /// Moving `x^n1` past `y^m2` produces `lambda^(n1 m2)`.
    pub fn mul(self, o: Self) -> Self {
        HeisElem {
            r: self.r + o.r + self.n * o.m,
            m: self.m + o.m,
            n: self.n + o.n,
        }
    }

    /// Closed form `lambda^(rs + mn s(s-1)/2) y^(ms) x^(ns)`, any integer `s`.
    pub fn pow(self, s: i64) -> Self {
        HeisElem {
            r: self.r * s + self.m * self.n * s * (s - 1) / 2,
            m: self.m * s,
            n: self.n * s,
        }
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Image in the abelianization, as `(x-exponent, y-exponent)`.
    pub fn project(self) -> (i64, i64) {
        (self.n, self.m)
    }

    pub fn lambda_pow(r: i64) -> Self {
        HeisElem { r, m: 0, n: 0 }
    }
}

impl fmt::Display for HeisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("L", self.r), ("Y", self.m), ("X", self.n)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Finite linear combination of group elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem<F = Q> {
    terms: BTreeMap<HeisElem, F>,
}

impl<F: Scalar> GroupRingElem<F> {
    pub fn zero() -> Self {
        GroupRingElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::group(HeisElem::IDENTITY)
    }

    pub fn group(g: HeisElem) -> Self {
        Self::term(g, F::one())
    }

    pub fn term(g: HeisElem, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        GroupRingElem { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::term(HeisElem::IDENTITY, F::from_i64(c))
    }

    pub fn x() -> Self {
        Self::group(HeisElem::X)
    }

    pub fn y() -> Self {
        Self::group(HeisElem::Y)
    }

    pub fn lambda() -> Self {
        Self::group(HeisElem::LAMBDA)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HeisElem, &F)> {
        self.terms.iter()
    }

    fn add_term(&mut self, g: HeisElem, c: F) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g).or_insert_with(F::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero();
        for (g, x) in &self.terms {
            r.add_term(*g, x.mul(c));
        }
        r
    }

    /// Applies a map on group elements, extended linearly.
    pub fn map_group(&self, f: impl Fn(HeisElem) -> HeisElem) -> Self {
        let mut r = Self::zero();
        for (g, c) in &self.terms {
            r.add_term(f(*g), c.clone());
        }
        r
    }

    /// Parses sums of `c * L^r Y^m X^n` terms (lower-case `x`, `y` are also
    /// accepted).
    pub fn parse(s: &str) -> Result<Self> {
        eval_expr(
            &parse_expr(s)?,
            &|sym| match sym {
                "L" | "lambda" => Some(Self::lambda()),
                "X" | "x" => Some(Self::x()),
                "Y" | "y" => Some(Self::y()),
                _ => None,
            },
            &|v: &BigInt| Self::term(HeisElem::IDENTITY, F::from_bigint(v)),
        )
    }
}

impl<F: Scalar> FieldElem for GroupRingElem<F> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (g, c) in &o.terms {
            r.add_term(*g, c.clone());
        }
        r
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in &o.terms {
                r.add_term(g.mul(*h), c.mul(d));
            }
        }
        r
    }
    fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }
    /// Only nonzero multiples of group elements are inverted.
    fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (g, c) = self.terms.iter().next().unwrap();
        Some(Self::term(g.inv(), c.inv()?))
    }
}

impl<F: Scalar> fmt::Display for GroupRingElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if g.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{mag} * {g}")?;
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for GroupRingElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_rule() {
        let xy = HeisElem::X.mul(HeisElem::Y);
        assert_eq!(xy, HeisElem::new(1, 1, 1));
        let yx = HeisElem::new(0, 1, 1);
        assert_eq!(yx.pow(2), HeisElem::new(1, 2, 2));
        assert_eq!(yx.pow(3), yx.mul(yx).mul(yx));
        assert_eq!(yx.pow(3), HeisElem::new(3, 3, 3));
        assert!(yx.pow(0).is_identity());
    }

    #[test]
    fn text_roundtrip() {
        let u: GroupRingElem = GroupRingElem::parse("1 + X + 2 * L^-1 Y^-1 X - y").unwrap();
        let s = u.to_string();
        assert_eq!(GroupRingElem::parse(&s).unwrap(), u);
        assert_eq!(GroupRingElem::<Q>::parse("x*y").unwrap().to_string(), "L Y X");
    }
}
