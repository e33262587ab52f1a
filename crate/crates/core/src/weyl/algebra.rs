use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::parse::{eval_expr, parse_expr};
use crate::arith::{FieldElem, Scalar, UniPoly, Q};
use crate::error::{Error, Result};

/// `sum c_mn t^m s^n` with `st - ts = 1`, all `t` to the left of all `s`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElem {
    terms: BTreeMap<(u32, u32), Q>,
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn falling(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i))
}

impl WeylElem {
    pub fn zero() -> Self {
        WeylElem::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Q::from_i64(1))
    }

    /// `c t^m s^n`.
    pub fn monomial(m: u32, n: u32, c: Q) -> Self {
        let mut w = Self::zero();
        w.add_term(m, n, c);
        w
    }

    pub fn from_i64(c: i64) -> Self {
        Self::monomial(0, 0, Q::from_i64(c))
    }

    pub fn s() -> Self {
        Self::monomial(0, 1, Q::from_i64(1))
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, Q::from_i64(1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: u32, n: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((m, n)).or_insert_with(|| Q::from_i64(0));
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut r = Self::zero();
        for (&(m, n), x) in &self.terms {
            r.add_term(m, n, x.mul(c));
        }
        r
    }

    /// Largest power of `t`.
    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn parse(s: &str) -> Result<Self> {
        eval_expr(
            &parse_expr(s)?,
            &|sym| match sym {
                "s" => Some(Self::s()),
                "t" => Some(Self::t()),
                _ => None,
            },
            &|v| Self::monomial(0, 0, Q::from_bigint(v)),
        )
    }
}

impl FieldElem for WeylElem {
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
        for (&(m, n), c) in &o.terms {
            r.add_term(m, n, c.clone());
        }
        r
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    /// `s^b t^c = sum_k C(b,k) c!/(c-k)! t^(c-k) s^(b-k)`.
    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                let xy = x.mul(y);
                for k in 0..=b.min(c) {
                    let w = Q::from_bigint(&(binom(b, k) * falling(c, k)));
                    r.add_term(a + c - k, b - k + d, xy.mul(&w));
                }
            }
        }
        r
    }
    fn neg(&self) -> Self {
        self.scale(&Q::from_i64(-1))
    }
    /// Only nonzero constants are invertible.
    fn inv(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((&(0, 0), c)) if self.terms.len() == 1 => Some(Self::monomial(0, 0, c.inv()?)),
            _ => None,
        }
    }
}

fn mono_text(m: u32, n: u32) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("t", m), ("s", n)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(bool, String, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(&(m, n), c)| {
                let neg = c.is_negative();
                let mag = if neg { c.neg() } else { c.clone() };
                (neg, mag.to_string(), mono_text(m, n))
            })
            .collect();
        f.write_str(&crate::arith::join_terms(&terms))
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Linear involution `s* = alpha s + beta t`, `t* = gamma s - alpha t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylInvolutionSpec {
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Q,
}

/// The two involutions used by the scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum NamedWeylInvolution {
    /// `s* = t`, `t* = s`.
    Swap,
    /// `s* = s`, `t* = -t`.
    Sign,
}

impl WeylInvolutionSpec {
    pub fn new(alpha: Q, beta: Q, gamma: Q) -> Result<Self> {
        let lhs = alpha.mul(&alpha).add(&beta.mul(&gamma));
        if !lhs.is_one() {
            return Err(Error::InvalidSpec(format!(
                "alpha^2 + beta*gamma = {lhs}, expected 1"
            )));
        }
        Ok(WeylInvolutionSpec { alpha, beta, gamma })
    }

    pub fn named(n: NamedWeylInvolution) -> Self {
        let q = Q::from_i64;
        match n {
            NamedWeylInvolution::Swap => Self::new(q(0), q(1), q(1)),
            NamedWeylInvolution::Sign => Self::new(q(1), q(0), q(0)),
        }
        .expect("valid")
    }

    pub fn s_image(&self) -> WeylElem {
        WeylElem::s()
            .scale(&self.alpha)
            .add(&WeylElem::t().scale(&self.beta))
    }

    pub fn t_image(&self) -> WeylElem {
        WeylElem::s()
            .scale(&self.gamma)
            .sub(&WeylElem::t().scale(&self.alpha))
    }

    /// `(t^m s^n)* = (s*)^n (t*)^m`, extended linearly.
    pub fn apply(&self, u: &WeylElem) -> WeylElem {
        let (ss, ts) = (self.s_image(), self.t_image());
        let mut acc = WeylElem::zero();
        for (&(m, n), c) in u.terms() {
            acc = acc.add(&ss.pow(n as u64).mul(&ts.pow(m as u64)).scale(c));
        }
        acc
    }
}

/// Applies `u` to the polynomial `f`, with `s` acting as `d/dX` and `t` as
/// multiplication by `X`. `bound` caps the degree of every intermediate.
pub fn weyl_action_oracle(u: &WeylElem, f: &UniPoly<Q>, bound: usize) -> Result<UniPoly<Q>> {
    let deg_f = f.degree().unwrap_or(0);
    if deg_f + u.t_degree() as usize >= bound {
        return Err(Error::DegreeOverflow(bound));
    }
    let mut acc = UniPoly::zero();
    for (&(m, n), c) in u.terms() {
        let mut g = f.clone();
        for _ in 0..n {
            g = g.derivative();
        }
        let shifted = UniPoly::monomial(m as usize, Q::from_i64(1)).mul(&g);
        acc = acc.add(&shifted.scale(c));
    }
    Ok(acc)
}
