use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{FieldElem, Scalar};

pub const NVARS: usize = 4;

/// The global, fixed variable order. `L` stands for the central group
/// element lambda; `X` is the skew-Laurent variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A = 0,
    B = 1,
    L = 2,
    X = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::B, Var::L, Var::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::L => "L",
            Var::X => "X",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then exponents compared in variable order a, b, L, X).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0.iter()) {
            *x += y;
        }
        Monomial(m)
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0.iter()) {
            if *x < *y {
                return None;
            }
            *x -= y;
        }
        Some(Monomial(m))
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub(crate) fn text(&self) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match self.exp(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{}", v.name(), e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.text())
        }
    }
}

/// Sparse multivariate polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> MultiPoly<F> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(F::from_i64(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), F::one())
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> F {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (big, small) = if self.terms.len() >= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut r = big.clone();
        for (m, c) in &small.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.neg());
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        if let Some(c) = g.as_constant() {
            return Some(self.scale(&c.inv()?));
        }
        let (lm, lc) = g.leading().map(|(m, c)| (*m, c.clone()))?;
        let lc_inv = lc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((m, c)) = r.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(&lm)?;
            let qc = c.mul(&lc_inv);
            r = r.sub(&g.mul_term(&qm, &qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Coefficients with respect to `v`: `self = sum_k out[k] * v^k`.
    pub fn to_univariate(&self, v: Var) -> Vec<Self> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &[Self]) -> Self {
        let mut r = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(v, k as u32);
            for (m, x) in &c.terms {
                r.add_term(m.mul(&shift), x.clone());
            }
        }
        r
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &Self) -> Self {
        if !self.involves(v) {
            return self.clone();
        }
        let coeffs = self.to_univariate(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    /// `v -> v + c`.
    pub fn shift(&self, v: Var, c: &F) -> Self {
        self.substitute(v, &Self::var(v).add(&Self::constant(c.clone())))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Evaluates with every variable replaced by a field element.
    pub fn eval<E: FieldElem>(&self, point: &[E; NVARS], lift: impl Fn(&F) -> E) -> E {
        let one = point[0].one_like();
        let mut acc = one.zero_like();
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t = t.mul(&point[v.index()].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Terms in descending order, printed with the given coefficient
    /// formatter.
    pub(crate) fn text_with(&self, coeff: impl Fn(&F) -> (bool, String)) -> String {
        let terms: Vec<(bool, String, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let (neg, mag) = coeff(c);
                (neg, mag, m.text())
            })
            .collect();
        join_terms(&terms)
    }
}

/// Joins `(negative, |coefficient|, monomial)` triples into `2*a^2-b+1` form.
pub(crate) fn join_terms(terms: &[(bool, String, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (neg, mag, mono)) in terms.iter().enumerate() {
        if *neg {
            s.push('-');
        } else if idx > 0 {
            s.push('+');
        }
        if mono.is_empty() {
            s.push_str(mag);
        } else if mag == "1" {
            s.push_str(mono);
        } else {
            s.push_str(mag);
            s.push('*');
            s.push_str(mono);
        }
    }
    s
}

pub(crate) fn scalar_sign_text<F: Scalar>(c: &F) -> (bool, String) {
    if c.is_negative() {
        (true, c.neg().to_string())
    } else {
        (false, c.to_string())
    }
}

impl<F: Scalar> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text_with(scalar_sign_text))
    }
}

impl<F: Scalar> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
