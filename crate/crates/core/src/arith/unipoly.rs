use std::fmt;

use super::{Field, FieldElem};

/// Dense univariate polynomial, coefficients stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Field> UniPoly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(E::one())
    }

    pub fn constant(c: E) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: E) -> Self {
        let mut v = vec![E::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> E {
        self.coeffs.get(k).cloned().unwrap_or_else(E::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> E {
        self.coeffs.last().cloned().unwrap_or_else(E::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![E::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&x.mul(y));
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &E) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let linv = d.leading_coeff().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![E::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].mul(&linv);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].sub(&c.mul(dj));
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| {
                    let mut acc = E::zero();
                    for _ in 0..k {
                        acc = acc.add(c);
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: &E) -> E {
        self.eval_with(x, E::clone)
    }

    /// Horner evaluation at `x` in a ring containing the coefficients.
    pub fn eval_with<T: FieldElem>(&self, x: &T, lift: impl Fn(&E) -> T) -> T {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    /// `(g, s, t)` with `s*self + t*o = g` and `g` monic (or zero).
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.leading_coeff().inv().expect("nonzero leading coefficient");
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn map<T: Field>(&self, f: impl Fn(&E) -> T) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<E: Field + fmt::Display> UniPoly<E> {
    /// Descending-degree text with the given variable name.
    pub fn text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let mut ct = c.to_string();
            if mono.is_empty() {
                if !s.is_empty() && !ct.starts_with('-') {
                    s.push('+');
                }
                s.push_str(&ct);
                continue;
            }
            let simple = !ct[1..].contains(['+', '-', '/']);
            let neg = ct.starts_with('-') && simple;
            if neg {
                ct.remove(0);
            }
            if !s.is_empty() || neg {
                s.push(if neg { '-' } else { '+' });
            }
            if ct == "1" {
                s.push_str(&mono);
            } else if simple {
                s.push_str(&format!("{ct}*{mono}"));
            } else {
                s.push_str(&format!("({ct})*{mono}"));
            }
        }
        s
    }
}

impl<E: Field + fmt::Display> fmt::Display for UniPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text("t"))
    }
}

impl<E: Field> fmt::Debug for UniPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// Ring structure; only nonzero constants are invertible.
impl<E: Field> FieldElem for UniPoly<E> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        UniPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UniPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        UniPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Self::constant(self.coeffs[0].inv()?)),
            _ => None,
        }
    }
}
