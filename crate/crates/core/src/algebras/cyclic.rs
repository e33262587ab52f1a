use std::fmt;
use std::sync::{Arc, OnceLock};

use super::quat::basis_text;
use super::CenterMap;
use crate::arith::parse::{eval_expr, parse_expr};
use crate::arith::{ExtDescriptor, ExtElem, FieldElem, Gf3, RatFunc, Scalar, SqMatrix, Var};
use crate::error::{Error, Result};

/// The field `K(i)`, `i^3 - i = a`, over `K = GF(3)(a,b)`.
pub fn field() -> &'static Arc<ExtDescriptor<Gf3>> {
    static FIELD: OnceLock<Arc<ExtDescriptor<Gf3>>> = OnceLock::new();
    FIELD.get_or_init(ExtDescriptor::artin_schreier)
}

/// `sum_q c_q(i) j^q` with `j^3 = b` and `j f(i) = f(i+2) j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    c: [ExtElem<Gf3>; 3],
}

/// `f(i) -> f(i + 2k)`, the action of conjugation by `j^k`.
fn shift(x: &ExtElem<Gf3>, k: usize) -> ExtElem<Gf3> {
    if k.is_multiple_of(3) || x.as_base().is_some() {
        return x.clone();
    }
    let g = ExtElem::generator(field()).add(&ExtElem::from_i64(field(), 2 * k as i64));
    x.eval_with(&g, |c| ExtElem::from_base(field(), c.clone()))
}

impl CycElem {
    pub fn new(c0: ExtElem<Gf3>, c1: ExtElem<Gf3>, c2: ExtElem<Gf3>) -> Self {
        CycElem { c: [c0, c1, c2] }
    }

    pub fn from_field(x: ExtElem<Gf3>) -> Self {
        let z = x.zero_like();
        Self::new(x, z.clone(), z)
    }

    pub fn scalar(x: RatFunc<Gf3>) -> Self {
        Self::from_field(ExtElem::from_base(field(), x))
    }

    pub fn from_i64(v: i64) -> Self {
        Self::scalar(RatFunc::from_i64(v))
    }

    pub fn i() -> Self {
        Self::from_field(ExtElem::generator(field()))
    }

    pub fn j() -> Self {
        let z = ExtElem::from_i64(field(), 0);
        Self::new(z.clone(), ExtElem::from_i64(field(), 1), z)
    }

    /// Coefficient of `j^q`, an element of `K(i)`.
    pub fn coeffs(&self) -> &[ExtElem<Gf3>; 3] {
        &self.c
    }

    pub fn scale(&self, x: &ExtElem<Gf3>) -> Self {
        CycElem {
            c: self.c.clone().map(|y| x.mul(&y)),
        }
    }

    /// Right regular representation on the left `K(i)`-basis
    /// `{1, j, j^2}`: row `k` holds the coordinates of `j^k * self`.
    pub fn reg_rep(&self) -> SqMatrix<ExtElem<Gf3>> {
        let b = RatFunc::var(Var::B);
        SqMatrix::from_fn(3, |k, t| {
            let s = (t + 3 - k) % 3;
            let e = shift(&self.c[s], k);
            if k + s >= 3 {
                e.scale(&b)
            } else {
                e
            }
        })
    }

    pub fn try_inv(&self) -> Result<Self> {
        let m = self.reg_rep().inverse().map_err(|_| Error::NotInvertible)?;
        Ok(Self::new(
            m.get(0, 0).clone(),
            m.get(0, 1).clone(),
            m.get(0, 2).clone(),
        ))
    }

    /// Parses expressions in `i`, `j`, `a`, `b` with integer coefficients.
    pub fn parse(s: &str) -> Result<Self> {
        eval_expr(
            &parse_expr(s)?,
            &|sym| match sym {
                "i" => Some(Self::i()),
                "j" => Some(Self::j()),
                _ => Var::from_name(sym).map(|v| Self::scalar(RatFunc::var(v))),
            },
            &|v| Self::scalar(RatFunc::constant(Gf3::from_bigint(v))),
        )
    }
}

impl FieldElem for CycElem {
    fn zero_like(&self) -> Self {
        Self::from_i64(0)
    }
    fn one_like(&self) -> Self {
        Self::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&o.c) {
            *x = x.add(y);
        }
        CycElem { c }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let b = RatFunc::var(Var::B);
        let mut out = self.c[0].zero_like();
        let mut acc = [out.clone(), out.clone(), out.clone()];
        for q in 0..3 {
            if self.c[q].is_zero() {
                continue;
            }
            for s in 0..3 {
                if o.c[s].is_zero() {
                    continue;
                }
                let mut t = self.c[q].mul(&shift(&o.c[s], q));
                if q + s >= 3 {
                    t = t.scale(&b);
                }
                acc[(q + s) % 3] = acc[(q + s) % 3].add(&t);
            }
        }
        out = acc[0].clone();
        CycElem {
            c: [out, acc[1].clone(), acc[2].clone()],
        }
    }
    fn neg(&self) -> Self {
        CycElem {
            c: self.c.clone().map(|x| x.neg()),
        }
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&basis_text(
            self.c.iter().map(|x| x.to_string()).collect(),
            &["", "j", "j^2"],
        ))
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A semilinear anti-automorphism of the cyclic algebra.
#[derive(Clone, Debug)]
pub struct CycStar {
    pub sigma: CenterMap<Gf3>,
    pub star_i: CycElem,
    pub star_j: CycElem,
}

impl CycStar {
    pub fn apply(&self, x: &CycElem) -> CycElem {
        let mut acc = CycElem::from_i64(0);
        let mut sj = CycElem::from_i64(1);
        for cq in &x.c {
            let mut si = CycElem::from_i64(1);
            for e in cq.coeffs() {
                if !e.is_zero() {
                    let s = CycElem::scalar(self.sigma.apply(e));
                    acc = acc.add(&s.mul(&sj).mul(&si));
                }
                si = si.mul(&self.star_i);
            }
            sj = sj.mul(&self.star_j);
        }
        acc
    }

    pub fn validate(&self) -> Result<()> {
        let a = CycElem::scalar(self.sigma.apply(&RatFunc::var(Var::A)));
        let b = CycElem::scalar(self.sigma.apply(&RatFunc::var(Var::B)));
        let (si, sj) = (&self.star_i, &self.star_j);
        let one = CycElem::from_i64(1);
        let ok = si.mul(si).mul(si).sub(si) == a
            && sj.mul(sj).mul(sj) == b
            && sj.mul(si) == si.add(&one).mul(sj)
            && self.apply(si) == CycElem::i()
            && self.apply(sj) == CycElem::j()
            && self.sigma.then(&self.sigma).is_identity();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(
                "transported map is not an involution of the cyclic algebra".into(),
            ))
        }
    }

    pub fn is_symmetric(&self, x: &CycElem) -> bool {
        self.apply(x) == *x
    }

    pub fn is_unitary(&self, x: &CycElem) -> bool {
        x.mul(&self.apply(x)).is_one()
    }
}
