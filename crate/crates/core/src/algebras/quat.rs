use std::fmt;

use super::CenterMap;
use crate::arith::parse::{eval_expr, parse_expr};
use crate::arith::{
    ExtDescriptor, ExtElem, Field, FieldElem, RatFunc, Scalar, SqMatrix, Var,
};
use crate::error::{Error, Result};

/// `c0 + c1 i + c2 j + c3 ij` with `i^2 = a`, `j^2 = b`, `ij = -ji`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuatElem<F> {
    c: [RatFunc<F>; 4],
}

/// Which maximal subfield the regular representation is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepField {
    /// `L = F(i)`, basis `{1, j}`.
    L,
    /// `K = F(j)`, basis `{1, i}`.
    K,
}

impl<F: Scalar> QuatElem<F> {
    pub fn new(c0: RatFunc<F>, c1: RatFunc<F>, c2: RatFunc<F>, c3: RatFunc<F>) -> Self {
        QuatElem {
            c: [c0, c1, c2, c3],
        }
    }

    fn basis(k: usize) -> Self {
        let mut c: [RatFunc<F>; 4] = Default::default();
        c[k] = RatFunc::one();
        QuatElem { c }
    }

    pub fn scalar(x: RatFunc<F>) -> Self {
        Self::new(x, RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn from_i64(v: i64) -> Self {
        Self::scalar(RatFunc::from_i64(v))
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn j() -> Self {
        Self::basis(2)
    }

    pub fn ij() -> Self {
        Self::basis(3)
    }

    pub fn coords(&self) -> &[RatFunc<F>; 4] {
        &self.c
    }

    pub fn scale(&self, x: &RatFunc<F>) -> Self {
        QuatElem {
            c: self.c.clone().map(|y| y.mul(x)),
        }
    }

    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.c;
        Self::new(c0.clone(), c1.neg(), c2.neg(), c3.neg())
    }

    /// Reduced norm `c0^2 - a c1^2 - b c2^2 + ab c3^2`.
    pub fn reduced_norm(&self) -> RatFunc<F> {
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let [c0, c1, c2, c3] = &self.c;
        c0.mul(c0)
            .sub(&a.mul(&c1.mul(c1)))
            .sub(&b.mul(&c2.mul(c2)))
            .add(&a.mul(&b).mul(&c3.mul(c3)))
    }

    pub fn try_inv(&self) -> Result<Self> {
        let n = self.reduced_norm();
        let ninv = n.inv().ok_or(Error::ZeroNorm)?;
        Ok(self.conj().scale(&ninv))
    }

    /// Right regular representation as a 2x2 matrix over `L` or `K`.
    pub fn reg_rep(&self, over: RepField) -> SqMatrix<ExtElem<F>> {
        let [al, be, ga, de] = &self.c;
        let (desc, other) = match over {
            RepField::L => (ExtDescriptor::quadratic_a(), RatFunc::var(Var::B)),
            RepField::K => (ExtDescriptor::quadratic_b(), RatFunc::var(Var::A)),
        };
        let nde = de.neg();
        let (p, q) = match over {
            RepField::L => ((al, be), (ga, de)),
            RepField::K => ((al, ga), (be, &nde)),
        };
        let e = |x: &RatFunc<F>, y: &RatFunc<F>| ExtElem::new(&desc, vec![x.clone(), y.clone()]);
        let rows = vec![
            vec![e(p.0, p.1), e(q.0, q.1)],
            vec![
                e(&other.mul(q.0), &other.mul(&q.1.neg())),
                e(p.0, &p.1.neg()),
            ],
        ];
        SqMatrix::new(rows).expect("2x2")
    }

    /// Parses `1+2*i`, `a*i*j`, `(1-b^-1)*j`, ... (`k` is accepted for `ij`).
    pub fn parse(s: &str) -> Result<Self> {
        eval_expr(
            &parse_expr(s)?,
            &|sym| match sym {
                "i" => Some(Self::i()),
                "j" => Some(Self::j()),
                "k" => Some(Self::ij()),
                _ => Var::from_name(sym).map(|v| Self::scalar(RatFunc::var(v))),
            },
            &|v| Self::scalar(RatFunc::constant(F::from_bigint(v))),
        )
    }
}

impl<F: Scalar> Default for QuatElem<F> {
    fn default() -> Self {
        Self::from_i64(0)
    }
}

impl<F: Scalar> FieldElem for QuatElem<F> {
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
        QuatElem { c }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let [x0, x1, x2, x3] = &self.c;
        let [y0, y1, y2, y3] = &o.c;
        let z0 = x0
            .mul(y0)
            .add(&a.mul(&x1.mul(y1)))
            .add(&b.mul(&x2.mul(y2)))
            .sub(&a.mul(&b).mul(&x3.mul(y3)));
        let z1 = x0
            .mul(y1)
            .add(&x1.mul(y0))
            .add(&b.mul(&x3.mul(y2).sub(&x2.mul(y3))));
        let z2 = x0
            .mul(y2)
            .add(&x2.mul(y0))
            .add(&a.mul(&x1.mul(y3).sub(&x3.mul(y1))));
        let z3 = x0
            .mul(y3)
            .add(&x3.mul(y0))
            .add(&x1.mul(y2))
            .sub(&x2.mul(y1));
        Self::new(z0, z1, z2, z3)
    }
    fn neg(&self) -> Self {
        QuatElem {
            c: self.c.clone().map(|x| x.neg()),
        }
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

impl<F: Scalar> fmt::Display for QuatElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&basis_text(
            self.c.iter().map(|x| x.to_string()).collect(),
            &["", "i", "j", "i*j"],
        ))
    }
}

impl<F: Scalar> fmt::Debug for QuatElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Joins coefficient strings over a named basis, parenthesizing compound
/// coefficients.
pub(crate) fn basis_text(coeffs: Vec<String>, names: &[&str]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c == "0" {
            continue;
        }
        let compound = c[1..].contains(['+', '-', '/']);
        let (neg, body) = match c.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ => (false, c.clone()),
        };
        let term = if name.is_empty() {
            if compound && !out.is_empty() {
                format!("({body})")
            } else {
                body
            }
        } else if body == "1" {
            name.to_string()
        } else if compound {
            format!("({body})*{name}")
        } else {
            format!("{body}*{name}")
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A semilinear anti-automorphism of the quaternion algebra: `sigma` on the
/// center, and the images of `i` and `j`.
#[derive(Clone, Debug)]
pub struct QuatStar<F: Scalar> {
    pub sigma: CenterMap<F>,
    pub star_i: QuatElem<F>,
    pub star_j: QuatElem<F>,
}

impl<F: Scalar> QuatStar<F> {
    pub fn apply(&self, x: &QuatElem<F>) -> QuatElem<F> {
        let [c0, c1, c2, c3] = &x.c;
        let s = |y: &RatFunc<F>| self.sigma.apply(y);
        QuatElem::scalar(s(c0))
            .add(&self.star_i.scale(&s(c1)))
            .add(&self.star_j.scale(&s(c2)))
            .add(&self.star_j.mul(&self.star_i).scale(&s(c3)))
    }

    /// Checks the defining relations are respected (in reversed order) and
    /// that the map has order two on generators and on the center.
    pub fn validate(&self) -> Result<()> {
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let (si, sj) = (&self.star_i, &self.star_j);
        let ok = si.mul(si) == QuatElem::scalar(self.sigma.apply(&a))
            && sj.mul(sj) == QuatElem::scalar(self.sigma.apply(&b))
            && sj.mul(si) == si.mul(sj).neg()
            && self.apply(si) == QuatElem::i()
            && self.apply(sj) == QuatElem::j()
            && self.sigma.then(&self.sigma).is_identity();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(
                "transported map is not an involution of the quaternion algebra".into(),
            ))
        }
    }

    pub fn is_symmetric(&self, x: &QuatElem<F>) -> bool {
        self.apply(x) == *x
    }

    pub fn is_unitary(&self, x: &QuatElem<F>) -> bool {
        x.mul(&self.apply(x)).is_one()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Q;

    fn q(s: &str) -> QuatElem<Q> {
        QuatElem::parse(s).unwrap()
    }

    #[test]
    fn relations() {
        assert!(q("i*j+j*i").is_zero());
        assert_eq!(q("i*i"), q("a"));
        assert_eq!(q("(i*j)*(i*j)"), q("-a*b"));
    }

    #[test]
    fn cayley_of_two_j() {
        let lhs = q("(1-2*j)*(1+2*j)^-1");
        let rhs = q("(1-4*b)^-1*(1-2*j)^2");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rep_over_l_of_one_plus_i() {
        let m = q("1+i").reg_rep(RepField::L);
        assert!(m.is_diagonal());
        assert_eq!(m.get(0, 0).to_string(), "i+1");
        assert_eq!(m.get(1, 1).to_string(), "-i+1");
    }

    #[test]
    fn reps_are_multiplicative() {
        let x = q("1+2*i-j+3*i*j");
        let y = q("a-i+b*j+i*j");
        for over in [RepField::L, RepField::K] {
            assert_eq!(
                x.mul(&y).reg_rep(over),
                x.reg_rep(over).mul(&y.reg_rep(over))
            );
        }
    }
}
