use std::collections::BTreeMap;
use std::fmt;

use super::algebra::WeylElem;
use crate::algebras::CycElem;
use crate::arith::parse::{eval_expr, parse_expr};
use crate::arith::{ExtElem, Field, FieldElem, Gf3, RatFunc, Scalar, Var, Q};
use crate::error::{Error, Result};

/// `sum_n Y^n f_n(X)` with `f(X) Y = Y f(X+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewLaurent<F: Scalar> {
    terms: BTreeMap<i64, RatFunc<F>>,
}

fn shift_x<F: Scalar>(f: &RatFunc<F>, n: i64) -> RatFunc<F> {
    if n == 0 || !f.involves(Var::X) {
        return f.clone();
    }
    let arg = RatFunc::var(Var::X).add(&RatFunc::from_i64(n));
    f.substitute(Var::X, &arg).expect("a shift has no poles")
}

impl<F: Scalar> SkewLaurent<F> {
    pub fn zero() -> Self {
        SkewLaurent {
            terms: BTreeMap::new(),
        }
    }

    /// `Y^n f`.
    pub fn term(n: i64, f: RatFunc<F>) -> Self {
        let mut r = Self::zero();
        r.add_term(n, f);
        r
    }

    pub fn x() -> Self {
        Self::term(0, RatFunc::var(Var::X))
    }

    pub fn y() -> Self {
        Self::term(1, RatFunc::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &RatFunc<F>)> {
        self.terms.iter()
    }

    fn add_term(&mut self, n: i64, f: RatFunc<F>) {
        if f.is_zero() {
            return;
        }
        let e = self.terms.entry(n).or_insert_with(RatFunc::zero);
        *e = e.add(&f);
        if e.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&RatFunc<F>) -> Result<RatFunc<G>>) -> Result<SkewLaurent<G>> {
        let mut r = SkewLaurent::zero();
        for (&n, c) in &self.terms {
            r.add_term(n, f(c)?);
        }
        Ok(r)
    }

    /// Parses expressions in `X` and `Y`.
    pub fn parse(s: &str) -> Result<Self> {
        eval_expr(
            &parse_expr(s)?,
            &|sym| match sym {
                "X" => Some(Self::x()),
                "Y" => Some(Self::y()),
                _ => None,
            },
            &|v| Self::term(0, RatFunc::constant(F::from_bigint(v))),
        )
    }
}

impl<F: Scalar> FieldElem for SkewLaurent<F> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::term(0, RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&n, c) in &o.terms {
            r.add_term(n, c.clone());
        }
        r
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    /// `(Y^m f)(Y^n g) = Y^(m+n) f(X+n) g`.
    fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (&m, f) in &self.terms {
            for (&n, g) in &o.terms {
                r.add_term(m + n, shift_x(f, n).mul(g));
            }
        }
        r
    }
    fn neg(&self) -> Self {
        SkewLaurent {
            terms: self.terms.iter().map(|(&n, c)| (n, c.neg())).collect(),
        }
    }
    /// Only single terms `Y^n f` are inverted: `(Y^n f)^-1 = Y^-n f(X-n)^-1`.
    fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&n, f) = self.terms.iter().next().unwrap();
        Some(Self::term(-n, shift_x(&f.inv()?, -n)))
    }
}

impl<F: Scalar> fmt::Display for SkewLaurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&n, c)) in self.terms.iter().enumerate() {
            let y = match n {
                0 => String::new(),
                1 => "Y".to_string(),
                _ => format!("Y^{n}"),
            };
            let cs = c.to_string();
            let compound = cs[1..].contains(['+', '-', '/']);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            match (y.is_empty(), body.as_str(), compound) {
                (true, _, _) => write!(f, "{body}")?,
                (false, "1", _) => write!(f, "{y}")?,
                (false, _, true) => write!(f, "{y}*({body})")?,
                (false, _, false) => write!(f, "{y}*{body}")?,
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for SkewLaurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The homomorphism `s -> Y^-1 X`, `t -> Y`.
pub fn weyl_to_skew(u: &WeylElem) -> SkewLaurent<Q> {
    let s = SkewLaurent::term(-1, RatFunc::var(Var::X));
    let t = SkewLaurent::y();
    let mut acc = SkewLaurent::zero();
    for (&(m, n), c) in u.terms() {
        let mono = t.pow(m as u64).mul(&s.pow(n as u64));
        acc = acc.add(&mono.mul(&SkewLaurent::term(0, RatFunc::constant(c.clone()))));
    }
    acc
}

/// Reduces a rational coefficient modulo 3.
pub fn reduce_mod3(c: &Q) -> Result<Gf3> {
    c.reduce_mod(3)
        .map(|v| Gf3::new(v as i64))
        .ok_or_else(|| Error::Not3Integral(c.to_string()))
}

/// The composite `s -> j^-1 i`, `t -> j` into the cyclic algebra, with
/// coefficients reduced modulo 3.
pub fn weyl_to_cyclic(u: &WeylElem) -> Result<CycElem> {
    let j = CycElem::j();
    let s = j.try_inv()?.mul(&CycElem::i());
    let mut acc = CycElem::from_i64(0);
    for (&(m, n), c) in u.terms() {
        let c = CycElem::scalar(RatFunc::constant(reduce_mod3(c)?));
        acc = acc.add(&c.mul(&j.pow(m as u64)).mul(&s.pow(n as u64)));
    }
    Ok(acc)
}

/// `X -> i`, `Y -> j` on a skew-Laurent element over GF(3).
pub fn skew_to_cyclic(x: &SkewLaurent<Gf3>) -> Result<CycElem> {
    let field = crate::algebras::cyclic_field();
    let i = ExtElem::generator(field);
    let j = CycElem::j();
    let mut acc = CycElem::from_i64(0);
    for (&n, f) in x.terms() {
        let lift = |p: &crate::arith::MultiPoly<Gf3>| {
            p.to_univariate(Var::X)
                .iter()
                .rev()
                .fold(ExtElem::from_i64(field, 0), |acc, c| {
                    acc.mul(&i).add(&ExtElem::from_base(field, RatFunc::from_poly(c.clone())))
                })
        };
        let num = lift(f.num());
        let den = lift(f.den());
        let val = num.div(&den).map_err(|_| Error::NotInvertible)?;
        acc = acc.add(&j.pow_signed(n).ok_or(Error::NotInvertible)?.mul(&CycElem::from_field(val)));
    }
    Ok(acc)
}

/// Second route to the cyclic algebra: reduce the skew image modulo 3 and
/// substitute `X -> i`, `Y -> j`.
pub fn weyl_to_cyclic_via_skew(u: &WeylElem) -> Result<CycElem> {
    let reduced = weyl_to_skew(u).map_coeffs(|c| {
        c.reduce_mod::<3>()
            .ok_or_else(|| Error::Not3Integral(c.to_string()))
    })?;
    skew_to_cyclic(&reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeylElem {
        WeylElem::parse(s).unwrap()
    }

    #[test]
    fn phi_images() {
        assert_eq!(weyl_to_skew(&w("t*s")), SkewLaurent::x());
        assert_eq!(
            weyl_to_skew(&w("s*t*s-t*s*t")),
            SkewLaurent::parse("Y^-1*X^2-X*Y").unwrap()
        );
        assert_eq!(weyl_to_skew(&w("s*t-t*s")), SkewLaurent::parse("1").unwrap());
        let y = SkewLaurent::<Q>::y();
        let x = SkewLaurent::<Q>::x();
        assert_eq!(
            y.inv().unwrap().mul(&x).mul(&y),
            x.add(&SkewLaurent::parse("1").unwrap())
        );
    }

    #[test]
    fn cyclic_images() {
        assert_eq!(weyl_to_cyclic(&w("t*s")).unwrap(), CycElem::i());
        assert_eq!(
            weyl_to_cyclic(&w("s*t*s-t*s*t")).unwrap(),
            CycElem::parse("j^-1*i^2-i*j").unwrap()
        );
        assert!(matches!(
            weyl_to_cyclic(&w("s/3")),
            Err(Error::Not3Integral(_))
        ));
        let u = w("2*t^2*s - s*t*s + 5");
        assert_eq!(weyl_to_cyclic(&u), weyl_to_cyclic_via_skew(&u));
    }
}
