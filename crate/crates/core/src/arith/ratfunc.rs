use std::fmt;

use super::gcd::gcd;
use super::poly::{scalar_sign_text, MultiPoly, Var, NVARS};
use super::{Field, FieldElem, Gf, Scalar, Q};
use crate::error::{Error, Result};

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: MultiPoly<F>,
    den: MultiPoly<F>,
}

impl<F: Scalar> RatFunc<F> {
    pub fn new(num: MultiPoly<F>, den: MultiPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly<F>, den: MultiPoly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Self::with_monic_den(num, den)
    }

    fn with_monic_den(num: MultiPoly<F>, den: MultiPoly<F>) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let s = lc.inv().expect("nonzero denominator");
            RatFunc {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(F::from_i64(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.is_poly() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv().ok_or(Error::DivisionByZero)?))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Replaces `v` by `value`; fails if the denominator vanishes.
    pub fn substitute(&self, v: Var, value: &Self) -> Result<Self> {
        if !self.involves(v) {
            return Ok(self.clone());
        }
        let n = poly_at(&self.num, v, value);
        let d = poly_at(&self.den, v, value);
        n.div(&d)
    }

    /// Simultaneous substitution of every variable.
    pub fn compose(&self, point: &[RatFunc<F>; NVARS]) -> Result<Self> {
        let lift = |c: &F| RatFunc::constant(c.clone());
        let n = self.num.eval(point, lift);
        let d = self.den.eval(point, lift);
        n.div(&d)
    }

    /// Evaluates at a point of the coefficient field; `None` at a pole.
    pub fn eval(&self, point: &[F; NVARS]) -> Option<F> {
        let d = self.den.eval(point, F::clone);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point, F::clone).mul(&d.inv()?))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Result<RatFunc<G>> {
        RatFunc::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

impl RatFunc<Q> {
    /// Image in `GF(P)(a, b, ...)`, or `None` when the denominator vanishes
    /// modulo `P` after clearing to coprime integer coefficients.
    pub fn reduce_mod<const P: u64>(&self) -> Option<RatFunc<Gf<P>>> {
        let s = display_scale(&[&self.num], &self.den);
        let red = |p: &MultiPoly<Q>| {
            p.scale(&s)
                .map_coeffs(|c| Gf::<P>::new(c.reduce_mod(P).expect("integer") as i64))
        };
        let den = red(&self.den);
        if den.is_zero() {
            return None;
        }
        RatFunc::new(red(&self.num), den).ok()
    }
}

fn poly_at<F: Scalar>(p: &MultiPoly<F>, v: Var, value: &RatFunc<F>) -> RatFunc<F> {
    let mut acc = RatFunc::zero();
    for c in p.to_univariate(v).iter().rev() {
        acc = acc.mul(value).add(&RatFunc::from_poly(c.clone()));
    }
    acc
}

impl<F: Scalar> FieldElem for RatFunc<F> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: self.num.mul(&o.den).add(&o.num),
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            return RatFunc {
                num: o.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        if g.is_one() {
            // Coprime denominators: no common factor can appear.
            return Self::with_monic_den(num, d1.mul(&o.den));
        }
        Self::normalized(num, d1.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::with_monic_den(n1.mul(&n2), d1.mul(&d2))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }
}

impl<F: Scalar> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
}

impl<F: Scalar> Default for RatFunc<F> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Scale factor making every coefficient of `nums` and `den` a coprime
/// integer with `den`'s leading coefficient positive.
pub(crate) fn display_scale<F: Scalar>(nums: &[&MultiPoly<F>], den: &MultiPoly<F>) -> F {
    let mut cs: Vec<&F> = Vec::new();
    for p in nums.iter().chain(std::iter::once(&den)) {
        cs.extend(p.terms().map(|(_, c)| c));
    }
    F::integral_scale(&cs, &den.leading_coeff())
}

/// `num/den`, parenthesizing multi-term parts.
pub(crate) fn fraction_text(num: String, num_terms: usize, den: &MultiPoly<impl Scalar>) -> String {
    if den.is_one() {
        return num;
    }
    let wrap = |s: String, n: usize| if n > 1 { format!("({s})") } else { s };
    format!(
        "{}/{}",
        wrap(num, num_terms),
        wrap(den.to_string(), den.num_terms())
    )
}

impl<F: Scalar> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display_scale(&[&self.num], &self.den);
        let num = self.num.scale(&s);
        let den = self.den.scale(&s);
        let text = num.text_with(scalar_sign_text);
        f.write_str(&fraction_text(text, num.num_terms(), &den))
    }
}

impl<F: Scalar> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Gf3, Q};

    fn a() -> RatFunc<Q> {
        RatFunc::var(Var::A)
    }
    fn b() -> RatFunc<Q> {
        RatFunc::var(Var::B)
    }

    #[test]
    fn inverse_cancels() {
        let x = RatFunc::one().add(&b());
        assert!(x.inv().unwrap().mul(&x).is_one());
    }

    #[test]
    fn characteristic_three_sum_vanishes() {
        let b = RatFunc::<Gf3>::var(Var::B);
        let x = RatFunc::one().add(&b.pow(5));
        assert!(x.add(&x).add(&x).is_zero());
    }

    #[test]
    fn common_factor_is_removed() {
        let f = RatFunc::one().sub(&a().scale(&Q::from_i64(4)));
        let g = RatFunc::one().add(&b());
        let q = f.mul(&g).div(&f).unwrap();
        assert_eq!(q, g);
        assert_eq!(q.mul(&f), f.mul(&g));
    }

    #[test]
    fn display_uses_integer_coefficients() {
        let x = RatFunc::from_i64(2).mul(&a()).sub(&RatFunc::one());
        let y = RatFunc::from_i64(4).mul(&a()).sub(&RatFunc::one());
        let half = RatFunc::constant(Q::new(1, 2));
        assert_eq!(x.div(&y).unwrap().mul(&half).to_string(), "(2*a-1)/(8*a-2)");
        assert_eq!(a().mul(&half).to_string(), "a/2");
        let b = RatFunc::<Gf3>::var(Var::B);
        let n = b.pow(2).scale(&Gf3::new(2)).add(&b).add(&RatFunc::one());
        assert_eq!(n.div(&b).unwrap().to_string(), "(2*b^2+b+1)/b");
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(a().div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }
}
