use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Field, FieldElem, Scalar};

/// The coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => f.write_str("Q"),
            BaseField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(n: i64, d: i64) -> Self {
        Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn from_ratio(n: BigInt, d: BigInt) -> Self {
        Q(BigRational::new(n, d))
    }

    /// Exponent of the prime `p` in this (nonzero) rational.
    pub fn padic_ord(&self, p: u64) -> i64 {
        assert!(!self.0.is_zero(), "p-adic order of zero");
        let p = BigInt::from(p);
        let count = |x: &BigInt| {
            let mut x = x.clone();
            let mut k = 0;
            while x.is_multiple_of(&p) {
                x /= &p;
                k += 1;
            }
            k
        };
        count(self.0.numer()) - count(self.0.denom())
    }

    /// Image in GF(p); `None` when the denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let n = self.0.numer().mod_floor(&pb).to_u64()?;
        let d = self.0.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(n * inv_mod(d, p) % p)
    }
}

impl std::str::FromStr for Q {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || crate::error::Error::Parse(format!("not a rational number: {s:?}"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(crate::error::Error::DivisionByZero);
        }
        Ok(Q::from_ratio(n, d))
    }
}

/// Serialized as the string `"n"` or `"n/d"`.
impl Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Q::from_i64(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FieldElem for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Q(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Q(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Q(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
}

impl Scalar for Q {
    const CHARACTERISTIC: u64 = 0;

    fn image_mod(&self, p: u64) -> Option<u64> {
        self.reduce_mod(p)
    }

    fn base_field() -> BaseField {
        BaseField::Rationals
    }
    fn from_i64(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_bigint(v: &BigInt) -> Self {
        Q(BigRational::from_integer(v.clone()))
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Q::from_i64(rng.gen_range(-(1i64 << 40)..(1i64 << 40)))
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    fn integral_scale(coeffs: &[&Self], lead: &Self) -> Self {
        let mut l = BigInt::one();
        for c in coeffs {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in coeffs {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        if g.is_zero() {
            return Q::one();
        }
        let s = Q::from_ratio(l, g);
        if (lead.0.clone() * &s.0).is_negative() {
            Q(-s.0)
        } else {
            s
        }
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128;
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    b = acc as u64;
    b
}

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field GF(P).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf<const P: u64>(u64);

pub type Gf3 = Gf<3>;

impl<const P: u64> Gf<P> {
    const PRIME_CHECK: () = assert!(is_prime(P), "GF(P) requires a prime modulus");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_CHECK;
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> FieldElem for Gf<P> {
    fn zero_like(&self) -> Self {
        Gf(0)
    }
    fn one_like(&self) -> Self {
        Gf(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Gf(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gf(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gf(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Gf((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf(inv_mod(self.0, P)))
        }
    }
}

impl<const P: u64> Field for Gf<P> {
    fn zero() -> Self {
        Gf::new(0)
    }
    fn one() -> Self {
        Gf::new(1)
    }
}

impl<const P: u64> Scalar for Gf<P> {
    const CHARACTERISTIC: u64 = P;

    fn image_mod(&self, p: u64) -> Option<u64> {
        (p == P).then_some(self.0)
    }

    fn base_field() -> BaseField {
        BaseField::PrimeField(P)
    }
    fn from_i64(v: i64) -> Self {
        Gf::new(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Gf::new(r.to_i64().expect("reduced value fits"))
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Gf::new(rng.gen_range(0..P as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_characteristic() {
        let one = Gf3::one();
        assert!(one.add(&one).add(&one).is_zero());
        assert_eq!(Gf3::new(2).inv(), Some(Gf3::new(2)));
        assert_eq!(Gf3::new(-1), Gf3::new(2));
    }

    #[test]
    fn rational_reduction_and_order() {
        assert_eq!(Q::new(1, 2).reduce_mod(3), Some(2));
        assert_eq!(Q::new(1, 3).reduce_mod(3), None);
        assert_eq!(Q::new(18, 5).padic_ord(3), 2);
        assert_eq!(Q::new(5, 27).padic_ord(3), -3);
    }
}
