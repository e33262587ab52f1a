//! Exact arithmetic: prime fields and the rationals, multivariate polynomials,
//! rational functions, simple algebraic extensions and small square matrices.
//!
//! Nothing in here uses floating point. Every value has a canonical form, so
//! equality is structural.

mod ext;
mod gcd;
pub(crate) use gcd::content;
mod linalg;
mod matrix;
pub mod parse;
mod poly;
mod ratfunc;
mod scalar;
mod unipoly;

pub use ext::{ExtDescriptor, ExtElem};
pub use linalg::solve_linear;
pub use matrix::SqMatrix;
pub use poly::{Monomial, MultiPoly, Var, NVARS};
pub(crate) use poly::join_terms;
pub use ratfunc::RatFunc;
pub use scalar::{BaseField, Gf, Gf3, Q};
pub use unipoly::UniPoly;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use rand::Rng;

/// Ring operations shared by every exact element type.
///
/// The zero and one are obtained from an existing value because some
/// element types (extension elements) carry a context.
pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero (or a non-unit).
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn pow_signed(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|x| x.pow(e.unsigned_abs()))
        }
    }
}

/// A field whose zero and one need no context.
pub trait Field: FieldElem {
    fn zero() -> Self;
    fn one() -> Self;
}

/// Coefficient field of all polynomials: either the rationals or GF(p).
pub trait Scalar: Field + Eq + Ord + Hash + Display + Send + Sync + 'static {
    /// Zero for the rationals.
    const CHARACTERISTIC: u64;

    fn base_field() -> BaseField;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    /// A pseudo-random element, used for evaluation at random points.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// True when printing needs a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }
    /// Image in GF(p), when the element is p-integral (rationals) or already
    /// lives in GF(p).
    fn image_mod(&self, p: u64) -> Option<u64>;
    /// Factor turning `coeffs` into coprime integers with `lead` positive.
    /// Prime fields need no scaling.
    fn integral_scale(_coeffs: &[&Self], _lead: &Self) -> Self {
        Self::one()
    }
}
