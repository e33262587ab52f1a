//! The quaternion algebra `(a, b / k(a,b))` and the degree-3 cyclic algebra
//! over `GF(3)(a,b)`, with regular representations and semilinear
//! involutions.

mod cyclic;
mod quat;

pub use cyclic::{field as cyclic_field, CycElem, CycStar};
pub use quat::{QuatElem, QuatStar, RepField};

use crate::arith::{FieldElem, RatFunc, Scalar, Var};
use crate::error::{Error, Result};

/// `(1 - r)(1 + r)^-1`.
pub fn cayley<T: FieldElem>(r: &T) -> Result<T> {
    let one = r.one_like();
    let d = one.add(r).inv().ok_or(Error::NotInvertible)?;
    Ok(one.sub(r).mul(&d))
}

/// A field automorphism of `k(a,b)` given by the images of `a` and `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CenterMap<F: Scalar> {
    pub a: RatFunc<F>,
    pub b: RatFunc<F>,
}

impl<F: Scalar> CenterMap<F> {
    pub fn identity() -> Self {
        CenterMap {
            a: RatFunc::var(Var::A),
            b: RatFunc::var(Var::B),
        }
    }

    pub fn apply(&self, x: &RatFunc<F>) -> RatFunc<F> {
        if !x.involves(Var::A) && !x.involves(Var::B) {
            return x.clone();
        }
        let point = [
            self.a.clone(),
            self.b.clone(),
            RatFunc::var(Var::L),
            RatFunc::var(Var::X),
        ];
        x.compose(&point)
            .expect("an automorphism does not create poles")
    }

    pub fn then(&self, o: &Self) -> Self {
        CenterMap {
            a: o.apply(&self.a),
            b: o.apply(&self.b),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}
