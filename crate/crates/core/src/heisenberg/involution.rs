use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::group::{GroupRingElem, HeisElem};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// The four classes of involutions of the Heisenberg group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum InvolutionType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionType::I => "I",
            InvolutionType::II => "II",
            InvolutionType::III => "III",
            InvolutionType::IV => "IV",
        })
    }
}

impl FromStr for InvolutionType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(InvolutionType::I),
            "II" => Ok(InvolutionType::II),
            "III" => Ok(InvolutionType::III),
            "IV" => Ok(InvolutionType::IV),
            _ => Err(Error::InvalidSpec(format!("unknown involution type {s:?}"))),
        }
    }
}

/// An involution of the group given by its class and the exponents of the
/// central parameters (`zeta = lambda^m`, `eta = lambda^n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionSpec {
    #[serde(rename = "type")]
    pub ty: InvolutionType,
    #[serde(default)]
    pub m: i64,
    #[serde(default)]
    pub n: i64,
}

impl InvolutionSpec {
    pub fn new(ty: InvolutionType, m: i64, n: i64) -> Result<Self> {
        let unused = match ty {
            InvolutionType::I => false,
            InvolutionType::II => m != 0 || n != 0,
            InvolutionType::III | InvolutionType::IV => n != 0,
        };
        if unused {
            return Err(Error::InvalidSpec(format!(
                "type {ty} does not take parameters m={m}, n={n}"
            )));
        }
        let spec = InvolutionSpec { ty, m, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn x_image(&self) -> HeisElem {
        match self.ty {
            InvolutionType::I => HeisElem::new(self.m, 0, 1),
            InvolutionType::II => HeisElem::new(0, 0, -1),
            InvolutionType::III => HeisElem::X,
            InvolutionType::IV => HeisElem::new(self.m, 1, 0),
        }
    }

    pub fn y_image(&self) -> HeisElem {
        match self.ty {
            InvolutionType::I => HeisElem::new(self.n, 1, 0),
            InvolutionType::II => HeisElem::new(0, -1, 0),
            InvolutionType::III => HeisElem::new(self.m, -1, 0),
            InvolutionType::IV => HeisElem::new(-self.m, 0, 1),
        }
    }

    /// `lambda* = lambda^e`.
    pub fn lambda_exponent(&self) -> i64 {
        match self.ty {
            InvolutionType::I | InvolutionType::II => -1,
            InvolutionType::III | InvolutionType::IV => 1,
        }
    }

    /// `(lambda^r y^m x^n)* = (x*)^n (y*)^m (lambda*)^r`.
    pub fn apply_group(&self, g: HeisElem) -> HeisElem {
        self.x_image()
            .pow(g.n)
            .mul(self.y_image().pow(g.m))
            .mul(HeisElem::lambda_pow(self.lambda_exponent() * g.r))
    }

    pub fn apply<F: Scalar>(&self, u: &GroupRingElem<F>) -> GroupRingElem<F> {
        u.map_group(|g| self.apply_group(g))
    }

    /// The map must reverse the relation `xy = lambda yx` and square to the
    /// identity on generators.
    pub fn validate(&self) -> Result<()> {
        let (xs, ys) = (self.x_image(), self.y_image());
        let ls = HeisElem::lambda_pow(self.lambda_exponent());
        let reverses = ys.mul(xs) == xs.mul(ys).mul(ls);
        let order_two = self.apply_group(xs) == HeisElem::X
            && self.apply_group(ys) == HeisElem::Y
            && self.apply_group(ls) == HeisElem::LAMBDA;
        if reverses && order_two {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "type {} with m={}, n={} is not an anti-automorphism of order 2",
                self.ty, self.m, self.n
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldElem, Q};

    #[test]
    fn inversion_type() {
        let s = InvolutionSpec::new(InvolutionType::II, 0, 0).unwrap();
        assert_eq!(s.apply_group(HeisElem::X), HeisElem::X.inv());
        let g = HeisElem::new(3, -2, 5);
        assert_eq!(s.apply_group(g), g.inv());
    }

    #[test]
    fn type_iv_has_order_two() {
        let s = InvolutionSpec::new(InvolutionType::IV, 1, 0).unwrap();
        let x: GroupRingElem<Q> = GroupRingElem::x();
        let xs = s.apply(&x);
        assert_eq!(xs, GroupRingElem::parse("L Y").unwrap());
        assert_eq!(s.apply(&xs), x);
    }

    #[test]
    fn parameters_are_checked() {
        assert!(InvolutionSpec::new(InvolutionType::II, 1, 0).is_err());
        assert!(InvolutionSpec::new(InvolutionType::III, 0, 2).is_err());
        let u: GroupRingElem<Q> = GroupRingElem::parse("1+x+y").unwrap();
        let s = InvolutionSpec::new(InvolutionType::I, 2, 0).unwrap();
        let v: GroupRingElem<Q> = GroupRingElem::parse("x*y").unwrap();
        assert_eq!(s.apply(&u.mul(&v)), s.apply(&v).mul(&s.apply(&u)));
    }
}
