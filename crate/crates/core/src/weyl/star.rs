use super::algebra::WeylInvolutionSpec;
use super::skew::weyl_to_cyclic;
use crate::algebras::{CenterMap, CycElem, CycStar};
use crate::arith::{FieldElem, Gf3, RatFunc};
use crate::error::{Error, Result};

fn central(x: &CycElem) -> Result<RatFunc<Gf3>> {
    let [c0, c1, c2] = x.coeffs();
    match (c1.is_zero() && c2.is_zero(), c0.as_base()) {
        (true, Some(c)) => Ok(c.clone()),
        _ => Err(Error::InvalidSpec(format!("{x} is not central"))),
    }
}

/// The anti-automorphism of the cyclic algebra matching a linear Weyl
/// involution under `s -> j^-1 i`, `t -> j`.
///
/// Since `i` is the image of `ts`, its star is the image of `s* t*`.
pub fn transported_star(spec: &WeylInvolutionSpec) -> Result<CycStar> {
    let ss = weyl_to_cyclic(&spec.s_image())?;
    let ts = weyl_to_cyclic(&spec.t_image())?;
    let star_i = ss.mul(&ts);
    let star_j = ts;
    let sigma = CenterMap {
        a: central(&star_i.pow(3).sub(&star_i))?,
        b: central(&star_j.pow(3))?,
    };
    let star = CycStar {
        sigma,
        star_i,
        star_j,
    };
    star.validate()?;
    Ok(star)
}
