use serde::{Deserialize, Serialize};

use super::group::{GroupRingElem, HeisElem};
use super::involution::InvolutionSpec;
use crate::algebras::{CenterMap, QuatElem, QuatStar};
use crate::arith::{FieldElem, Scalar};
use crate::error::{Error, Result};

/// The two evaluation maps into the quaternion algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MapKind {
    /// `lambda -> -1`, `x -> i`, `y -> j`.
    Psi,
    /// `lambda -> -1`, `x -> i`, `y -> ij`.
    Phi,
}

impl MapKind {
    fn y_image<F: Scalar>(self) -> QuatElem<F> {
        match self {
            MapKind::Psi => QuatElem::j(),
            MapKind::Phi => QuatElem::ij(),
        }
    }

    pub fn apply_group<F: Scalar>(self, g: HeisElem) -> QuatElem<F> {
        let sign = if g.r.rem_euclid(2) == 0 { 1 } else { -1 };
        let y = self.y_image::<F>().pow_signed(g.m).expect("unit");
        let x = QuatElem::<F>::i().pow_signed(g.n).expect("unit");
        y.mul(&x).scale(&crate::arith::RatFunc::from_i64(sign))
    }

    pub fn apply<F: Scalar>(self, u: &GroupRingElem<F>) -> QuatElem<F> {
        let mut acc = QuatElem::from_i64(0);
        for (g, c) in u.terms() {
            let t = self
                .apply_group::<F>(*g)
                .scale(&crate::arith::RatFunc::constant(c.clone()));
            acc = acc.add(&t);
        }
        acc
    }

    /// The image respects `x y = lambda y x`.
    pub fn respects_relation<F: Scalar>(self) -> bool {
        let (x, y) = (QuatElem::<F>::i(), self.y_image::<F>());
        x.mul(&y) == y.mul(&x).neg()
    }

    /// The involution induced on the quaternion algebra, i.e. the unique
    /// semilinear anti-automorphism with `star . map = map . spec`.
    pub fn transported<F: Scalar>(self, spec: &InvolutionSpec) -> Result<QuatStar<F>> {
        let xs = self.apply_group::<F>(spec.x_image());
        let ys = self.apply_group::<F>(spec.y_image());
        let star_i = xs.clone();
        let star_j = match self {
            MapKind::Psi => ys,
            // y = i^-1 (ij), so j* = (ij)* (i^-1)* = y* (x*)^-1.
            MapKind::Phi => ys.mul(&xs.inv().ok_or(Error::NotInvertible)?),
        };
        let central = |q: &QuatElem<F>| {
            let sq = q.mul(q);
            let [c0, c1, c2, c3] = sq.coords();
            if c1.is_zero() && c2.is_zero() && c3.is_zero() {
                Ok(c0.clone())
            } else {
                Err(Error::InvalidSpec("image of a generator does not square to the center".into()))
            }
        };
        let star = QuatStar {
            sigma: CenterMap {
                a: central(&star_i)?,
                b: central(&star_j)?,
            },
            star_i,
            star_j,
        };
        star.validate()?;
        Ok(star)
    }
}

/// `psi` or `phi` applied to a group ring element.
pub fn specialize_quat<F: Scalar>(kind: MapKind, u: &GroupRingElem<F>) -> QuatElem<F> {
    kind.apply(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Q;
    use crate::heisenberg::InvolutionType;

    fn g(s: &str) -> GroupRingElem<Q> {
        GroupRingElem::parse(s).unwrap()
    }

    #[test]
    fn psi_images() {
        let spec = InvolutionSpec::new(InvolutionType::I, 0, 0).unwrap();
        let u = g("1+x").add(&spec.apply(&g("x")));
        assert_eq!(specialize_quat(MapKind::Psi, &u), QuatElem::parse("1+2*i").unwrap());
        assert_eq!(specialize_quat(MapKind::Psi, &g("L")), QuatElem::from_i64(-1));
        assert!(MapKind::Psi.respects_relation::<Q>());
        assert!(MapKind::Phi.respects_relation::<Q>());
    }

    #[test]
    fn transported_star_commutes_with_map() {
        for (ty, m, n) in [
            (InvolutionType::I, 1, 2),
            (InvolutionType::II, 0, 0),
            (InvolutionType::III, 3, 0),
            (InvolutionType::IV, 1, 0),
            (InvolutionType::IV, 2, 0),
        ] {
            let spec = InvolutionSpec::new(ty, m, n).unwrap();
            for kind in [MapKind::Psi, MapKind::Phi] {
                let star = kind.transported::<Q>(&spec).unwrap();
                let u = g("1 + 2 x - 3 L y + x y^2 - 5 L^-2 y^-1 x");
                assert_eq!(
                    star.apply(&kind.apply(&u)),
                    kind.apply(&spec.apply(&u)),
                    "{ty} {m} {n} {kind:?}"
                );
            }
        }
    }
}
