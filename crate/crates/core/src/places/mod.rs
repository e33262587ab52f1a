//! Discrete valuations on rational function fields and their simple
//! extensions, determined by a base prime, a generator image and a
//! uniformizer. Only unramified places of residue degree one over the base
//! prime are supported.

mod lift;
mod spec;

pub use lift::valuation_by_lifting;
pub use spec::PlaceSpec;

use std::fmt;
use std::sync::Arc;

use crate::arith::{ExtDescriptor, ExtElem, FieldElem, MultiPoly, RatFunc, Scalar, UniPoly, Var};
use crate::error::{Error, PlaceDefect, Result};

/// Image under the residue map.
#[derive(Clone, PartialEq, Eq)]
pub enum Residue<F: Scalar> {
    Value(ExtElem<F>),
    /// Not in the valuation ring.
    Below,
}

impl<F: Scalar> fmt::Display for Residue<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Value(v) => fmt::Display::fmt(v, f),
            Residue::Below => f.write_str("BELOW"),
        }
    }
}

impl<F: Scalar> fmt::Debug for Residue<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> Residue<F> {
    pub fn value(&self) -> Option<&ExtElem<F>> {
        match self {
            Residue::Value(v) => Some(v),
            Residue::Below => None,
        }
    }
}

/// A validated place of the extension described by `desc`.
#[derive(Clone)]
pub struct Place<F: Scalar> {
    name: String,
    desc: Arc<ExtDescriptor<F>>,
    base_var: Var,
    prime: MultiPoly<F>,
    residue_field: Arc<ExtDescriptor<F>>,
    gen_image: ExtElem<F>,
    uniformizer: ExtElem<F>,
    uniformizer_inv: ExtElem<F>,
}

impl<F: Scalar> fmt::Debug for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Place")
            .field("name", &self.name)
            .field("prime", &self.prime)
            .field("gen_image", &self.gen_image)
            .field("uniformizer", &self.uniformizer)
            .finish()
    }
}

/// Number of times `p` divides `f` (`f` nonzero).
pub(crate) fn poly_ord<F: Scalar>(f: &MultiPoly<F>, p: &MultiPoly<F>) -> i64 {
    let mut f = f.clone();
    let mut k = 0;
    while let Some(q) = f.div_exact(p) {
        f = q;
        k += 1;
    }
    k
}

impl<F: Scalar> Place<F> {
    /// Validates and builds a place. `base_prime` is a polynomial in
    /// `base_var` whose remaining variables are treated as constants;
    /// `gen_image` lives in the residue field `k(..)[base_var]/(base_prime)`.
    pub fn new(
        name: &str,
        desc: &Arc<ExtDescriptor<F>>,
        base_var: Var,
        base_prime: &MultiPoly<F>,
        gen_image: &ExtElem<F>,
        uniformizer: &ExtElem<F>,
    ) -> Result<Self> {
        if uniformizer.descriptor() != desc {
            return Err(Error::DescriptorMismatch);
        }
        let prime = primitive_part(base_prime, base_var)?;
        let residue_field = ExtDescriptor::residue(base_var, Self::prime_unipoly(&prime, base_var))?;
        if gen_image.descriptor() != &residue_field {
            return Err(Error::DescriptorMismatch);
        }
        let uniformizer_inv = uniformizer.try_inv()?;
        let place = Place {
            name: name.to_string(),
            desc: desc.clone(),
            base_var,
            prime,
            residue_field,
            gen_image: gen_image.clone(),
            uniformizer: uniformizer.clone(),
            uniformizer_inv,
        };
        place.validate()?;
        Ok(place)
    }

    fn prime_unipoly(prime: &MultiPoly<F>, v: Var) -> UniPoly<RatFunc<F>> {
        UniPoly::new(
            prime
                .to_univariate(v)
                .into_iter()
                .map(RatFunc::from_poly)
                .collect(),
        )
        .monic()
    }

    /// Residue field from a base prime, for building generator images
    /// before the place exists.
    pub fn residue_field_for(base_var: Var, base_prime: &MultiPoly<F>) -> Result<Arc<ExtDescriptor<F>>> {
        let prime = primitive_part(base_prime, base_var)?;
        ExtDescriptor::residue(base_var, Self::prime_unipoly(&prime, base_var))
    }

    fn validate(&self) -> Result<()> {
        let h = self.desc.minpoly();
        let integral = h
            .coeffs()
            .iter()
            .all(|c| c.is_zero() || self.ord_base(c).is_some_and(|o| o >= 0));
        let g = ExtElem::generator(&self.desc);
        let dh = h.derivative().eval_with(&g, |c| ExtElem::from_base(&self.desc, c.clone()));
        let disc = dh.norm();
        if !integral || disc.is_zero() || self.ord_base(&disc) != Some(0) {
            return Err(Error::InvalidPlace(PlaceDefect::RamificationUnsupported));
        }
        let at_image = h.eval_with(&self.gen_image, |c| {
            self.residue_base(c).expect("integral coefficient")
        });
        if !at_image.is_zero() {
            return Err(Error::InvalidPlace(PlaceDefect::GenImageNotRoot));
        }
        match self.residue_integral(&self.uniformizer) {
            Some(r) if r.is_zero() => {}
            _ => return Err(Error::InvalidPlace(PlaceDefect::UniformizerNotInPrime)),
        }
        match self.ord_base(&self.uniformizer.norm()) {
            Some(1) => Ok(()),
            Some(k) if k >= 2 => Err(Error::InvalidPlace(PlaceDefect::NotUniformizer)),
            _ => Err(Error::InvalidPlace(PlaceDefect::UniformizerNotInPrime)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn descriptor(&self) -> &Arc<ExtDescriptor<F>> {
        &self.desc
    }

    pub fn base_var(&self) -> Var {
        self.base_var
    }

    pub fn base_prime(&self) -> &MultiPoly<F> {
        &self.prime
    }

    pub fn residue_field(&self) -> &Arc<ExtDescriptor<F>> {
        &self.residue_field
    }

    pub fn gen_image(&self) -> &ExtElem<F> {
        &self.gen_image
    }

    pub fn uniformizer(&self) -> &ExtElem<F> {
        &self.uniformizer
    }

    /// Order of the base prime in a rational function; `None` for zero.
    pub fn ord_base(&self, c: &RatFunc<F>) -> Option<i64> {
        if c.is_zero() {
            return None;
        }
        Some(poly_ord(c.num(), &self.prime) - poly_ord(c.den(), &self.prime))
    }

    fn reduce_poly(&self, p: &MultiPoly<F>) -> ExtElem<F> {
        let coeffs = p
            .to_univariate(self.base_var)
            .into_iter()
            .map(RatFunc::from_poly)
            .collect();
        ExtElem::new(&self.residue_field, coeffs)
    }

    /// Residue of a base element; `None` when it has a pole at the prime.
    pub fn residue_base(&self, c: &RatFunc<F>) -> Option<ExtElem<F>> {
        let d = self.reduce_poly(c.den());
        if d.is_zero() {
            return None;
        }
        Some(self.reduce_poly(c.num()).mul(&d.inv()?))
    }

    /// Residue of an element whose coefficients are all integral.
    fn residue_integral(&self, x: &ExtElem<F>) -> Option<ExtElem<F>> {
        let mut acc = ExtElem::from_i64(&self.residue_field, 0);
        for c in x.coeffs().iter().rev() {
            acc = acc.mul(&self.gen_image).add(&self.residue_base(c)?);
        }
        Some(acc)
    }

    fn check(&self, x: &ExtElem<F>) -> Result<()> {
        if x.descriptor() == &self.desc {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    fn min_coeff_ord(&self, x: &ExtElem<F>) -> i64 {
        x.coeffs()
            .iter()
            .filter_map(|c| self.ord_base(c))
            .min()
            .expect("nonzero element")
    }

    /// The valuation `nu(x)`.
    pub fn valuation(&self, x: &ExtElem<F>) -> Result<i64> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let m = self.min_coeff_ord(x);
        let p = RatFunc::from_poly(self.prime.clone());
        let mut f = x.scale(&p.pow_signed(-m).expect("nonzero prime"));
        let bound = self.ord_base(&f.norm()).expect("nonzero norm");
        let mut count = 0;
        while self
            .residue_integral(&f)
            .expect("integral coefficients")
            .is_zero()
        {
            f = f.mul(&self.uniformizer_inv);
            count += 1;
            assert!(count <= bound, "valuation exceeds the order of the norm");
        }
        Ok(m + count)
    }

    /// Residue of `x`, or [`Residue::Below`] when `nu(x) < 0`.
    pub fn residue(&self, x: &ExtElem<F>) -> Result<Residue<F>> {
        self.check(x)?;
        if x.is_zero() {
            return Ok(Residue::Value(ExtElem::from_i64(&self.residue_field, 0)));
        }
        let nu = self.valuation(x)?;
        if nu < 0 {
            return Ok(Residue::Below);
        }
        if nu > 0 {
            return Ok(Residue::Value(ExtElem::from_i64(&self.residue_field, 0)));
        }
        let m = self.min_coeff_ord(x);
        if m >= 0 {
            return Ok(Residue::Value(self.residue_integral(x).expect("integral")));
        }
        // x pi'^k has integral coefficients, where pi' = N(pi)/pi is a unit
        // at this place and divisible by every other prime over the base.
        let k = (-m) as u64;
        let cof = self.uniformizer_inv.scale(&self.uniformizer.norm());
        let y = x.mul(&cof.pow(k));
        let num = self.residue_integral(&y).expect("integral after scaling");
        let den = self.residue_integral(&cof).expect("integral").pow(k);
        Ok(Residue::Value(num.mul(&den.inv().expect("unit cofactor"))))
    }
}

fn primitive_part<F: Scalar>(p: &MultiPoly<F>, v: Var) -> Result<MultiPoly<F>> {
    if p.degree_in(v).unwrap_or(0) == 0 {
        return Err(Error::InvalidSpec(format!(
            "base prime {p} does not involve {}",
            v.name()
        )));
    }
    let c = crate::arith::content(p, v);
    Ok(p.div_exact(&c).expect("content divides").monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::{parse_ext, parse_ratfunc};
    use crate::arith::{Gf3, Q};

    fn quad_place(prime: &str, image: &str, pi: &str) -> Result<Place<Q>> {
        let l = ExtDescriptor::quadratic_a();
        let p = parse_ratfunc::<Q>(prime).unwrap().num().clone();
        let r = Place::residue_field_for(Var::A, &p)?;
        let g = parse_ext(image, &r).unwrap();
        Place::new("P", &l, Var::A, &p, &g, &parse_ext(pi, &l).unwrap())
    }

    #[test]
    fn one_plus_i_place() {
        let pl = quad_place("1-a", "-1", "1+i").unwrap();
        let l = pl.descriptor().clone();
        let e = |s: &str| parse_ext(s, &l).unwrap();
        assert_eq!(pl.valuation(&e("1+i")).unwrap(), 1);
        assert_eq!(pl.valuation(&e("-1+i")).unwrap(), 0);
        assert_eq!(pl.valuation(&e("1-a")).unwrap(), 1);
        assert_eq!(pl.valuation(&e("1/(1+i)")).unwrap(), -1);
        let r = pl.residue(&e("-1+i")).unwrap();
        assert_eq!(r.to_string(), "-2");
        assert_eq!(pl.residue(&e("1/(1+i)")).unwrap(), Residue::Below);
        assert_eq!(pl.residue(&e("(1+i)^2/(1-a)")).unwrap().to_string(), "0");
        assert_eq!(pl.residue(&e("(1+i)/(1-a)*(-1+i)")).unwrap().to_string(), "-1");
    }

    #[test]
    fn rejections() {
        assert_eq!(
            quad_place("1-a", "2", "1+i").unwrap_err(),
            Error::InvalidPlace(PlaceDefect::GenImageNotRoot)
        );
        assert_eq!(
            quad_place("1-a", "-1", "(1+i)^2").unwrap_err(),
            Error::InvalidPlace(PlaceDefect::NotUniformizer)
        );
        assert_eq!(
            quad_place("1-a", "-1", "1-i").unwrap_err(),
            Error::InvalidPlace(PlaceDefect::UniformizerNotInPrime)
        );
        assert_eq!(
            quad_place("a", "0", "i").unwrap_err(),
            Error::InvalidPlace(PlaceDefect::RamificationUnsupported)
        );
    }

    #[test]
    fn cubic_place_residue_of_generator() {
        let c = ExtDescriptor::<Gf3>::artin_schreier();
        let p = parse_ratfunc::<Gf3>("a^2+1").unwrap().num().clone();
        let r = Place::residue_field_for(Var::A, &p).unwrap();
        let g = parse_ext("a", &r).unwrap();
        let pl = Place::new("P(1+i^2)", &c, Var::A, &p, &g, &parse_ext("1+i^2", &c).unwrap()).unwrap();
        let i = ExtElem::generator(&c);
        assert_eq!(pl.residue(&i).unwrap().to_string(), "a");
        let a = parse_ext("a", &c).unwrap();
        assert_eq!(pl.residue(&a).unwrap(), pl.residue(&i).unwrap());
    }
}
