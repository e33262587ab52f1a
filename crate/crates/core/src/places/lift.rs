//! Valuations computed through a p-adic embedding: the generator image is
//! lifted by Newton iteration to a root of the minimal polynomial modulo a
//! high power of the base prime, and the valuation is read off the image.
//! Shares nothing with the residue-based algorithm except the inputs.

use super::Place;
use crate::arith::{ExtElem, FieldElem, MultiPoly, RatFunc, Scalar, UniPoly, Var};
use crate::error::{Error, Result};

type Up<F> = UniPoly<RatFunc<F>>;

const MAX_PRECISION: u32 = 256;

fn to_uni<F: Scalar>(p: &MultiPoly<F>, v: Var) -> Up<F> {
    UniPoly::new(p.to_univariate(v).into_iter().map(RatFunc::from_poly).collect())
}

fn from_uni<F: Scalar>(u: &Up<F>, v: Var) -> RatFunc<F> {
    let x = RatFunc::var(v);
    let mut acc = RatFunc::zero_like(&x);
    for c in u.coeffs().iter().rev() {
        acc = acc.mul(&x).add(c);
    }
    acc
}

/// Order of the prime in a polynomial, by repeated univariate division.
fn uni_ord<F: Scalar>(f: &Up<F>, p: &Up<F>) -> i64 {
    let mut f = f.clone();
    let mut k = 0;
    loop {
        let (q, r) = f.divrem(p);
        if !r.is_zero() {
            return k;
        }
        f = q;
        k += 1;
    }
}

fn ord<F: Scalar>(c: &RatFunc<F>, p: &Up<F>, v: Var) -> i64 {
    uni_ord(&to_uni(c.num(), v), p) - uni_ord(&to_uni(c.den(), v), p)
}

fn inverse_mod<F: Scalar>(f: &Up<F>, m: &Up<F>) -> Up<F> {
    let (g, s, _) = f.rem(m).ext_gcd(m);
    assert_eq!(g.degree(), Some(0), "not a unit modulo the prime power");
    s.scale(&g.coeff(0).inv().expect("nonzero")).rem(m)
}

fn reduce<F: Scalar>(c: &RatFunc<F>, m: &Up<F>, v: Var) -> Up<F> {
    let num = to_uni(c.num(), v).rem(m);
    num.mul(&inverse_mod(&to_uni(c.den(), v), m)).rem(m)
}

/// A root of the minimal polynomial modulo `prime^prec` lifting the
/// generator image.
fn lift_root<F: Scalar>(place: &Place<F>, prime: &Up<F>, prec: u32) -> Up<F> {
    let v = place.base_var();
    let h = place.descriptor().minpoly();
    let dh = h.derivative();
    let mut g = UniPoly::new(place.gen_image().coeffs().to_vec());
    let mut have = 1;
    while have < prec {
        have = (have * 2).min(prec);
        let m = pow(prime, have);
        let eval = |poly: &Up<F>| {
            let mut acc = UniPoly::zero();
            for c in poly.coeffs().iter().rev() {
                acc = acc.mul(&g).add(&reduce(c, &m, v)).rem(&m);
            }
            acc
        };
        let step = eval(h).mul(&inverse_mod(&eval(&dh), &m)).rem(&m);
        g = g.sub(&step).rem(&m);
    }
    g
}

fn pow<F: Scalar>(p: &Up<F>, e: u32) -> Up<F> {
    (0..e).fold(UniPoly::one(), |acc, _| acc.mul(p))
}

/// The valuation of `x` at `place`, computed independently of
/// [`Place::valuation`].
pub fn valuation_by_lifting<F: Scalar>(place: &Place<F>, x: &ExtElem<F>) -> Result<i64> {
    if x.descriptor() != place.descriptor() {
        return Err(Error::DescriptorMismatch);
    }
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let v = place.base_var();
    let prime = to_uni(place.base_prime(), v);
    let floor = x
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| ord(c, &prime, v))
        .min()
        .expect("nonzero element");
    let mut prec = 4;
    while prec <= MAX_PRECISION {
        let g = from_uni(&lift_root(place, &prime, prec), v);
        let mut image = RatFunc::zero_like(&g);
        for c in x.coeffs().iter().rev() {
            image = image.mul(&g).add(c);
        }
        if !image.is_zero() {
            let o = ord(&image, &prime, v);
            if o < prec as i64 + floor {
                return Ok(o);
            }
        }
        prec *= 2;
    }
    Err(Error::DegreeOverflow(MAX_PRECISION as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::{parse_ext, parse_ratfunc};
    use crate::arith::{ExtDescriptor, Gf3, Q};

    #[test]
    fn agrees_on_small_examples() {
        let l = ExtDescriptor::<Q>::quadratic_a();
        let p = parse_ratfunc::<Q>("1-4*a").unwrap().num().clone();
        let r = Place::residue_field_for(Var::A, &p).unwrap();
        let pl = Place::new("P", &l, Var::A, &p, &parse_ext("1/2", &r).unwrap(), &parse_ext("1-2*i", &l).unwrap()).unwrap();
        for s in ["1-2*i", "1+2*i", "(1-2*i)^3/(1-4*a)", "b", "(1-2*i)/(1+2*i)", "i+1/(1-4*a)"] {
            let x = parse_ext(s, &l).unwrap();
            assert_eq!(valuation_by_lifting(&pl, &x).unwrap(), pl.valuation(&x).unwrap(), "{s}");
        }
        let c = ExtDescriptor::<Gf3>::artin_schreier();
        let p = parse_ratfunc::<Gf3>("a^2+1").unwrap().num().clone();
        let r = Place::residue_field_for(Var::A, &p).unwrap();
        let pl = Place::new("Q", &c, Var::A, &p, &parse_ext("a", &r).unwrap(), &parse_ext("1+i^2", &c).unwrap()).unwrap();
        for s in ["1+i^2", "i-a", "(1+i^2)^2*(i+1)", "1/(i-a)", "i+b"] {
            let x = parse_ext(s, &c).unwrap();
            assert_eq!(valuation_by_lifting(&pl, &x).unwrap(), pl.valuation(&x).unwrap(), "{s}");
        }
    }
}
