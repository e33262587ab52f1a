//! Multivariate gcd: recursive content extraction plus a subresultant
//! remainder sequence in the highest variable present.

use super::poly::{MultiPoly, Var};
use super::scalar::pow_mod;
use super::Scalar;

type Poly<F> = MultiPoly<F>;

/// Monic gcd of `f` and `g`; zero only if both are zero.
pub(crate) fn gcd<F: Scalar>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    if f == g {
        return f.monic();
    }
    let (small, big) = if f.num_terms() <= g.num_terms() {
        (f, g)
    } else {
        (g, f)
    };
    if small.total_degree() <= big.total_degree() && big.div_exact(small).is_some() {
        return small.monic();
    }
    let v = Var::ALL
        .into_iter()
        .rev()
        .find(|&v| f.involves(v) || g.involves(v))
        .expect("non-constant polynomial has a variable");
    match (f.involves(v), g.involves(v)) {
        (true, false) => gcd(&content(f, v), g),
        (false, true) => gcd(f, &content(g, v)),
        _ => {
            let cf = content(f, v);
            let cg = content(g, v);
            let c = gcd(&cf, &cg);
            let pf = f.div_exact(&cf).expect("content divides");
            let pg = g.div_exact(&cg).expect("content divides");
            if coprime_by_images(&pf, &pg, v) {
                return c.monic();
            }
            let last = prs_gcd(pf.to_univariate(v), pg.to_univariate(v));
            let p = Poly::from_univariate(v, &last);
            let p = p.div_exact(&content(&p, v)).expect("content divides");
            c.mul(&p).monic()
        }
    }
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `v`.
pub(crate) fn content<F: Scalar>(f: &Poly<F>, v: Var) -> Poly<F> {
    let mut acc = Poly::zero();
    for c in f.to_univariate(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Prime for modular images of rational polynomials.
const IMAGE_PRIME: u64 = 2_147_483_647;

/// True when `f` and `g`, both involving `v`, certainly share no factor of
/// positive degree in `v`.
///
/// The other variables are specialized modulo a prime. When both leading
/// coefficients in `v` survive, a common factor would survive with its full
/// degree, so a constant gcd of the images rules it out. A `false` answer
/// proves nothing.
fn coprime_by_images<F: Scalar>(f: &Poly<F>, g: &Poly<F>, v: Var) -> bool {
    let p = match F::CHARACTERISTIC {
        0 => IMAGE_PRIME,
        c => c,
    };
    let fu = f.to_univariate(v);
    let gu = g.to_univariate(v);
    let others: Vec<Var> = Var::ALL.into_iter().filter(|&w| w != v).collect();
    let tries: u64 = if p >= 97 { 3 } else { p.pow(2).min(9) };
    for t in 0..tries {
        let point: Vec<u64> = if p >= 97 {
            (0..others.len() as u64).map(|k| (t * 7919 + k * 104_729 + 3) % p).collect()
        } else {
            (0..others.len() as u32).map(|k| t / p.pow(k.min(1)) % p).collect()
        };
        let eval = |c: &Poly<F>| -> Option<u64> {
            let mut acc = 0u64;
            for (m, x) in c.terms() {
                let mut term = x.image_mod(p)?;
                for (w, &val) in others.iter().zip(&point) {
                    term = term * pow_mod(val, m.exp(*w) as u64, p) % p;
                }
                acc = (acc + term) % p;
            }
            Some(acc)
        };
        let (Some(fi), Some(gi)) = (
            fu.iter().map(eval).collect::<Option<Vec<_>>>(),
            gu.iter().map(eval).collect::<Option<Vec<_>>>(),
        ) else {
            return false;
        };
        if fi.last() == Some(&0) || gi.last() == Some(&0) {
            continue;
        }
        if uni_gcd_degree(fi, gi, p) == 0 {
            return true;
        }
    }
    false
}

/// Degree of the gcd of two dense polynomials over GF(p).
fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    let strip = |x: &mut Vec<u64>| {
        while x.last() == Some(&0) {
            x.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    while !b.is_empty() {
        if a.len() >= b.len() {
            let inv = pow_mod(*b.last().unwrap(), p - 2, p);
            while a.len() >= b.len() {
                let q = a.last().unwrap() * inv % p;
                let shift = a.len() - b.len();
                for (k, &bk) in b.iter().enumerate() {
                    a[k + shift] = (a[k + shift] + p - q * bk % p) % p;
                }
                strip(&mut a);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn trim<F: Scalar>(p: &mut Vec<Poly<F>>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn prem<F: Scalar>(a: &[Poly<F>], b: &[Poly<F>]) -> Vec<Poly<F>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&lr.mul(bk));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Last nonzero element of the subresultant sequence, up to content.
fn prs_gcd<F: Scalar>(mut a: Vec<Poly<F>>, mut b: Vec<Poly<F>>) -> Vec<Poly<F>> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![Poly::one()];
        }
        let div = g.mul(&h.pow(d));
        let r: Vec<_> = r
            .iter()
            .map(|c| c.div_exact(&div).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = r;
        g = a.last().unwrap().clone();
        h = if d == 0 {
            h
        } else {
            g.pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Gf3, Q};

    fn v<F: Scalar>(x: Var) -> Poly<F> {
        Poly::var(x)
    }

    #[test]
    fn gcd_of_products() {
        let a = v::<Q>(Var::A);
        let b = v::<Q>(Var::B);
        let one = Poly::<Q>::one();
        let common = a.mul(&b).add(&one).mul(&a.sub(&b.pow(2)));
        let f = common.mul(&a.add(&b.scale(&Q::from_i64(3))));
        let g = common.mul(&a.pow(2).sub(&one));
        assert_eq!(gcd(&f, &g), common.monic());
    }

    #[test]
    fn image_test_is_one_sided() {
        let a = v::<Q>(Var::A);
        let b = v::<Q>(Var::B);
        let one = Poly::<Q>::one();
        let f = a.mul(&b).add(&one);
        let g = b.pow(3).sub(&a);
        assert!(coprime_by_images(&f, &g, Var::B));
        let h = f.mul(&b.add(&a));
        assert!(!coprime_by_images(&h, &f.mul(&g), Var::B));
        let x = v::<Gf3>(Var::A).mul(&v::<Gf3>(Var::B)).add(&Poly::one());
        let y = v::<Gf3>(Var::B).pow(2).sub(&v::<Gf3>(Var::A));
        assert!(coprime_by_images(&x, &y, Var::B));
        assert!(!coprime_by_images(&x.mul(&y), &y, Var::B));
    }

    #[test]
    fn coprime_over_gf3() {
        let b = v::<Gf3>(Var::B);
        let one = Poly::<Gf3>::one();
        let f = b.pow(2).add(&b).add(&one);
        let g = b.sub(&one);
        // b^2+b+1 = (b-1)^2 in characteristic 3.
        assert_eq!(gcd(&f, &g), g);
        let h = b.add(&one);
        assert!(gcd(&f, &h).is_one());
    }
}
