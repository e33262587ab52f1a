use std::fmt;
use std::sync::Arc;

use super::gcd::gcd;
use super::linalg::solve_linear;
use super::matrix::SqMatrix;
use super::poly::{join_terms, MultiPoly, Var};
use super::ratfunc::{display_scale, fraction_text, RatFunc};
use super::unipoly::UniPoly;
use super::{Field, FieldElem, Scalar};
use crate::error::{Error, Result};

/// A simple algebraic extension `base[g]/(minpoly(g))` of a rational
/// function field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtDescriptor<F> {
    generator: String,
    minpoly: UniPoly<RatFunc<F>>,
    /// Set when the generator is itself one of the polynomial variables,
    /// as for residue fields `k(b)[a]/(p(a))`.
    gen_var: Option<Var>,
}

impl<F: Scalar> ExtDescriptor<F> {
    pub fn new(generator: &str, minpoly: UniPoly<RatFunc<F>>) -> Result<Arc<Self>> {
        if !minpoly.is_monic() || minpoly.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidSpec(format!(
                "minimal polynomial {} must be monic of positive degree",
                minpoly.text(generator)
            )));
        }
        Ok(Arc::new(ExtDescriptor {
            generator: generator.to_string(),
            minpoly,
            gen_var: None,
        }))
    }

    /// `base_var` adjoined modulo a monic prime whose coefficients do not
    /// involve `base_var`.
    pub fn residue(base_var: Var, prime: UniPoly<RatFunc<F>>) -> Result<Arc<Self>> {
        if prime.coeffs().iter().any(|c| c.involves(base_var)) {
            return Err(Error::InvalidSpec(
                "prime coefficients involve the base variable".into(),
            ));
        }
        let mut d = Self::new(base_var.name(), prime.monic())?;
        Arc::make_mut(&mut d).gen_var = Some(base_var);
        Ok(d)
    }

    fn binomial(name: &str, v: Var, deg: usize, linear: i64) -> Arc<Self> {
        let mut c = vec![RatFunc::zero(); deg + 1];
        c[0] = RatFunc::var(v).neg();
        c[1] = RatFunc::from_i64(linear);
        c[deg] = RatFunc::one();
        Self::new(name, UniPoly::new(c)).expect("monic")
    }

    /// `L = F(i)` with `i^2 = a`.
    pub fn quadratic_a() -> Arc<Self> {
        Self::binomial("i", Var::A, 2, 0)
    }

    /// `K = F(j)` with `j^2 = b`.
    pub fn quadratic_b() -> Arc<Self> {
        Self::binomial("j", Var::B, 2, 0)
    }

    /// `K(i)` with `i^3 - i = a`.
    pub fn artin_schreier() -> Arc<Self> {
        Self::binomial("i", Var::A, 3, -1)
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn gen_var(&self) -> Option<Var> {
        self.gen_var
    }

    pub fn minpoly(&self) -> &UniPoly<RatFunc<F>> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("positive degree")
    }
}

impl<F: Scalar> fmt::Debug for ExtDescriptor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.minpoly.text(&self.generator))
    }
}

/// Element of an [`ExtDescriptor`] field as a reduced coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem<F> {
    desc: Arc<ExtDescriptor<F>>,
    coeffs: Vec<RatFunc<F>>,
}

impl<F: Scalar> ExtElem<F> {
    /// Reduces an arbitrary-length coefficient vector modulo the minpoly.
    pub fn new(desc: &Arc<ExtDescriptor<F>>, coeffs: Vec<RatFunc<F>>) -> Self {
        let d = desc.degree();
        let p = UniPoly::new(coeffs);
        let p = if p.degree().is_some_and(|k| k >= d) {
            p.rem(desc.minpoly())
        } else {
            p
        };
        Self::from_unipoly(desc, &p)
    }

    fn from_unipoly(desc: &Arc<ExtDescriptor<F>>, p: &UniPoly<RatFunc<F>>) -> Self {
        let coeffs = (0..desc.degree()).map(|k| p.coeff(k)).collect();
        ExtElem {
            desc: desc.clone(),
            coeffs,
        }
    }

    pub fn from_base(desc: &Arc<ExtDescriptor<F>>, c: RatFunc<F>) -> Self {
        let mut coeffs = vec![RatFunc::zero(); desc.degree()];
        coeffs[0] = c;
        ExtElem {
            desc: desc.clone(),
            coeffs,
        }
    }

    pub fn from_i64(desc: &Arc<ExtDescriptor<F>>, c: i64) -> Self {
        Self::from_base(desc, RatFunc::from_i64(c))
    }

    pub fn generator(desc: &Arc<ExtDescriptor<F>>) -> Self {
        Self::new(desc, vec![RatFunc::zero(), RatFunc::one()])
    }

    pub fn descriptor(&self) -> &Arc<ExtDescriptor<F>> {
        &self.desc
    }

    pub fn coeffs(&self) -> &[RatFunc<F>] {
        &self.coeffs
    }

    pub fn as_base(&self) -> Option<&RatFunc<F>> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| &self.coeffs[0])
    }

    fn to_unipoly(&self) -> UniPoly<RatFunc<F>> {
        UniPoly::new(self.coeffs.clone())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.desc, &o.desc) || self.desc == o.desc {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.add(o))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.mul(o))
    }

    pub fn try_inv(&self) -> Result<Self> {
        self.inv().ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.mul(&o.try_inv()?))
    }

    pub fn scale(&self, c: &RatFunc<F>) -> Self {
        ExtElem {
            desc: self.desc.clone(),
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Matrix of multiplication by `self` on the power basis, acting on
    /// row vectors: row `k` holds the coordinates of `g^k * self`.
    pub fn mult_matrix(&self) -> SqMatrix<RatFunc<F>> {
        let d = self.desc.degree();
        let g = Self::generator(&self.desc);
        let mut rows = Vec::with_capacity(d);
        let mut cur = self.clone();
        for _ in 0..d {
            rows.push(cur.coeffs.clone());
            cur = cur.mul(&g);
        }
        SqMatrix::new(rows).expect("square")
    }

    /// Norm down to the base field.
    pub fn norm(&self) -> RatFunc<F> {
        self.mult_matrix().det()
    }

    /// Monic minimal polynomial over the base field, found as the first
    /// linear dependence among `1, x, x^2, ...`.
    pub fn min_poly(&self) -> UniPoly<RatFunc<F>> {
        let d = self.desc.degree();
        let mut powers = vec![Self::from_i64(&self.desc, 1)];
        for k in 1..=d {
            let next = powers[k - 1].mul(self);
            let rows: Vec<Vec<RatFunc<F>>> = (0..d)
                .map(|r| powers.iter().map(|p| p.coeffs[r].clone()).collect())
                .collect();
            if let Some(sol) = solve_linear(&rows, &next.coeffs) {
                let mut c: Vec<RatFunc<F>> = sol.iter().map(|x| x.neg()).collect();
                c.push(RatFunc::one());
                return UniPoly::new(c);
            }
            powers.push(next);
        }
        unreachable!("the minimal polynomial annihilates every element")
    }

    /// Image under a ring map given by its values on base coefficients and
    /// on the generator.
    pub fn eval_with<T: FieldElem>(&self, gen: &T, lift: impl Fn(&RatFunc<F>) -> T) -> T {
        self.to_unipoly().eval_with(gen, lift)
    }

    /// Same as [`ExtElem::eval_with`] with a fallible coefficient map.
    pub fn try_eval_with<T: FieldElem>(
        &self,
        gen: &T,
        lift: impl Fn(&RatFunc<F>) -> Result<T>,
    ) -> Result<T> {
        let mut acc = gen.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(gen).add(&lift(c)?);
        }
        Ok(acc)
    }

    /// Common denominator form: `(sum_k n_k g^k, d)`.
    fn common_form(&self) -> (Vec<MultiPoly<F>>, MultiPoly<F>) {
        let mut den = MultiPoly::one();
        for c in &self.coeffs {
            if !c.is_zero() && !c.den().is_one() {
                let g = gcd(&den, c.den());
                den = den.mul(&c.den().div_exact(&g).expect("gcd divides"));
            }
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                c.num()
                    .mul(&den.div_exact(c.den()).expect("denominator divides lcm"))
            })
            .collect();
        (nums, den)
    }
}

impl<F: Scalar> FieldElem for ExtElem<F> {
    fn zero_like(&self) -> Self {
        ExtElem {
            desc: self.desc.clone(),
            coeffs: vec![RatFunc::zero(); self.desc.degree()],
        }
    }
    fn one_like(&self) -> Self {
        Self::from_i64(&self.desc, 1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        self.check(o).expect("same extension");
        ExtElem {
            desc: self.desc.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        self.check(o).expect("same extension");
        if let Some(c) = o.as_base() {
            return self.scale(c);
        }
        if let Some(c) = self.as_base() {
            return o.scale(c);
        }
        let p = self.to_unipoly().mul(&o.to_unipoly());
        Self::from_unipoly(&self.desc, &p.rem(self.desc.minpoly()))
    }
    fn neg(&self) -> Self {
        ExtElem {
            desc: self.desc.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(c) = self.as_base() {
            return Some(Self::from_base(&self.desc, c.inv()?));
        }
        let (g, s, _) = self.to_unipoly().ext_gcd(self.desc.minpoly());
        if g.degree() != Some(0) {
            return None;
        }
        Some(Self::from_unipoly(&self.desc, &s.rem(self.desc.minpoly())))
    }
}

impl<F: Scalar> fmt::Display for ExtElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.desc.gen_var {
            let r = self.eval_with(&RatFunc::var(v), RatFunc::clone);
            return fmt::Display::fmt(&r, f);
        }
        let (nums, den) = self.common_form();
        let refs: Vec<&MultiPoly<F>> = nums.iter().collect();
        let s = display_scale(&refs, &den);
        let den = den.scale(&s);
        let g = &self.desc.generator;
        let mut terms = Vec::new();
        for (k, n) in nums.iter().enumerate().rev() {
            let gen_text = match k {
                0 => String::new(),
                1 => g.clone(),
                _ => format!("{g}^{k}"),
            };
            for (m, c) in n.scale(&s).terms().rev() {
                let c = c.clone();
                let (neg, mag) = if c.is_negative() {
                    (true, c.neg().to_string())
                } else {
                    (false, c.to_string())
                };
                let mono = [m.text(), gen_text.clone()]
                    .into_iter()
                    .filter(|x| !x.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                terms.push((neg, mag, mono));
            }
        }
        let count = terms.len();
        f.write_str(&fraction_text(join_terms(&terms), count, &den))
    }
}

impl<F: Scalar> fmt::Debug for ExtElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
