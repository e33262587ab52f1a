use std::fmt;

use super::FieldElem;
use crate::error::{Error, Result};

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: FieldElem> SqMatrix<E> {
    pub fn new(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(SqMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SqMatrix { n, entries }
    }

    /// Identity of size `n`, with the unit taken from `like`.
    pub fn identity(n: usize, like: &E) -> Self {
        let (zero, one) = (like.zero_like(), like.one_like());
        Self::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn diag(d: Vec<E>) -> Self {
        let n = d.len();
        let zero = d[0].zero_like();
        Self::from_fn(n, |i, j| if i == j { d[i].clone() } else { zero.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.entries.iter()
    }

    pub fn map<T: FieldElem>(&self, f: impl Fn(&E) -> T) -> SqMatrix<T> {
        SqMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: FieldElem>(&self, f: impl Fn(&E) -> Result<T>) -> Result<SqMatrix<T>> {
        Ok(SqMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch);
        }
        Ok(self.mul(o))
    }

    /// Panics when the sizes differ; see [`SqMatrix::try_mul`].
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = self.get(i, 0).mul(o.get(0, j));
            for k in 1..n {
                acc = acc.add(&self.get(i, k).mul(o.get(k, j)));
            }
            acc
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        Self::from_fn(self.n, |i, j| self.get(i, j).add(o.get(i, j)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        Self::from_fn(self.n, |i, j| self.get(i, j).sub(o.get(i, j)))
    }

    pub fn scale(&self, c: &E) -> Self {
        self.map(|x| c.mul(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<E> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, &self.entries[0])
    }

    fn minor(&self, r: usize, c: usize) -> Self {
        let mut entries = Vec::with_capacity((self.n - 1) * (self.n - 1));
        for i in (0..self.n).filter(|&i| i != r) {
            for j in (0..self.n).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        SqMatrix {
            n: self.n - 1,
            entries,
        }
    }

    /// Cofactor expansion along the first row (commutative entries).
    pub fn det(&self) -> E {
        match self.n {
            1 => self.entries[0].clone(),
            2 => self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0))),
            n => {
                let mut acc = self.entries[0].zero_like();
                for j in 0..n {
                    let e = self.get(0, j);
                    if e.is_zero() {
                        continue;
                    }
                    let t = e.mul(&self.minor(0, j).det());
                    acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
                acc
            }
        }
    }

    pub fn adjugate(&self) -> Self {
        if self.n == 1 {
            return Self::identity(1, &self.entries[0]);
        }
        Self::from_fn(self.n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                c
            } else {
                c.neg()
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det().inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&d))
    }

    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.n, &self.entries[0]);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl<E: FieldElem + fmt::Display> SqMatrix<E> {
    /// Row-major canonical strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }
}

impl<E: FieldElem + fmt::Display> fmt::Display for SqMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.to_strings().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<E: FieldElem + fmt::Display> fmt::Debug for SqMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
