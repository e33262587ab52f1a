use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::group::HeisElem;
use crate::error::{Error, Result};

/// `[[a, b], [c, d]]` with determinant `+-1`, acting on row vectors:
/// `(m, n) -> (ma + nc, mb + nd)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const ID: IntMatrix2 = IntMatrix2::raw(1, 0, 0, 1);
    pub const NEG_ID: IntMatrix2 = IntMatrix2::raw(-1, 0, 0, -1);
    pub const D: IntMatrix2 = IntMatrix2::raw(1, 0, 0, -1);
    pub const S: IntMatrix2 = IntMatrix2::raw(0, 1, 1, 0);

    const fn raw(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = Self::raw(a, b, c, d);
        if m.det().abs() != 1 {
            return Err(Error::InvalidSpec(format!(
                "matrix {m} has determinant {}, not +-1",
                m.det()
            )));
        }
        Ok(m)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::raw(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn inv(&self) -> Self {
        let e = self.det();
        Self::raw(e * self.d, -e * self.b, -e * self.c, e * self.a)
    }

    /// `self * o * self^-1`.
    pub fn conjugate(&self, o: &Self) -> Self {
        self.mul(o).mul(&self.inv())
    }

    pub fn act(&self, v: (i64, i64)) -> (i64, i64) {
        (v.0 * self.a + v.1 * self.c, v.0 * self.b + v.1 * self.d)
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Conjugacy classes of elements of order at most two in `GL(2, Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Order2Class {
    Id,
    NegId,
    D,
    S,
}

impl Order2Class {
    pub fn representative(self) -> IntMatrix2 {
        match self {
            Order2Class::Id => IntMatrix2::ID,
            Order2Class::NegId => IntMatrix2::NEG_ID,
            Order2Class::D => IntMatrix2::D,
            Order2Class::S => IntMatrix2::S,
        }
    }
}

impl fmt::Display for Order2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order2Class::Id => "ID",
            Order2Class::NegId => "NEG_ID",
            Order2Class::D => "D",
            Order2Class::S => "S",
        })
    }
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = v.0.gcd(&v.1);
    let (p, q) = (v.0 / g, v.1 / g);
    if p < 0 || (p == 0 && q < 0) {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// Primitive row vector `v` with `v A = s v`, for `A != s I` of order two.
fn eigen_row(a: &IntMatrix2, s: i64) -> (i64, i64) {
    // Left kernel of A - sI: rows of the adjugate of A - sI span it.
    let (p, q, r, t) = (a.a - s, a.b, a.c, a.d - s);
    let cand = if (r, -p) != (0, 0) { (r, -p) } else { (t, -q) };
    debug_assert_eq!(p * cand.0 + r * cand.1, 0);
    primitive(cand)
}

/// Class of `a` and a conjugator `t` with `t a t^-1` equal to the class
/// representative.
pub fn classify_order2(a: &IntMatrix2) -> Result<(Order2Class, IntMatrix2)> {
    if a.det().abs() != 1 || !a.mul(a).eq(&IntMatrix2::ID) {
        return Err(Error::NotOrderTwo);
    }
    if *a == IntMatrix2::ID {
        return Ok((Order2Class::Id, IntMatrix2::ID));
    }
    if *a == IntMatrix2::NEG_ID {
        return Ok((Order2Class::NegId, IntMatrix2::ID));
    }
    let vp = eigen_row(a, 1);
    let vm = eigen_row(a, -1);
    let det = vp.0 * vm.1 - vp.1 * vm.0;
    let (class, t) = match det.abs() {
        1 => (Order2Class::D, IntMatrix2::raw(vp.0, vp.1, vm.0, vm.1)),
        2 => {
            let w = ((vp.0 + vm.0) / 2, (vp.1 + vm.1) / 2);
            let wa = a.act(w);
            (Order2Class::S, IntMatrix2::raw(w.0, w.1, wa.0, wa.1))
        }
        _ => unreachable!("eigenvectors of an involution span a sublattice of index 1 or 2"),
    };
    debug_assert_eq!(t.conjugate(a), class.representative());
    Ok((class, t))
}

/// An automorphism of the Heisenberg group, by the images of generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Automorphism {
    pub x: HeisElem,
    pub y: HeisElem,
    /// `lambda -> lambda^eps`.
    pub eps: i64,
}

impl Automorphism {
    pub fn apply(&self, g: HeisElem) -> HeisElem {
        HeisElem::lambda_pow(self.eps * g.r)
            .mul(self.y.pow(g.m))
            .mul(self.x.pow(g.n))
    }

    /// Preserves `xy = lambda yx` and `lambda` is central of the right power.
    pub fn respects_relation(&self) -> bool {
        let l = HeisElem::lambda_pow(self.eps);
        self.x.mul(self.y) == l.mul(self.y).mul(self.x)
    }

    /// Induced matrix on the abelianization.
    pub fn projection(&self) -> IntMatrix2 {
        let (a, b) = self.x.project();
        let (c, d) = self.y.project();
        IntMatrix2::raw(a, b, c, d)
    }
}

/// Lifts a matrix to an automorphism projecting onto it:
/// `x -> lambda^j y^b x^a`, `y -> lambda^i y^d x^c`, `lambda -> lambda^eps`.
pub fn lift_automorphism(m: &IntMatrix2) -> Automorphism {
    let IntMatrix2 { a, b, c, d } = *m;
    let e = m.det();
    let i2 = -e * c * d * (-e + a + b);
    let j2 = -e * a * b * (-e + c + d);
    debug_assert!(i2 % 2 == 0 && j2 % 2 == 0);
    Automorphism {
        x: HeisElem::new(j2 / 2, b, a),
        y: HeisElem::new(i2 / 2, d, c),
        eps: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives() {
        assert_eq!(
            classify_order2(&IntMatrix2::D).unwrap(),
            (Order2Class::D, IntMatrix2::ID)
        );
        let a = IntMatrix2::new(1, 0, 1, -1).unwrap();
        let (c, t) = classify_order2(&a).unwrap();
        assert_eq!(c, Order2Class::S);
        assert_eq!(t.conjugate(&a), IntMatrix2::S);
        let a = IntMatrix2::new(0, -1, -1, 0).unwrap();
        let (c, t) = classify_order2(&a).unwrap();
        assert_eq!(c, Order2Class::S);
        assert_eq!(t.conjugate(&a), IntMatrix2::S);
        assert_eq!(
            classify_order2(&IntMatrix2::new(1, 1, 0, 1).unwrap()),
            Err(Error::NotOrderTwo)
        );
    }

    #[test]
    fn lifts() {
        let s = lift_automorphism(&IntMatrix2::S);
        assert_eq!((s.x, s.y, s.eps), (HeisElem::Y, HeisElem::X, -1));
        let id = lift_automorphism(&IntMatrix2::ID);
        assert_eq!((id.x, id.y, id.eps), (HeisElem::X, HeisElem::Y, 1));
        let m = IntMatrix2::new(1, 0, 1, -1).unwrap();
        let f = lift_automorphism(&m);
        assert_eq!(f.x, HeisElem::X);
        assert_eq!(f.y, HeisElem::new(-1, -1, 1));
        assert!(f.respects_relation());
        assert_eq!(f.projection(), m);
    }
}
