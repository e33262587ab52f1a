//! Strategies and laws shared by the property, classification and
//! acceptance targets.
#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use freepairs_core::algebras::{CycElem, QuatElem, RepField};
use freepairs_core::arith::{
    ExtDescriptor, ExtElem, FieldElem, Gf3, Monomial, MultiPoly, RatFunc, Scalar, UniPoly, Var, Q,
};
use freepairs_core::heisenberg::{
    classify_order2, lift_automorphism, GroupRingElem, HeisElem, IntMatrix2, InvolutionSpec, InvolutionType, MapKind,
    Order2Class,
};
use freepairs_core::places::{valuation_by_lifting, Place, PlaceSpec};
use freepairs_core::weyl::{weyl_action_oracle, weyl_to_cyclic, WeylElem};

pub const CASES: u32 = 128;

pub const CLASSES: [Order2Class; 4] = [Order2Class::Id, Order2Class::NegId, Order2Class::D, Order2Class::S];

pub fn config(seed: u64) -> Config {
    Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

// ---- strategies ----

pub fn poly<F: Scalar>(max_terms: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly<F>> {
    prop::collection::vec((-3i64..=3, 0..=max_deg, 0..=max_deg), 0..=max_terms).prop_map(|ts| {
        MultiPoly::from_terms(
            ts.into_iter()
                .map(|(c, ea, eb)| (Monomial([ea, eb, 0, 0]), F::from_i64(c))),
        )
    })
}

pub fn ratfunc<F: Scalar>() -> impl Strategy<Value = RatFunc<F>> {
    (poly::<F>(3, 2), poly::<F>(2, 1)).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

/// Coefficients with a few fixed denominators, to keep extension
/// arithmetic cheap.
pub fn small_ratfunc<F: Scalar>() -> impl Strategy<Value = RatFunc<F>> {
    (poly::<F>(2, 1), 0u8..3).prop_map(|(n, k)| {
        let d = match k {
            0 => RatFunc::from_i64(1),
            1 => RatFunc::var(Var::A),
            _ => RatFunc::var(Var::B).add(&RatFunc::from_i64(1)),
        };
        RatFunc::from_poly(n).div(&d).expect("nonzero")
    })
}

pub fn ext<F: Scalar>(desc: Arc<ExtDescriptor<F>>) -> impl Strategy<Value = ExtElem<F>> {
    let d = desc.degree();
    prop::collection::vec(small_ratfunc::<F>(), d).prop_map(move |c| ExtElem::new(&desc, c))
}

pub fn quat() -> impl Strategy<Value = QuatElem<Q>> {
    prop::collection::vec(small_ratfunc::<Q>(), 4)
        .prop_map(|c| QuatElem::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
}

pub fn cyc() -> impl Strategy<Value = CycElem> {
    prop::collection::vec(ext(ExtDescriptor::<Gf3>::artin_schreier()), 3)
        .prop_map(|c| CycElem::new(c[0].clone(), c[1].clone(), c[2].clone()))
}

pub fn heis() -> impl Strategy<Value = HeisElem> {
    (-4i64..=4, -4i64..=4, -4i64..=4).prop_map(|(r, m, n)| HeisElem::new(r, m, n))
}

pub fn group_ring() -> impl Strategy<Value = GroupRingElem<Q>> {
    prop::collection::vec((heis(), -3i64..=3), 1..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(GroupRingElem::zero(), |acc, (g, c)| acc.add(&GroupRingElem::term(g, Q::from_i64(c))))
    })
}

pub fn weyl() -> impl Strategy<Value = WeylElem> {
    prop::collection::vec((0u32..=2, 0u32..=2, -3i64..=3), 1..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(WeylElem::zero(), |acc, (m, n, c)| acc.add(&WeylElem::monomial(m, n, Q::from_i64(c))))
    })
}

pub fn unipoly() -> impl Strategy<Value = UniPoly<Q>> {
    prop::collection::vec(-4i64..=4, 1..=4).prop_map(|f| UniPoly::new(f.into_iter().map(Q::from_i64).collect()))
}

pub fn involution() -> impl Strategy<Value = InvolutionSpec> {
    (0u8..4, -3i64..=3, -3i64..=3).prop_map(|(k, m, n)| {
        let (ty, m, n) = match k {
            0 => (InvolutionType::I, m, n),
            1 => (InvolutionType::II, 0, 0),
            2 => (InvolutionType::III, m, 0),
            _ => (InvolutionType::IV, m, 0),
        };
        InvolutionSpec::new(ty, m, n).expect("admissible parameters")
    })
}

/// Random element of GL(2, Z) as a short word in elementary generators.
pub fn gl2() -> impl Strategy<Value = IntMatrix2> {
    let gens = [
        IntMatrix2::new(1, 1, 0, 1).unwrap(),
        IntMatrix2::new(1, -1, 0, 1).unwrap(),
        IntMatrix2::new(1, 0, 1, 1).unwrap(),
        IntMatrix2::new(1, 0, -1, 1).unwrap(),
        IntMatrix2::D,
        IntMatrix2::S,
    ];
    prop::collection::vec(0usize..gens.len(), 0..=8)
        .prop_map(move |w| w.into_iter().fold(IntMatrix2::ID, |acc, k| acc.mul(&gens[k])))
}

// ---- places ----

pub fn p_one_plus_i() -> Place<Q> {
    PlaceSpec {
        name: "P(1+i)".into(),
        field: "Q".into(),
        generator: "i".into(),
        minpoly: "i^2-a".into(),
        base_var: "a".into(),
        base_prime: "1-a".into(),
        gen_image: "-1".into(),
        uniformizer: "1+i".into(),
    }
    .build()
    .unwrap()
}

pub fn p_one_plus_i2() -> Place<Gf3> {
    PlaceSpec {
        name: "P(1+i^2)".into(),
        field: "GF(3)".into(),
        generator: "i".into(),
        minpoly: "i^3-i-a".into(),
        base_var: "a".into(),
        base_prime: "a^2+1".into(),
        gen_image: "a".into(),
        uniformizer: "1+i^2".into(),
    }
    .build()
    .unwrap()
}

// ---- laws ----

pub type Law = Result<(), TestCaseError>;

pub fn field_laws<T: FieldElem>(x: &T, y: &T, z: &T) -> Law {
    prop_assert_eq!(x.add(y).add(z), x.add(&y.add(z)));
    prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
    prop_assert_eq!(x.mul(y), y.mul(x));
    prop_assert_eq!(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)));
    prop_assert!(x.sub(x).is_zero());
    if !x.is_zero() {
        prop_assert!(x.mul(&x.inv().expect("nonzero is invertible")).is_one());
    }
    Ok(())
}

pub fn quadratic_laws(x: &ExtElem<Q>, y: &ExtElem<Q>, z: &ExtElem<Q>) -> Law {
    field_laws(x, y, z)?;
    prop_assert_eq!(x.mul(y).norm(), x.norm().mul(&y.norm()));
    Ok(())
}

pub fn artin_schreier_laws(x: &ExtElem<Gf3>, y: &ExtElem<Gf3>, z: &ExtElem<Gf3>) -> Law {
    field_laws(x, y, z)?;
    let h = x.min_poly();
    prop_assert!(h.eval_with(x, |c| ExtElem::from_base(x.descriptor(), c.clone())).is_zero());
    Ok(())
}

pub fn valuation_laws<F: Scalar>(place: &Place<F>, x: &ExtElem<F>, y: &ExtElem<F>) -> Law {
    prop_assume!(!x.is_zero() && !y.is_zero());
    let (vx, vy) = (place.valuation(x).unwrap(), place.valuation(y).unwrap());
    prop_assert_eq!(place.valuation(&x.mul(y)).unwrap(), vx + vy);
    prop_assert_eq!(place.valuation(&x.inv().unwrap()).unwrap(), -vx);
    let s = x.add(y);
    if !s.is_zero() {
        prop_assert!(place.valuation(&s).unwrap() >= vx.min(vy));
    }
    prop_assert_eq!(valuation_by_lifting(place, x).unwrap(), vx);
    Ok(())
}

pub fn heisenberg_laws(g: HeisElem, h: HeisElem, k: HeisElem) -> Law {
    prop_assert_eq!(g.mul(h).mul(k), g.mul(h.mul(k)));
    prop_assert!(g.mul(g.inv()).is_identity());
    prop_assert!(g.inv().mul(g).is_identity());
    let l = HeisElem::LAMBDA;
    prop_assert_eq!(g.mul(l), l.mul(g));
    prop_assert_eq!(HeisElem::X.mul(HeisElem::Y), l.mul(HeisElem::Y).mul(HeisElem::X));
    Ok(())
}

pub fn involution_laws(
    spec: &InvolutionSpec,
    u: &GroupRingElem<Q>,
    v: &GroupRingElem<Q>,
    g: HeisElem,
    h: HeisElem,
) -> Law {
    prop_assert_eq!(spec.apply(&u.mul(v)), spec.apply(v).mul(&spec.apply(u)));
    prop_assert_eq!(&spec.apply(&spec.apply(u)), u);
    prop_assert_eq!(spec.apply_group(g.mul(h)), spec.apply_group(h).mul(spec.apply_group(g)));
    Ok(())
}

pub fn specialization_laws(u: &GroupRingElem<Q>, v: &GroupRingElem<Q>) -> Law {
    for map in [MapKind::Psi, MapKind::Phi] {
        prop_assert_eq!(map.apply::<Q>(&u.mul(v)), map.apply::<Q>(u).mul(&map.apply::<Q>(v)));
    }
    Ok(())
}

pub fn weyl_action_laws(u: &WeylElem, v: &WeylElem, f: &UniPoly<Q>) -> Law {
    let bound = 16;
    let lhs = weyl_action_oracle(&u.mul(v), f, bound).unwrap();
    let rhs = weyl_action_oracle(u, &weyl_action_oracle(v, f, bound).unwrap(), bound).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn weyl_to_cyclic_laws(u: &WeylElem, v: &WeylElem) -> Law {
    let lhs = weyl_to_cyclic(&u.mul(v)).unwrap();
    let rhs = weyl_to_cyclic(u).unwrap().mul(&weyl_to_cyclic(v).unwrap());
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn quaternion_rep_laws(x: &QuatElem<Q>, y: &QuatElem<Q>) -> Law {
    for over in [RepField::L, RepField::K] {
        prop_assert_eq!(x.mul(y).reg_rep(over), x.reg_rep(over).mul(&y.reg_rep(over)));
        let det = x.reg_rep(over).det();
        prop_assert_eq!(det.as_base(), Some(&x.reduced_norm()));
    }
    Ok(())
}

pub fn cyclic_rep_laws(x: &CycElem, y: &CycElem) -> Law {
    prop_assert_eq!(x.mul(y).reg_rep(), x.reg_rep().mul(&y.reg_rep()));
    Ok(())
}

pub fn conjugate_class_laws(class: Order2Class, g: &IntMatrix2) -> Law {
    let a = g.conjugate(&class.representative());
    let (c, t) = classify_order2(&a).unwrap();
    prop_assert_eq!(c, class);
    prop_assert_eq!(t.det().abs(), 1);
    prop_assert_eq!(t.conjugate(&a), class.representative());
    Ok(())
}

pub fn lift_laws(m: &IntMatrix2, g: HeisElem, h: HeisElem) -> Law {
    let f = lift_automorphism(m);
    prop_assert!(f.respects_relation());
    prop_assert_eq!(f.projection(), *m);
    prop_assert_eq!(f.apply(g.mul(h)), f.apply(g).mul(f.apply(h)));
    prop_assert_eq!(f.apply(g).project(), m.act(g.project()));
    Ok(())
}
