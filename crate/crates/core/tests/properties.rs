//! Randomized algebraic laws. Every suite runs 128 cases from a fixed seed.

mod common;

use common::*;
use freepairs_core::arith::{ExtDescriptor, Gf3, Q};
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(0x5EED_0001))]

    #[test]
    fn rational_functions_over_q(x in ratfunc::<Q>(), y in ratfunc::<Q>(), z in ratfunc::<Q>()) {
        field_laws(&x, &y, &z)?;
    }

    #[test]
    fn rational_functions_over_gf3(x in ratfunc::<Gf3>(), y in ratfunc::<Gf3>(), z in ratfunc::<Gf3>()) {
        field_laws(&x, &y, &z)?;
    }

    #[test]
    fn quadratic_extension(
        x in ext(ExtDescriptor::<Q>::quadratic_a()),
        y in ext(ExtDescriptor::<Q>::quadratic_a()),
        z in ext(ExtDescriptor::<Q>::quadratic_a()),
    ) {
        quadratic_laws(&x, &y, &z)?;
    }

    #[test]
    fn artin_schreier_extension(
        x in ext(ExtDescriptor::<Gf3>::artin_schreier()),
        y in ext(ExtDescriptor::<Gf3>::artin_schreier()),
        z in ext(ExtDescriptor::<Gf3>::artin_schreier()),
    ) {
        artin_schreier_laws(&x, &y, &z)?;
    }
}

proptest! {
    #![proptest_config(config(0x5EED_0002))]

    #[test]
    fn valuation_at_one_plus_i(
        x in ext(ExtDescriptor::<Q>::quadratic_a()),
        y in ext(ExtDescriptor::<Q>::quadratic_a()),
    ) {
        valuation_laws(&p_one_plus_i(), &x, &y)?;
    }

    #[test]
    fn valuation_at_one_plus_i_squared(
        x in ext(ExtDescriptor::<Gf3>::artin_schreier()),
        y in ext(ExtDescriptor::<Gf3>::artin_schreier()),
    ) {
        valuation_laws(&p_one_plus_i2(), &x, &y)?;
    }
}

proptest! {
    #![proptest_config(config(0x5EED_0003))]

    #[test]
    fn heisenberg_group_laws(g in heis(), h in heis(), k in heis()) {
        heisenberg_laws(g, h, k)?;
    }

    #[test]
    fn involutions_are_anti_automorphisms_of_order_two(
        spec in involution(),
        u in group_ring(),
        v in group_ring(),
        g in heis(),
        h in heis(),
    ) {
        involution_laws(&spec, &u, &v, g, h)?;
    }

    #[test]
    fn specializations_are_multiplicative(u in group_ring(), v in group_ring()) {
        specialization_laws(&u, &v)?;
    }
}

proptest! {
    #![proptest_config(config(0x5EED_0004))]

    #[test]
    fn weyl_product_matches_the_action(u in weyl(), v in weyl(), f in unipoly()) {
        weyl_action_laws(&u, &v, &f)?;
    }

    #[test]
    fn weyl_to_cyclic_is_multiplicative(u in weyl(), v in weyl()) {
        weyl_to_cyclic_laws(&u, &v)?;
    }
}

proptest! {
    #![proptest_config(config(0x5EED_0005))]

    #[test]
    fn quaternion_reps_are_multiplicative(x in quat(), y in quat()) {
        quaternion_rep_laws(&x, &y)?;
    }

    #[test]
    fn cyclic_rep_is_multiplicative(x in cyc(), y in cyc()) {
        cyclic_rep_laws(&x, &y)?;
    }
}
