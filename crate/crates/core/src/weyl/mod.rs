//! The first Weyl algebra over the rationals in `t`-before-`s` normal form,
//! its linear involutions, the skew-Laurent model `Q(X)[Y, Y^-1; X -> X+1]`
//! and the maps into the cyclic algebra.

mod algebra;
mod skew;
mod star;

pub use algebra::{weyl_action_oracle, NamedWeylInvolution, WeylElem, WeylInvolutionSpec};
pub use skew::{
    reduce_mod3, skew_to_cyclic, weyl_to_cyclic, weyl_to_cyclic_via_skew, weyl_to_skew,
    SkewLaurent,
};
pub use star::transported_star;
