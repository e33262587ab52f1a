//! The Heisenberg group `<x, y>` with central commutator `lambda`, its group
//! ring, the four classes of involutions, order-two elements of `GL(2, Z)`
//! and the evaluation maps into the quaternion algebra.

mod gl2;
mod group;
mod involution;
mod specialize;

pub use gl2::{classify_order2, lift_automorphism, Automorphism, IntMatrix2, Order2Class};
pub use group::{GroupRingElem, HeisElem};
pub use involution::{InvolutionSpec, InvolutionType};
pub use specialize::{specialize_quat, MapKind};
