//! New T-coalgebras from old: mirror, dual coopposite, double, ribbon extension.

mod double;
mod dual_coop;
mod mirror;
mod ribbon_ext;

pub use double::{double, DoubleBasis};
pub(crate) use double::commute_terms;
pub use dual_coop::{dual_coop, DualBasis};
pub use mirror::mirror;
pub use ribbon_ext::{extension_generator, ribbon_extension};
