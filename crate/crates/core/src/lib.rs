//! Exact computations with crossed Hopf group-coalgebras.
//!
//! A [`TCoalg`] stores every structure map as a matrix over ℚ (or a prime
//! field). Verifiers return a [`Report`] listing each axiom instance with a
//! witness on failure. Constructions build the coopposite, mirror, dual,
//! double and ribbon extension; the module layer covers representations,
//! Yetter-Drinfeld modules and twisted objects.

pub mod algebra;
pub mod coalgebra;
pub mod constructions;
pub mod demos;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod quasi;
pub mod rep;
pub mod yd;
pub mod report;
pub mod rib;
pub mod scalar;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupElement};
pub use linalg::{Matrix, Tensor3, Vector};
pub use quasi::{
    check_drinfeld_props, drinfeld_elements, mirror_rmatrix, validate_ribbon, validate_rmatrix, RMatrix,
};
pub use report::Report;
pub use scalar::{Field, Scalar};
pub use coalgebra::{coopposite, tcoalg_equal, validate_tcoalg, TCoalg};
