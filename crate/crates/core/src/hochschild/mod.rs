//! Hochschild cohomology front-ends.
//!
//! * Enveloping algebras `U(g)`: `HH^n(U(g), M) = H^n(g, M_ad)` where `M_ad`
//!   is `M` with `x·m = xm − mx`. A plain `g`-module `V` is used as a
//!   bimodule whose right action factors through the counit, so its
//!   commutator module is `V` itself.
//! * The polynomial line `ℚ[t]`: the two-term bimodule resolution gives
//!   `HH^0 = ker [t, −]`, `HH^1 = coker [t, −]` and nothing above.
//! * Finite-dimensional algebras: the reduced (normalized) bar complex,
//!   used as a brute-force oracle.

mod finite;
mod polyline;
mod profile;
mod ug;

pub use finite::{
    bar_complex, bar_hh_dims, bar_hh_dims_with_cap, center_dim, Bimodule, FiniteDimAlgebra, DEFAULT_COCHAIN_CAP,
};
pub use polyline::{hh0_homology_polyline, hh_polyline, vdb_duality_check, GradedModule};
pub use profile::{HHProfile, HHValue};
pub use ug::{hh_ug, ug_profile, UgCoefficients, UgValue};

use crate::lie::LieError;
use crate::linalg::LinalgError;
use crate::ncalg::NcError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochschildError {
    #[error("multiplication or unit data has the wrong shape")]
    Shape,
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("unit laws fail")]
    Unit,
    #[error("bimodule axiom fails: {0}")]
    BimoduleAxiom(&'static str),
    #[error("cochain space of dimension {dim} exceeds the cap {cap}")]
    CochainCap { dim: usize, cap: usize },
    #[error("action at degree {0} does not preserve the degree")]
    GradingViolation(usize),
    #[error("module has pieces up to degree {available}, asked for {requested}")]
    DegreeOutOfRange { requested: usize, available: usize },
    #[error("profile has a nonzero entry at level {level}, above its structural bound {bound}")]
    StructuralViolation { level: usize, bound: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Nc(#[from] NcError),
}
