//! Lie algebras over ℚ, finite-dimensional modules, Chevalley–Eilenberg
//! cochain complexes, and truncation towers of the adjoint module of an
//! enveloping algebra.

mod algebra;
mod ce;
mod module;
mod tower;

pub use algebra::LieAlgebra;
pub use ce::{ce_cohomology_dims, ce_complex, cochain_map};
pub use module::{
    adjoint_tower, adjoint_truncation, adjoint_truncation_with_basis, character_module, GModule, ModuleTower,
};
pub use tower::{tower_colimit_ranks, TowerProfile};

use crate::linalg::LinalgError;
use crate::ncalg::{NcError, Word};
use thiserror::Error;

/// Default number of adjoint truncation stages (`N = 0..=12`).
pub const DEFAULT_TOWER_TOP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("structure constants have the wrong shape")]
    Shape,
    #[error("bracket is not antisymmetric on basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("module axiom rho([e{0}, e{1}]) = [rho(e{0}), rho(e{1})] fails")]
    ModuleAxiom(usize, usize),
    #[error("values do not vanish on the bracket [e{0}, e{1}]; not a character")]
    NotACharacter(usize, usize),
    #[error("commutator with generator {generator} leaves the truncation (word {word:?})")]
    ClosureViolation { generator: usize, word: Word },
    #[error("Lie algebra has {lie} basis elements but the algebra has {algebra} generators")]
    GeneratorMismatch { lie: usize, algebra: usize },
    #[error("inclusion {0} is not an injective module map")]
    NotAnInclusion(usize),
    #[error("a tower needs at least two stages")]
    TowerTooShort,
    #[error("the family Lie algebra is undefined at parameter 0")]
    ZeroParameter,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Nc(#[from] NcError),
}
