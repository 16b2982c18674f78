//! Finitely presented quotients of the free associative algebra over ℚ.
//!
//! Relations are oriented with a deglex order and completed into a
//! confluent rewriting system by resolving overlap ambiguities in increasing
//! degree. A complete system gives unique normal forms, and the words that
//! avoid every leading word form a ℚ-basis of the quotient.

mod groebner;
mod hom;
mod poly;
mod presentation;
mod word;

pub use groebner::{
    complete_groebner, normal_form, normal_words, normal_words_up_to, GroebnerBasis, QuotientAlgebra, Rule,
};
pub use hom::{
    check_homomorphism, check_inverse_pair, family_isomorphism, FamilyIsomorphism, GeneratorMap, InverseCheck,
};
pub use poly::{NcPolynomial, PolyDisplay};
pub use presentation::{family_presentation, Presentation};
pub use word::{MonomialOrder, Word};

use alloc::string::String;
use thiserror::Error;

/// Default degree bound for completion.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("precedence is not a permutation of the generators")]
    InvalidPrecedence,
    #[error("order has {order} generators but the presentation has {presentation}")]
    OrderMismatch { order: usize, presentation: usize },
    #[error("degree bound {bound} is below the relation degree {degree}")]
    DegreeBoundTooSmall { bound: usize, degree: usize },
    #[error("relation {0} has no nonzero leading coefficient and cannot be oriented")]
    CannotOrient(usize),
    #[error("rewriting system is not complete; normal words would be unsound")]
    IncompleteBasis,
    #[error("map has {found} generator images but the source has {expected} generators")]
    ArityMismatch { expected: usize, found: usize },
    #[error("the family isomorphism is undefined at parameter 0")]
    ZeroParameter,
}
