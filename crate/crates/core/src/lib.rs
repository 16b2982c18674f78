//! Exact computation of Hochschild cohomology dimensions for finitely
//! presented associative algebras over the rationals.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`linalg`]: rational scalars, sparse matrices, fraction-free
//!   elimination and cochain complexes.
//! * [`ncalg`]: the free associative algebra, deglex orders, Gröbner
//!   completion by overlap resolution, normal words and algebra maps.
//! * [`lie`]: Lie algebras, their modules, Chevalley–Eilenberg complexes and
//!   truncation towers of the adjoint module of an enveloping algebra.
//! * [`hochschild`]: front-ends that turn the above into Hochschild
//!   cohomology dimensions (enveloping-algebra route, polynomial-line route,
//!   and a reduced bar complex oracle for finite-dimensional algebras).
//!
//! Every count is a rank over ℚ. Ranks do not change under field extension,
//! so dimension statements over ℚ hold verbatim over ℂ.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod hochschild;
pub mod lie;
pub mod linalg;
pub mod ncalg;

pub use linalg::{parse_rational, CochainComplex, LinalgError, Rational, SparseMatrix};
