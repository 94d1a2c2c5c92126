//! Exact computer algebra for corepresentations and irreducible tensor
//! operators of compact quantum group algebras, with O(SU_q(2)) and the
//! function algebra of a finite group as backends.

pub mod cg;
pub mod classical;
pub mod corep;
pub mod error;
pub mod fock;
pub mod haar;
pub mod hopf;
pub mod ito;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod suq2;
pub mod wigner;

pub use error::{Error, Result};
pub use scalar::{q_factorial, q_int, QScalar};
