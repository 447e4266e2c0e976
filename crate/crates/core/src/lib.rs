//! Exact computations for Yangian-type algebras built from centralizers in
//! `U(gl(N)^{⊕L})`: PBW arithmetic, lifted special elements, universal
//! commutation relations, the Poisson layer and matrix-evaluation oracles.

pub mod error;
pub mod independence;
pub mod lift;
pub mod linalg;
pub mod matrix;
pub mod pbw;
pub mod poisson;
pub mod report;
pub mod scalar;
pub mod stable;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
