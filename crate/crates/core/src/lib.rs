//! Direct constructions of MDS and Near-MDS (NMDS) matrices over finite
//! fields, together with brute-force coding-theoretic checks for every claim
//! they make.
//!
//! - [`gf`]: arithmetic in GF(p^r) from an explicit irreducible polynomial.
//! - [`matrix`]: dense matrices, determinants, ranks, exhaustive minor scans.
//! - [`vandermonde`]: (generalized) Vandermonde matrices and their
//!   determinant formula.
//! - [`codes`]: minimum distance, generalized Hamming weights and
//!   MDS/NMDS classification.
//! - [`construct`]: nonrecursive constructions V₁⁻¹V₂ from two generalized
//!   Vandermonde matrices, including involutory ones.
//! - [`recursive`]: companion matrices whose powers are MDS or NMDS.

pub mod codes;
pub mod construct;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod recursive;
pub mod vandermonde;

pub use error::{Error, Result};
pub use gf::{Elem, Field, Notation};
pub use matrix::FieldMatrix;
