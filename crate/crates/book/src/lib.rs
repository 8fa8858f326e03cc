//! Compiles every Rust listing in `book/src` as a doc-test, one module per
//! chapter so a failure points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}

#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}

#[doc = include_str!("../../../book/src/vandermonde.md")]
pub mod vandermonde {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/nonrecursive.md")]
pub mod nonrecursive {}

#[doc = include_str!("../../../book/src/recursive.md")]
pub mod recursive {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
