//! The guide's chapters, compiled as doctests so the examples cannot drift.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/algebra.md")]
pub mod algebra {}
#[doc = include_str!("../../../book/src/triangles.md")]
pub mod triangles {}
#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}
#[doc = include_str!("../../../book/src/verifier.md")]
pub mod verifier {}
#[doc = include_str!("../../../book/src/numeric.md")]
pub mod numeric {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
