//! Skew Reed-Solomon and linearized Reed-Solomon codes with exact
//! arithmetic over GF(p^s) and F_p(z).
//!
//! The crate is organized bottom-up:
//!
//! - [`field`]: fields with an endomorphism σ and a σ-derivation δ.
//! - [`skew`]: the skew polynomial ring F[x; σ, δ], evaluation and operators.
//! - [`geometry`]: minimal skew polynomials, P-bases, conjugacy, skew weights.
//! - [`codes`]: code construction and the linearization maps.
//! - [`metrics`]: Hamming, rank and sum-rank weights, exhaustive distances.
//! - [`spec_file`]: the TOML code-spec format used by the CLI.
//! - [`search`]: random-code sweep for MDS + per-block MRD vs MSRD.

pub mod codes;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod metrics;
pub mod search;
pub mod skew;
pub mod spec_file;

pub use error::{Error, Result};
pub use field::{Centralizer, Field, FieldDescriptor, FieldKind, GaloisField, RationalFunctionField};
pub use skew::{SkewPoly, SkewRing};
