//! Exact arithmetic for multidimensional Catalan numbers.
//!
//! Balanced ballot paths are lattice paths of `k*n` unit steps from the
//! origin to `(n, .., n)` in `Z^k` whose every point satisfies the
//! dominance chain `x1 >= x2 >= .. >= xk`. This crate counts them —
//! weighted by integer weights on up-step heights, bounded by a height
//! cap, or by their exact maximum height or peak count — builds the
//! transfer matrices of the bounded systems automatically, and detects
//! the modular periodicity of the resulting integer sequences.
//!
//! All arithmetic is exact (arbitrary precision); an optional modulus
//! reduces every accumulation step.

pub mod counting;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod periodicity;
pub mod reference;
pub mod render;
pub mod suites;
pub mod transfer;
pub mod weights;

pub use error::{Error, Result};
