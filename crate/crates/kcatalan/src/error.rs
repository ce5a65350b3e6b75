//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Lattice objects are defined for dimension k >= 2 only.
    #[error("dimension k must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    /// A step direction outside 1..=k.
    #[error("step direction {direction} out of range 1..={k}")]
    DirectionOutOfRange { direction: usize, k: usize },

    /// A step sequence that is not a balanced ballot path.
    #[error("invalid ballot path: {reason}")]
    InvalidPath { reason: String },

    /// Height bound below k-1: no path of positive length fits, the state
    /// system would be empty.
    #[error("height bound {bound} is below the minimum reachable height {min} for k={k}")]
    BoundBelowMinimum { k: usize, bound: i64, min: i64 },

    #[error("weight spec syntax error at byte {position}: {message}")]
    WeightSpec { position: usize, message: String },

    #[error("modulus must be at least {min}, got {got}")]
    ModulusTooSmall { got: u64, min: u64 },

    /// The closed form's division left a remainder; this signals an
    /// internal inconsistency, not bad input.
    #[error("nonexact division in closed form for k={k}, n={n}")]
    InexactDivision { k: usize, n: u32 },

    /// Brute-force enumeration refused: the path count estimate is over the cap.
    #[error("path count estimate {estimate} exceeds enumeration cap {cap}")]
    CapExceeded { estimate: String, cap: u64 },

    /// Cycle detection ran out of budget before the orbit revisited a state.
    #[error("cycle undetermined after {steps} steps (budget exhausted)")]
    Undetermined { steps: u64 },

    #[error("negative height cap {0} rejected")]
    NegativeHeightCap(i64),

    /// A verification batch found a disagreement.
    #[error("{0}")]
    Check(String),

    /// An output file could not be written.
    #[error("cannot write {path}: {message}")]
    OutputUnwritable { path: String, message: String },
}
