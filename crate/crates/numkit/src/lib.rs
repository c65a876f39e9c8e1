//! Exact and floating scalar arithmetic plus the dense linear-algebra
//! kernels (rank, nullspace, inverse, span/bracket closure, commutant)
//! that the geometric layers consume.
//!
//! Three scalar backends share one arithmetic contract: arbitrary-precision
//! rationals, Gaussian rationals (a+bi with rational a, b), and f64 with an
//! explicit tolerance. Mixing backends inside one matrix is rejected at
//! construction, and every float comparison goes through one comparator.

mod closure;
mod mat;
mod scalar;
mod subspace;

pub use closure::{
    bracket_closure, commutant, full_matrix_space, invariant_complex_structures, ClosureOutcome,
};
pub use mat::Mat;
pub use scalar::{Backend, Scalar};
pub use subspace::SubspaceBasis;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumError {
    #[error("mixed scalar backends: {0:?} vs {1:?}")]
    MixedBackend(Backend, Backend),
    #[error("float input requires an explicit tolerance")]
    MissingTolerance,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("bracket closure did not stabilize after {rounds} rounds (dim {dim})")]
    NoFixpoint { rounds: usize, dim: usize },
}

pub type Result<T> = std::result::Result<T, NumError>;

/// Default comparator tolerance for the float backend.
pub const DEFAULT_TOL: f64 = 1e-9;
