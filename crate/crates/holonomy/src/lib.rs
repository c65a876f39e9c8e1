//! Holonomy algebras of contact sub-Riemannian structures: infinitesimal
//! Ambrose–Singer generation with covariant-derivative deepening, the
//! subalgebra classifier for the pseudo-Hermitian list, loop transports and
//! θ-integrals, the Codazzi dichotomy report, and isotypic decompositions.

pub mod classify;
pub mod dichotomy;
pub mod generate;
pub mod isotypic;
pub mod transport;

pub use classify::{classify_subalgebra, HolFingerprint, HolLabel};
pub use dichotomy::{dichotomy_report, DichotomyReport};
pub use generate::{
    infinitesimal_holonomy, stabilized_holonomy, ConnectionTag, HolMode, HolonomyReport,
    ANALYTICITY_NOTE, DEFAULT_DEPTH, MAX_DEPTH,
};
pub use isotypic::{isotypic_decomposition, IsotypicBlock, IsotypicReport};
pub use transport::{
    gauss_legendre_10, log_near_identity, parallel_transport, theta_transport, LoopPath, Segment,
    ThetaTransport,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HolError {
    #[error("bracket closure hit the round budget without stabilizing")]
    NoFixpoint,
    #[error("generator family is not bracket-closed")]
    NotClosed,
    #[error("bad holonomy mode: {0}")]
    BadMode(String),
    #[error("bad path: {0}")]
    BadPath(String),
    #[error("theorem identity violated (implementation bug by design): {0}")]
    TheoremViolation(String),
    #[error("computation failed: {0}")]
    Calc(String),
}
