//! Exact Clifford-algebra construction of the spinor module Δ_{2m} over
//! Gaussian rationals, the so(2m) spin representation, the candidate
//! holonomy-algebra embeddings, and parallel-spinor (annihilator) spaces.

pub mod annihilator;
pub mod clifford;
pub mod embed;

pub use annihilator::{annihilator, holonomy_label, parallel_spinor_verdict, AnnihilatorReport, SpinorVerdict};
pub use clifford::{weight_decomposition, wedge_so_matrix, SpinRep, WeightDecomposition, WeightLevel, MAX_M};
pub use embed::{embed_algebra, EmbedLabel};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("size guard: 2^m exceeds 128 (m = {0}, allowed 2..=7)")]
    SizeGuard(usize),
    #[error("label out of domain: {0}")]
    LabelDomain(String),
    #[error("spin construction failed: {0}")]
    Construction(String),
}
