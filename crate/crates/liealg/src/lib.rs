//! Abstract finite-dimensional Lie algebras over exact rationals: structure
//! constants, Jacobi verification, Killing form with exact inertia, derived
//! series, and the fingerprint matcher used by the sub-symmetric zoo.

pub mod fingerprint;
pub mod table;
pub mod zoo_targets;

pub use fingerprint::{
    center, derived_series_dims, killing_ad_invariance_defect, killing_fingerprint,
    symmetric_inertia, LieFingerprint,
};
pub use table::{decompose_in, table_from_matrix_algebra, LieAlgebraTable};
pub use zoo_targets::{match_zoo, target_fingerprints, target_table, ZooLabel, ZooMatch};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("structure constant index out of range: ({0},{1},{2})")]
    BadIndex(usize, usize, usize),
    #[error("Jacobi identity fails (max residual {residual}) at basis triple {triple:?}")]
    JacobiFail { residual: String, triple: (usize, usize, usize) },
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("matrix family is not closed under commutators at pair ({0},{1})")]
    NotClosed(usize, usize),
    #[error("change of basis is singular")]
    SingularBasisChange,
    #[error("linear algebra failure: {0}")]
    Num(String),
}
