//! Contact sub-Riemannian structures from field data: Reeb field, sub-torsion,
//! Schouten/adapted/Wagner connections, their curvature tensors, the identity
//! suite, and the pseudo-Hermitian toolkit (Nijenhuis, Tanaka–Webster, Ricci,
//! the R_τ/R_0 split, ψ).

pub mod connection;
pub mod cr;
pub mod curvature;
pub mod fixtures;
pub mod identities;
pub mod model;
pub mod pointwise;
pub mod wagner;

pub use connection::{
    adapted_connection, cov_bilinear, cov_endo, cov_endo_xi, extend_connection,
    schouten_connection, sub_torsion, FrameConnection,
};
pub use cr::{cr_toolkit, psi_endomorphism, ricci_suite, theorem7_tensors, CrReport, PsiReport, RicciReport, TauSpectrum, Theorem7Report};
pub use curvature::{
    cov_curvature, cov_curvature_xi, cov_xi_family, cov_xi_family_xi, curvature_at_point,
    extended_curvature, schouten_curvature, xi_curvature, CurvatureAtPoint, CurvatureField,
};
pub use identities::{
    codazzi_defect, identity_suite, locally_subsym_flags, CodazziReport, IdentityCheck,
    IdentityStatus, LocSymFlags,
};
pub use model::ContactModel;
pub use wagner::{dtheta_inverse, pairing, pairing_at, Geometry};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeoError {
    #[error("not a contact structure: {0}")]
    NotContact(String),
    #[error("J is not an almost complex structure (J² ≠ -I)")]
    NotAlmostComplex,
    #[error("model validation failed: {0}")]
    Validation(String),
    #[error("theorem identity violated (implementation bug by design): {0}")]
    TheoremViolation(String),
    #[error("calculus error: {0}")]
    Calc(String),
}
