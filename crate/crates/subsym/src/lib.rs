//! Sub-symmetric quadruples, the bracket construction from local Wagner
//! data, holonomy-pair extraction, the §-zoo of model spaces including the
//! two-parameter torsion family, and the stored holonomy table.

pub mod quadruple;
pub mod table1;
pub mod zoo;

pub use quadruple::{
    transvection_restrict, validate_quadruple, AxiomCheck, QuadrupleReport, SubSymQuadruple,
};
pub use table1::{table1_report, Table1Diff, Table1Row};
pub use zoo::{
    algebraic_webster_scalar, expected_family_label, from_local_data, holonomy_pair, zoo,
    HrssData, HrssFactor, ZooKind, ZooResult,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SubsymError {
    #[error("parameter out of domain: {0}")]
    ParamDomain(String),
    #[error("Jacobi identity fails (residual {residual}) at triple {triple:?}")]
    JacobiFail { residual: String, triple: (usize, usize, usize) },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("quadruple validation failed: {0}")]
    ValidationFail(String),
    #[error("table mismatch: {0}")]
    Mismatch(String),
}
