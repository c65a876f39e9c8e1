//! Parser and exact calculus for tensor fields on R^n with rational-function
//! coefficients: Lie brackets, Lie derivatives, exterior derivative, and
//! pointwise evaluation. Everything here is exact; no floating point enters
//! except through the explicit `eval_f64` escape hatches used by the ODE
//! integrator downstream.

pub mod fields;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rfmat;

pub use fields::{
    eval_grid, exterior_d, lie_derivative, vf_bracket, CovariantTensor, OneForm, SymTensor,
    TwoForm, VectorField,
};
pub use parse::parse_expr;
pub use poly::{Mono, Poly};
pub use ratfunc::{RatFunc, DEGREE_GUARD};
pub use rfmat::RfMatrix;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CalcError {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("literal denominator expands to the zero polynomial")]
    DivideByZeroPoly,
    #[error("pole at evaluation point: {0}")]
    PoleAtPoint(String),
    #[error("degree overflow: reached total degree {degree}, guard is {limit}")]
    DegreeOverflow { degree: u32, limit: u32 },
    #[error("singular rational-function matrix")]
    SingularMatrix,
}
