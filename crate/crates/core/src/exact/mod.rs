//! Exact rational linear algebra: the inertia oracle, congruences,
//! Schur complements and the closed-form even-cycle constructions.

mod cycle;
mod elimination;
mod matrix;

use thiserror::Error;

pub use cycle::{
    even_cycle_inverse, even_cycle_row_sum, pendant_reduction, pendant_row, schur_scalar,
    schur_scalar_closed_form,
};
pub use elimination::{
    congruence_transform, haynsworth_inertia, inverse, ldlt_inertia, linear_solve, nullspace, rank,
    rational_nullspace, schur_complement,
};
pub use matrix::{
    format_rational, parse_rational, rat, ratio, MatrixJson, Rational, RationalMatrix,
    RationalSymMatrix,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("congruence matrix is singular")]
    SingularS,
    #[error("leading block is singular")]
    SingularLeadingBlock,
    #[error("bad pendant ordering: {0}")]
    BadOrdering(String),
    #[error("cycle length {0} is not even (>= 4)")]
    OddLength(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
