//! Fourth-order Picard-Fuchs operators in theta-form, their canonical
//! Frobenius solutions at the point of maximally unipotent monodromy, and
//! analytic continuation of the period vector with its first three
//! derivatives.

mod continuation;
mod evaluate;
mod frobenius;
mod operator;

pub use continuation::{continue_jet, ContinuationPath};
pub use evaluate::evaluate_canonical;
pub use frobenius::{check_recurrence, frobenius_solutions, CanonicalSolutionSet, RecurrenceReport};
pub use operator::{OperatorConfig, PicardFuchsOperator, SingularLocus};

use thiserror::Error;

use crate::numerics::BigComplex;

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("indicial polynomial at 0 is not rho^4: {0}")]
    NonMumOperator(String),
    #[error("malformed operator config: {0}")]
    MalformedConfig(String),
}

#[derive(Debug, Error)]
pub enum EvaluationError {
    #[error("evaluation at the expansion point phi=0 is rejected (log singularity)")]
    AtExpansionPoint,
    #[error("|phi| too large for truncation order {order}: estimated tail 1e{tail_log10:.0} exceeds tolerance")]
    OutsideDisc { order: usize, tail_log10: f64 },
}

#[derive(Debug, Error)]
pub enum ContinuationError {
    #[error("required step size underflowed working precision")]
    StepUnderflow,
    #[error("path passes within 10^(-digits/4) of the singular point near ({0}, {1})")]
    PathTooCloseToSingularity(f64, f64),
    #[error("start jet is not at the first waypoint")]
    StartMismatch,
    #[error("empty continuation path")]
    EmptyPath,
}

/// The canonical period vector and its first three phi-derivatives at a
/// point: `w[k][j] = d^j varpi_k / d phi^j`.
#[derive(Clone)]
pub struct PeriodJet {
    pub point: BigComplex,
    pub w: [[BigComplex; 4]; 4],
}

impl PeriodJet {
    pub fn bits(&self) -> u32 {
        self.point.bits()
    }

    /// The period vector (0th derivative column).
    pub fn periods(&self) -> [BigComplex; 4] {
        std::array::from_fn(|k| self.w[k][0].clone())
    }

    /// Column of j-th derivatives of all four periods.
    pub fn derivative_column(&self, j: usize) -> [BigComplex; 4] {
        std::array::from_fn(|k| self.w[k][j].clone())
    }

    /// Determinant of the full 4x4 jet matrix (nonzero at regular points).
    pub fn wronskian(&self) -> BigComplex {
        det4(&self.w)
    }
}

fn det4(m: &[[BigComplex; 4]; 4]) -> BigComplex {
    let bits = m[0][0].bits();
    let mut det = BigComplex::zero(bits);
    // Laplace expansion over 3x3 minors; 4x4 is small enough
    for (col, sign) in [(0usize, 1i64), (1, -1), (2, 1), (3, -1)] {
        let minor = det3(m, 0, col);
        det += &(&m[0][col] * &minor).scale_i64(sign);
    }
    det
}

fn det3(m: &[[BigComplex; 4]; 4], skip_row: usize, skip_col: usize) -> BigComplex {
    let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
    let a = |i: usize, j: usize| &m[rows[i]][cols[j]];
    let m00 = a(0, 0) * &(&(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1)));
    let m01 = a(0, 1) * &(&(a(1, 2) * a(2, 0)) - &(a(1, 0) * a(2, 2)));
    let m02 = a(0, 2) * &(&(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0)));
    &(&m00 + &m01) + &m02
}
