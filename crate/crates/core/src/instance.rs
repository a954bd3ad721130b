//! The problem type: a coefficient matrix paired with a right-hand side.

use crate::error::{AveError, Result};
use crate::matrix::Matrix;

/// An absolute value equation `z - S|z| = c`.
#[derive(Debug, Clone, PartialEq)]
pub struct AveInstance {
    matrix: Matrix,
    rhs: Vec<f64>,
}

impl AveInstance {
    pub fn new(matrix: Matrix, rhs: Vec<f64>) -> Result<Self> {
        if rhs.len() != matrix.n() {
            return Err(AveError::BadParameter(format!(
                "rhs length {} != dimension {}",
                rhs.len(),
                matrix.n()
            )));
        }
        Ok(Self { matrix, rhs })
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn residual(&self, z: &[f64]) -> Vec<f64> {
        residual(&self.matrix, z, &self.rhs)
    }

    pub fn residual_inf(&self, z: &[f64]) -> f64 {
        self.residual(z)
            .iter()
            .map(|r| r.abs())
            .fold(0.0, f64::max)
    }
}

/// Componentwise `z - S|z| - c`.
pub fn residual(matrix: &Matrix, z: &[f64], c: &[f64]) -> Vec<f64> {
    assert_eq!(z.len(), matrix.n());
    assert_eq!(c.len(), matrix.n());
    let s_abs_z = matrix.matvec_abs(z);
    (0..z.len()).map(|i| z[i] - s_abs_z[i] - c[i]).collect()
}
