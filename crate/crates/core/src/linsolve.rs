//! Plumbing linear solves: LU with partial pivoting, determinants, inverses.
//!
//! This backs the enumeration oracle; the signed elimination has its own
//! dedicated routines.

use crate::error::{AveError, Result};
use crate::matrix::DenseMatrix;

/// Relative residual the plumbing solves are expected to reach on the
/// well-conditioned systems this crate produces.
pub const TOL_LIN: f64 = 1e-10;

/// Scale-invariant zero-pivot threshold.
pub fn pivot_eps(inf_norm: f64) -> f64 {
    1e-12 * (1.0 + inf_norm)
}

/// Scale for guarded determinant-sign decisions: `(1 + inf_norm)^n` bounds
/// `|det|` from above, so `1e-12 * det_scale` is a relative zero band.
pub fn det_scale(m: &DenseMatrix) -> f64 {
    (1.0 + m.inf_norm()).powi(m.n() as i32)
}

/// Packed LU factors with the row permutation.
pub struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

impl LuFactors {
    /// Factor with partial pivoting. Does not fail; a numerically zero pivot
    /// column marks the factorization singular.
    pub fn new(m: &DenseMatrix) -> Self {
        let n = m.n();
        let eps = pivot_eps(m.inf_norm());
        let mut lu = m.entries().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;

        for k in 0..n {
            let mut best = k;
            let mut best_val = lu[k * n + k].abs();
            for i in k + 1..n {
                let v = lu[i * n + k].abs();
                if v > best_val {
                    best_val = v;
                    best = i;
                }
            }
            if best_val < eps {
                singular = true;
                break;
            }
            if best != k {
                for j in 0..n {
                    lu.swap(k * n + j, best * n + j);
                }
                perm.swap(k, best);
                sign = -sign;
            }
            let pivot = lu[k * n + k];
            for i in k + 1..n {
                let factor = lu[i * n + k] / pivot;
                lu[i * n + k] = factor;
                for j in k + 1..n {
                    lu[i * n + j] -= factor * lu[k * n + j];
                }
            }
        }

        Self {
            n,
            lu,
            perm,
            sign,
            singular,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Zero when singular, otherwise the signed product of pivots.
    pub fn det(&self) -> f64 {
        if self.singular {
            return 0.0;
        }
        let mut d = self.sign;
        for k in 0..self.n {
            d *= self.lu[k * self.n + k];
        }
        d
    }

    /// Solve `M x = b`; requires a nonsingular factorization.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        if self.singular {
            return Err(AveError::SingularMatrix);
        }
        let n = self.n;
        assert_eq!(b.len(), n);
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                x[i] -= self.lu[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu[i * n + j] * x[j];
            }
            x[i] /= self.lu[i * n + i];
        }
        Ok(x)
    }
}

/// One-shot solve of `M x = b` by elimination with partial pivoting.
pub fn lu_solve(m: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    LuFactors::new(m).solve(b)
}

/// Determinant via LU; 0.0 for numerically singular input.
pub fn determinant(m: &DenseMatrix) -> f64 {
    LuFactors::new(m).det()
}

/// Matrix inverse via LU column solves.
pub fn invert(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.n();
    let f = LuFactors::new(m);
    if f.is_singular() {
        return Err(AveError::SingularMatrix);
    }
    let mut inv = DenseMatrix::zeros(n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = f.solve(&e)?;
        e[j] = 0.0;
        for i in 0..n {
            inv.set(i, j, col[i]);
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_solve_returns_rhs() {
        let b = vec![3.0, -4.0, 0.25];
        let x = lu_solve(&DenseMatrix::identity(3), &b).unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn upper_triangular_back_substitution() {
        // hand back-substitution: x2 = 2, x1 = 1 + x2/2 = 2
        let m = DenseMatrix::from_rows(&[vec![1.0, -0.5], vec![0.0, 0.5]]).unwrap();
        let x = lu_solve(&m, &[1.0, 1.0]).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-14);
        assert!((x[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix_is_singular() {
        let m = DenseMatrix::zeros(2);
        assert!(matches!(
            lu_solve(&m, &[1.0, 1.0]),
            Err(AveError::SingularMatrix)
        ));
        assert_eq!(determinant(&m), 0.0);
    }

    #[test]
    fn determinant_sign_under_pivoting() {
        // det = -3, pivoting must keep the sign straight
        let m = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!((determinant(&m) + 3.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_of_triangular() {
        let m = DenseMatrix::from_rows(&[vec![1.0, -0.5], vec![0.0, 0.5]]).unwrap();
        let inv = invert(&m).unwrap();
        assert!((inv.get(0, 0) - 1.0).abs() < 1e-14);
        assert!((inv.get(0, 1) - 1.0).abs() < 1e-14);
        assert!((inv.get(1, 0) - 0.0).abs() < 1e-14);
        assert!((inv.get(1, 1) - 2.0).abs() < 1e-14);
    }
}
