//! Walk a few matrices through the class tests in their fixed order:
//! norm below 1/2, irreducible at 1/2, diagonally dominant up to 2/3,
//! tridiagonal below 1.
//!
//! ```sh
//! cargo run --example classify_matrices
//! ```

use ave::{classify, DenseMatrix, Matrix, TriDiagMatrix};

fn main() {
    let cases: Vec<(&str, Matrix)> = vec![
        (
            "0.4 * I (norm 0.4)",
            Matrix::Dense(DenseMatrix::scaled_identity(3, 0.4)),
        ),
        (
            "2-cycle at norm exactly 1/2",
            Matrix::Dense(
                DenseMatrix::from_rows(&[vec![0.0, 0.5], vec![0.5, 0.0]]).unwrap(),
            ),
        ),
        (
            // reducible at norm 1/2, so conditions 1-3 all fail; at n = 2 the
            // tridiagonal condition still catches it
            "reducible at norm exactly 1/2 (2x2 is tridiagonal)",
            Matrix::Dense(
                DenseMatrix::from_rows(&[vec![0.0, 0.5], vec![0.0, 0.5]]).unwrap(),
            ),
        ),
        (
            "dominant diagonal at norm 0.6",
            Matrix::Dense(
                DenseMatrix::from_rows(&[vec![0.45, 0.15], vec![-0.1, -0.5]]).unwrap(),
            ),
        ),
        (
            "-0.9 * I (dominant but norm > 2/3, still tridiagonal)",
            Matrix::Dense(DenseMatrix::scaled_identity(5, -0.9)),
        ),
        (
            "tridiagonal storage at norm 0.9",
            Matrix::Tridiag(
                TriDiagMatrix::new(vec![0.2, 0.2], vec![0.5, 0.5, 0.5], vec![0.2, 0.2]).unwrap(),
            ),
        ),
        (
            "identity (norm 1: outside every class)",
            Matrix::Dense(DenseMatrix::identity(2)),
        ),
    ];

    for (label, m) in &cases {
        println!(
            "{:55} inf_norm {:<22} -> {}",
            label,
            m.inf_norm(),
            classify(m)
        );
    }
}
