//! Solve a small dense absolute value equation and inspect the output.
//!
//! ```sh
//! cargo run --example solve_dense
//! ```

use ave::report::solution_text;
use ave::{sge_solve, AveInstance, DenseMatrix, Matrix};

fn main() {
    // z - S|z| = c with inf_norm(S) = 0.45 < 1/2: the sign of every pivot
    // can be read off the right-hand side, so one elimination pass solves it
    let s = DenseMatrix::from_rows(&[
        vec![0.10, -0.20, 0.15],
        vec![-0.05, 0.25, 0.10],
        vec![0.20, 0.05, -0.20],
    ])
    .unwrap();
    let c = vec![0.8, -1.1, 0.3];
    let inst = AveInstance::new(Matrix::Dense(s), c).unwrap();

    let sol = sge_solve(&inst).unwrap();
    print!("{}", solution_text(&sol));

    // the residual is checked against the original instance
    assert!(sol.residual_inf <= ave::TOL_SOLVE * (1.0 + 1.1));
    println!("\nsolution entries:");
    for (i, z) in sol.z.iter().enumerate() {
        println!("  z[{i}] = {z}");
    }
}
