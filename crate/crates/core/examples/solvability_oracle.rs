//! Exhaustive solvability checks at small dimension: enumerate all 2^n
//! signatures, compute the sign-real spectral radius, and confirm that the
//! three unique-solvability characterizations agree.
//!
//! ```sh
//! cargo run --example solvability_oracle
//! ```

use ave::oracle::{
    check_unique_solvability, enumerate_solutions, sign_real_spectral_radius, to_lcp,
};
use ave::report::solvability_text;
use ave::{AveInstance, DenseMatrix, Matrix};

fn main() {
    let s = DenseMatrix::from_rows(&[
        vec![0.3, -0.2, 0.1],
        vec![0.1, 0.2, -0.3],
        vec![-0.2, 0.1, 0.3],
    ])
    .unwrap();

    println!("== solvability report (norm {} < 1) ==", Matrix::Dense(s.clone()).inf_norm());
    let report = check_unique_solvability(&s, 20).unwrap();
    print!("{}", solvability_text(&report));
    assert!(report.rho_s < 1.0);
    assert!(report.det_all_positive && report.p_matrix == Some(true));

    // enumeration finds the one orthant-consistent solution
    let inst = AveInstance::new(Matrix::Dense(s.clone()), vec![1.0, -0.5, 0.25]).unwrap();
    let e = enumerate_solutions(&inst, 20).unwrap();
    println!("\n== enumeration over 8 signatures ==");
    for ((sigma, z), support) in e.solutions.iter().zip(&e.support) {
        println!("signature {sigma} (found {support}x): z = {z:?}");
    }

    // the complementarity reformulation carries the same solution
    let lcp = to_lcp(&inst).unwrap();
    let z = &e.solutions[0].1;
    let (u, w) = ave::oracle::split_complementary(z);
    let mu_q: Vec<f64> = (0..3)
        .map(|i| (0..3).map(|j| lcp.m.get(i, j) * u[j]).sum::<f64>() + lcp.q[i])
        .collect();
    let err = w
        .iter()
        .zip(&mu_q)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("\n== LCP reformulation ==");
    println!("w = M u + q residual: {err:.3e}");
    assert!(err < 1e-9);

    // unsolvable comparison point: rho_s hits 1 at S = -I
    let neg_i = DenseMatrix::scaled_identity(3, -1.0);
    println!(
        "\nsign-real spectral radius of -I: {}",
        sign_real_spectral_radius(&neg_i, 8).unwrap()
    );
}
