//! Solve a large tridiagonal system on the linked chain and look at the
//! operation counters: arithmetic stays linear in n, the pivot queue adds
//! the n log n term.
//!
//! ```sh
//! cargo run --release --example solve_tridiagonal
//! ```

use std::time::Instant;

use ave::corpus::gen_random;
use ave::structure::StructureClass;
use ave::tridiag_sge_solve;

fn main() {
    let n = 500_000;
    let g = gen_random(StructureClass::TridiagonalNormBelowOne, n, 0.95, 7).unwrap();

    let start = Instant::now();
    let sol = tridiag_sge_solve(&g.instance).unwrap();
    let elapsed = start.elapsed();

    println!("n                : {n}");
    println!("wall time        : {elapsed:.2?}");
    println!("arith ops        : {} ({:.2} per variable)", sol.arith_ops, sol.arith_ops as f64 / n as f64);
    println!(
        "queue ops        : {} ({:.2} per n*log2(n))",
        sol.queue_ops,
        sol.queue_ops as f64 / (n as f64 * (n as f64 + 1.0).log2())
    );
    println!("residual_inf     : {:.3e}", sol.residual_inf);

    let err = sol
        .z
        .iter()
        .zip(&g.z)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("error vs known z : {err:.3e}");
    assert!(err < 1e-10);
}
