//! Rewrite an equilibrium problem `A x + max(0, x) = b` into the standard
//! form `z - S|z| = c` (via `(2A + I) x + |x| = 2b`), solve it, and check
//! the original equation.
//!
//! ```sh
//! cargo run --example equilibrium_conversion
//! ```

use ave::oracle::equilibrium_to_ave;
use ave::{sge_solve, DenseMatrix};

fn main() {
    // 2A + I must be regular and give inf_norm(-(2A+I)^-1) < 1
    let a = DenseMatrix::from_rows(&[
        vec![0.9, 0.2, -0.1],
        vec![0.1, 1.1, 0.2],
        vec![-0.2, 0.1, 0.8],
    ])
    .unwrap();
    let b = vec![2.0, -1.0, 0.5];

    let inst = equilibrium_to_ave(&a, &b).unwrap();
    println!("converted coefficient norm: {}", inst.matrix().inf_norm());
    println!("converted rhs            : {:?}", inst.rhs());

    let sol = sge_solve(&inst).unwrap();
    let x = &sol.z;
    println!("x = {x:?}");

    // check A x + max(0, x) = b on the original data
    let mut worst = 0.0f64;
    for i in 0..3 {
        let ax: f64 = (0..3).map(|j| a.get(i, j) * x[j]).sum();
        let lhs = ax + x[i].max(0.0);
        worst = worst.max((lhs - b[i]).abs());
    }
    println!("equilibrium residual     : {worst:.3e}");
    assert!(worst <= 1e-8 * (1.0 + 2.0));
}
