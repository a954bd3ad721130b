//! Cost scaling of the two solvers: the dense elimination tracks n^3/3
//! fused multiply-adds, the chain solver stays linear with an n log n
//! queue term.
//!
//! ```sh
//! cargo run --release --example operation_counts
//! ```

use ave::corpus::gen_random;
use ave::structure::StructureClass;
use ave::{sge_solve, tridiag_sge_solve};

fn main() {
    println!("dense elimination (expected ~ n^3/3 arith ops):");
    println!("{:>6} {:>12} {:>12} {:>8}", "n", "arith", "n^3/3", "ratio");
    for n in [50, 100, 200, 400] {
        let g = gen_random(StructureClass::NormBelowHalf, n, 0.45, 11).unwrap();
        let sol = sge_solve(&g.instance).unwrap();
        let cubic = (n * n * n) as f64 / 3.0;
        println!(
            "{:>6} {:>12} {:>12.0} {:>8.3}",
            n,
            sol.arith_ops,
            cubic,
            sol.arith_ops as f64 / cubic
        );
    }

    println!("\nchain elimination (arith ~ C*n, queue ~ C'*n*log2 n):");
    println!(
        "{:>8} {:>10} {:>10} {:>12} {:>10}",
        "n", "arith", "arith/n", "queue", "queue/nlgn"
    );
    for exp in [3u32, 4, 5, 6] {
        let n = 10usize.pow(exp);
        let g = gen_random(StructureClass::TridiagonalNormBelowOne, n, 0.95, 11).unwrap();
        let sol = tridiag_sge_solve(&g.instance).unwrap();
        let nlgn = n as f64 * (n as f64 + 1.0).log2();
        println!(
            "{:>8} {:>10} {:>10.2} {:>12} {:>10.2}",
            n,
            sol.arith_ops,
            sol.arith_ops as f64 / n as f64,
            sol.queue_ops,
            sol.queue_ops as f64 / nlgn
        );
    }
}
