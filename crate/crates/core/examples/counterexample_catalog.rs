//! Run the sharpness catalog: for each class bound, an instance just outside
//! it where the sign-guessing elimination provably misbehaves.
//!
//! ```sh
//! cargo run --example counterexample_catalog
//! ```

use ave::corpus::{catalog, verify_entry, CATALOG_IDS};
use ave::sge_solve;
use ave::strict_sign;

fn main() {
    println!("catalog ids: {CATALOG_IDS:?}\n");

    for &id in CATALOG_IDS {
        // a representative parametrization per entry
        let (n, eps) = match id {
            "reducible-half" | "eps-above-half" => (2, 0.05),
            "diagdom-sharp" => (5, 0.05),
            _ => (5, 0.05),
        };
        let entry = catalog(id, n, eps).unwrap();
        let failures = verify_entry(&entry);
        println!(
            "{:18} n={:2} property {:22} {}",
            entry.id,
            entry.n,
            entry.expected.name(),
            if failures.is_empty() { "reproduced" } else { "FAILED" }
        );
    }

    // zoom into the diagonally-dominant construction: the first sign guess
    // goes wrong on a nonzero entry, so the solve leaves the true solution
    let entry = catalog("diagdom-sharp", 5, 0.05).unwrap();
    let sol = sge_solve(&entry.instance).unwrap();
    println!("\ndiagdom-sharp, n = 5:");
    println!("  first pivot index   : {}", sol.permutation.get(0) + 1);
    println!("  guessed sign        : {}", sol.signature.sign_i8(0));
    println!("  true sign of z_1    : {}", strict_sign(entry.z[0]));
    println!("  solver z_1          : {:.6}", sol.z[0]);
    println!("  certified z_1       : {:.6}", entry.z[0]);
    println!("  orthant consistent  : {}", sol.orthant_consistent);
}
