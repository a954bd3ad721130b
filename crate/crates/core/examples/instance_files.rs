//! The instance text format: comments, dense and tridiagonal storage, and
//! the exactness of the round trip.
//!
//! ```sh
//! cargo run --example instance_files
//! ```

use ave::io::{parse_instance, write_instance};
use ave::sge_solve;

fn main() {
    let text = "\
# two variables, all mass in the second column
dense 2
0 0.5
0 0.5
c: -0.5 0.5
";
    let inst = parse_instance(text).unwrap();
    println!("parsed dense instance, n = {}", inst.n());
    let sol = sge_solve(&inst).unwrap();
    println!("z = {:?}", sol.z);

    // writing uses shortest round-trip decimals: parse(write(x)) == x bitwise
    let written = write_instance(&inst);
    println!("\nwritten back:\n{written}");
    assert_eq!(parse_instance(&written).unwrap(), inst);

    let tri = "\
tridiag 3
0.2 0.2
0.5 -0.5 0.5
-0.2 0.1
c: 1 0 -1
";
    let inst = parse_instance(tri).unwrap();
    println!("parsed tridiagonal instance, norm = {}", inst.matrix().inf_norm());
    let sol = ave::tridiag_sge_solve(&inst).unwrap();
    println!("z = {:?}", sol.z);
    println!("residual = {:.3e}", sol.residual_inf);
}
