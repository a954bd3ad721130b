//! Seeded instance generation for each guaranteed class, with the knobs the
//! test corpus uses: class, dimension, norm bound, boundary mode.
//!
//! ```sh
//! cargo run --example generate_corpus
//! ```

use ave::corpus::{gen_random, gen_random_boundary, gen_random_symmetric_tridiag};
use ave::structure::{classify, StructureClass};

fn main() {
    let classes = [
        (StructureClass::NormBelowHalf, 0.49),
        (StructureClass::IrreducibleNormAtMostHalf, 0.5),
        (StructureClass::DiagDominantNormAtMostTwoThirds, 2.0 / 3.0),
        (StructureClass::TridiagonalNormBelowOne, 0.95),
    ];

    for (kind, bound) in classes {
        let g = gen_random(kind, 6, bound, 42).unwrap();
        println!(
            "{:32} norm {:<20} classified {}",
            kind.to_string(),
            g.instance.matrix().inf_norm(),
            classify(g.instance.matrix())
        );
        // identical arguments give identical instances, bit for bit
        let again = gen_random(kind, 6, bound, 42).unwrap();
        assert_eq!(g.instance, again.instance);
    }

    // boundary mode plants exact zeros in the solution
    let g = gen_random_boundary(StructureClass::NormBelowHalf, 10, 0.4, 7).unwrap();
    println!(
        "\nboundary-mode solution with {} zero entries: {:?}",
        g.z.iter().filter(|&&z| z == 0.0).count(),
        g.z
    );

    // symmetric tridiagonal draws for the chain solver
    let g = gen_random_symmetric_tridiag(8, 0.9, 3).unwrap();
    println!(
        "\nsymmetric tridiagonal: symmetric = {}, norm = {}",
        g.instance.matrix().is_symmetric(),
        g.instance.matrix().inf_norm()
    );
}
