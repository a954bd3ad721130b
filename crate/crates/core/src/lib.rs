//! Direct solution of absolute value equations `z - S|z| = c`.
//!
//! The equation is a piecewise linear system: rewritten as
//! `(I - S*Sigma) z = c` with a signature matrix `Sigma` satisfying
//! `Sigma z = |z|`, the whole difficulty is finding the right signature among
//! `2^n` candidates, which is NP-hard in general. For four matrix classes --
//! `inf_norm(S) < 1/2`; irreducible with norm at most 1/2; strictly
//! diagonally dominant with norm at most 2/3; tridiagonal with norm below
//! 1 -- the sign of every pivot can be read off the right-hand side, and a
//! signed Gaussian elimination solves the system directly at the cost of
//! ordinary elimination with symmetric pivoting ([`sge::dense`]), or at
//! roughly the cost of sorting `n` floats in the tridiagonal case
//! ([`sge::tridiag`]).
//!
//! The exponential machinery that certifies all of this at small dimension
//! lives in [`oracle`]: full signature enumeration, the sign-real spectral
//! radius, determinant and P-matrix solvability checks, and the linear
//! complementarity reformulation. [`corpus`] holds seeded instance
//! generators for each class plus the catalog of sharpness counterexamples
//! showing that none of the four class bounds can be relaxed.
//!
//! Start with the `examples/` directory: each file is a runnable tour of one
//! capability. A thin `ave` binary exposes the same operations on files in
//! the text format of [`io`].

pub mod corpus;
pub mod error;
pub mod instance;
pub mod io;
pub mod linsolve;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod sge;
pub mod structure;

pub use error::{AveError, Result};
pub use instance::{residual, AveInstance};
pub use matrix::{orthant_check, strict_sign, DenseMatrix, Matrix, Permutation, Signature, TriDiagMatrix};
pub use sge::dense::{sge_solve, sge_solve_instrumented, EliminationState};
pub use sge::tridiag::{tridiag_sge_solve, tridiag_sge_solve_instrumented, ChainSystem};
pub use sge::{choose_sign, select_pivot, SgeSolution, SolveMethod, StepAudit, TOL_SOLVE};
pub use structure::{classify, is_irreducible, is_strict_diag_dominant, is_tridiagonal, StructureClass};
