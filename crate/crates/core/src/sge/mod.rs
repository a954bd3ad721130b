//! Signed Gaussian elimination.
//!
//! Gaussian elimination on `I - S*Sigma` where the sign of each pivot
//! variable is guessed from the right-hand side: the entry of maximal
//! absolute value is pivoted to the front symmetrically and its sign is taken
//! as the sign of the corresponding solution entry. For matrices in any of
//! the four guaranteed classes (see [`crate::structure::classify`]) every
//! guess is provably correct and the unique solution comes out of a single
//! forward elimination plus back substitution.

pub mod dense;
pub mod tridiag;

use crate::matrix::{Permutation, Signature};
use crate::structure::StructureClass;

/// Residual bound the solver meets on guaranteed-class inputs:
/// `residual_inf <= TOL_SOLVE * (1 + inf_norm(c))`.
pub const TOL_SOLVE: f64 = 1e-9;

/// Slack for the instrumented per-step structure checks. The preserved
/// properties hold exactly in real arithmetic; this absorbs roundoff.
pub const AUDIT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Dense,
    Tridiag,
}

impl std::fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveMethod::Dense => "dense",
            SolveMethod::Tridiag => "tridiag",
        })
    }
}

/// Solver output. `z` and `signature` are reported in original index order;
/// `permutation` records the elimination order (`map[step] = original index
/// eliminated at that step`).
#[derive(Debug, Clone)]
pub struct SgeSolution {
    pub z: Vec<f64>,
    pub signature: Signature,
    pub permutation: Permutation,
    pub residual_inf: f64,
    /// Pivot-search comparisons (dense path).
    pub comparisons: u64,
    /// Fused multiply-add/divide count of the elimination and substitution.
    pub arith_ops: u64,
    /// Priority-queue work (tridiagonal path), counted per sift comparison
    /// and per push/pop event.
    pub queue_ops: u64,
    /// Set when `inf_norm(S) >= 1`: outside every guaranteed class, the
    /// solve is best-effort.
    pub norm_warning: bool,
    /// Whether the returned `z` lies in the orthant of the guessed
    /// signature. Always true on guaranteed classes; false signals a failed
    /// sign guess.
    pub orthant_consistent: bool,
    pub class: StructureClass,
    pub method: SolveMethod,
}

/// Sign guess from a right-hand-side entry: `-1` for negative values, `+1`
/// otherwise (zero maps to `+1`).
#[inline]
pub fn choose_sign(c: f64) -> i8 {
    if c < 0.0 {
        -1
    } else {
        1
    }
}

/// Smallest index `k` in `from..c.len()` with `|c[k]|` maximal; ties break to
/// the smallest index.
pub fn select_pivot(c: &[f64], from: usize) -> usize {
    debug_assert!(from < c.len());
    let mut best = from;
    let mut best_val = c[from].abs();
    for (k, &v) in c.iter().enumerate().skip(from + 1) {
        if v.abs() > best_val {
            best_val = v.abs();
            best = k;
        }
    }
    best
}

/// Counts of per-step invariant violations from an instrumented run.
///
/// Each elimination step of the signed elimination must keep the reduced
/// matrix inside the class of the input: the infinity norm must not grow,
/// strict diagonal dominance, symmetry and tridiagonal (chain) structure must
/// be preserved when the input has them, and for `inf_norm(S) = xi < 1`
/// every pivot is bounded below by `1 - xi`.
#[derive(Debug, Clone, Default)]
pub struct StepAudit {
    pub steps: usize,
    pub norm_violations: usize,
    pub sdd_violations: usize,
    pub symmetry_violations: usize,
    pub chain_violations: usize,
    pub pivot_floor_violations: usize,
    /// Largest reduced-matrix norm observed.
    pub max_norm_seen: f64,
    pub checked_sdd: bool,
    pub checked_symmetry: bool,
    pub checked_chain: bool,
}

impl StepAudit {
    pub fn total_violations(&self) -> usize {
        self.norm_violations
            + self.sdd_violations
            + self.symmetry_violations
            + self.chain_violations
            + self.pivot_floor_violations
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_guess_branches() {
        assert_eq!(choose_sign(-0.5), -1);
        assert_eq!(choose_sign(0.0), 1);
        assert_eq!(choose_sign(0.7), 1);
        assert_eq!(choose_sign(-0.0), 1);
    }

    #[test]
    fn pivot_selection_tie_break() {
        // tie on absolute value picks the earlier entry
        assert_eq!(select_pivot(&[-0.5, 0.5], 0), 0);
        assert_eq!(select_pivot(&[0.0, 0.0, 0.0], 0), 0);
        assert_eq!(select_pivot(&[0.1, -0.9, 0.3], 1), 1);
        assert_eq!(select_pivot(&[0.1, -0.9, 0.3], 0), 1);
        assert_eq!(select_pivot(&[0.1, 0.2, -0.2], 1), 1);
    }
}
