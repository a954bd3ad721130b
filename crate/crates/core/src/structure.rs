//! Structure predicates and the solvable-class classifier.
//!
//! The predicates are structural: zero tests use exact comparison with 0.0.

use crate::matrix::{DenseMatrix, Matrix, TriDiagMatrix};

/// The guaranteed classes, in the order the classifier tests them. A matrix
/// gets the first tag whose condition it satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    /// `inf_norm(S) < 1/2`, arbitrary structure.
    NormBelowHalf,
    /// Irreducible with `inf_norm(S) <= 1/2`.
    IrreducibleNormAtMostHalf,
    /// Strictly diagonally dominant with `inf_norm(S) <= 2/3`.
    DiagDominantNormAtMostTwoThirds,
    /// Tridiagonal with `inf_norm(S) < 1`. The sign-guess guarantee is
    /// established for symmetric matrices; an asymmetric member of this
    /// class that defeats it sits in the catalog as `asym-tridiag-miss`.
    TridiagonalNormBelowOne,
    /// None of the above; no correctness guarantee for the signed elimination.
    Unclassified,
}

impl StructureClass {
    pub fn name(self) -> &'static str {
        match self {
            StructureClass::NormBelowHalf => "NormBelowHalf",
            StructureClass::IrreducibleNormAtMostHalf => "IrreducibleNormAtMostHalf",
            StructureClass::DiagDominantNormAtMostTwoThirds => "DiagDominantNormAtMostTwoThirds",
            StructureClass::TridiagonalNormBelowOne => "TridiagonalNormBelowOne",
            StructureClass::Unclassified => "Unclassified",
        }
    }
}

impl std::fmt::Display for StructureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// True iff the directed graph with an edge `(i, j)` for every nonzero entry
/// `(i, j)` is strongly connected. Dimension one counts as irreducible.
pub fn is_irreducible(m: &Matrix) -> bool {
    let n = m.n();
    if n == 1 {
        return true;
    }
    match m {
        Matrix::Tridiag(t) => tridiag_strongly_connected(t),
        Matrix::Dense(d) => {
            all_reachable_from(d, 0, false) && all_reachable_from(d, 0, true)
        }
    }
}

/// A chain graph is strongly connected iff every link exists in both
/// directions.
fn tridiag_strongly_connected(t: &TriDiagMatrix) -> bool {
    t.sub().iter().all(|&x| x != 0.0) && t.sup().iter().all(|&x| x != 0.0)
}

/// BFS over the nonzero pattern (or its transpose).
fn all_reachable_from(d: &DenseMatrix, start: usize, transpose: bool) -> bool {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            let entry = if transpose { d.get(j, i) } else { d.get(i, j) };
            if entry != 0.0 && !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// True iff `|m_ii| > sum_{j != i} |m_ij|` for every row.
pub fn is_strict_diag_dominant(m: &Matrix) -> bool {
    let n = m.n();
    match m {
        Matrix::Dense(d) => (0..n).all(|i| {
            let off: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| d.get(i, j).abs())
                .sum();
            d.get(i, i).abs() > off
        }),
        Matrix::Tridiag(t) => (0..n).all(|i| {
            let mut off = 0.0;
            if i > 0 {
                off += t.sub()[i - 1].abs();
            }
            if i + 1 < n {
                off += t.sup()[i].abs();
            }
            t.diag()[i].abs() > off
        }),
    }
}

/// True iff every entry with `|i - j| > 1` is exactly zero. Any matrix of
/// dimension one or two is tridiagonal.
pub fn is_tridiagonal(m: &DenseMatrix) -> bool {
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            if i.abs_diff(j) > 1 && m.get(i, j) != 0.0 {
                return false;
            }
        }
    }
    true
}

fn is_tridiagonal_matrix(m: &Matrix) -> bool {
    match m {
        Matrix::Tridiag(_) => true,
        Matrix::Dense(d) => is_tridiagonal(d),
    }
}

/// First matching class, testing the conditions in their stated order.
pub fn classify(m: &Matrix) -> StructureClass {
    let norm = m.inf_norm();
    if norm < 0.5 {
        StructureClass::NormBelowHalf
    } else if norm <= 0.5 && is_irreducible(m) {
        StructureClass::IrreducibleNormAtMostHalf
    } else if norm <= 2.0 / 3.0 && is_strict_diag_dominant(m) {
        StructureClass::DiagDominantNormAtMostTwoThirds
    } else if norm < 1.0 && is_tridiagonal_matrix(m) {
        StructureClass::TridiagonalNormBelowOne
    } else {
        StructureClass::Unclassified
    }
}
