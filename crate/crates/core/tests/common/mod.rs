//! Shared helpers for the integration suites. Oracles here are written
//! independently of the library internals they check.

#![allow(dead_code)]

use ave::rng::SplitMix64;
use ave::{DenseMatrix, Matrix};

/// Independent strong-connectivity oracle: boolean transitive closure by
/// repeated matrix "powers" (reach = reach OR reach*adj) until fixpoint.
pub fn strongly_connected_bool_power(m: &DenseMatrix) -> bool {
    let n = m.n();
    if n == 1 {
        return true;
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j) != 0.0).collect())
        .collect();
    // reach = I or adj or adj^2 or ...
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i == j || adj[i][j]).collect())
        .collect();
    for _ in 0..n {
        let mut next = reach.clone();
        for i in 0..n {
            for k in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        next[i][j] |= adj[k][j];
                    }
                }
            }
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    (0..n).all(|i| (0..n).all(|j| reach[i][j]))
}

/// Random dense matrix with infinity norm scaled to exactly-ish `target`.
pub fn random_dense(rng: &mut SplitMix64, n: usize, target: f64) -> DenseMatrix {
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push((0..n).map(|_| rng.uniform(-1.0, 1.0)).collect::<Vec<_>>());
    }
    let mut m = DenseMatrix::from_rows(&rows).unwrap();
    let norm = m.inf_norm();
    if norm > 0.0 {
        let f = target / norm;
        let scaled: Vec<f64> = m.entries().iter().map(|x| x * f).collect();
        m = DenseMatrix::new(n, scaled).unwrap();
    }
    m
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `|a - b| <= tol * (1 + max_abs(b))` componentwise in the infinity norm.
pub fn close_rel(a: &[f64], b: &[f64], tol: f64) -> bool {
    max_diff(a, b) <= tol * (1.0 + max_abs(b))
}

pub fn dense_matrix(m: &Matrix) -> DenseMatrix {
    m.to_dense()
}
