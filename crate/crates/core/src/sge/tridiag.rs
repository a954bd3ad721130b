//! Near-linear signed elimination for tridiagonal coefficient matrices.
//!
//! Variables live on a doubly linked chain. Each step eliminates the alive
//! variable whose right-hand-side entry has maximal absolute value (smallest
//! index on ties, matching the dense pivot rule); only its at most two chain
//! neighbors receive Schur updates, and eliminating an interior node splices
//! its neighbors together with one new coupling, so reduced systems stay
//! chains. A max-priority queue keyed by |c| replaces the dense pivot scan:
//! an elimination can perturb two entries of c, so a sorted-array sweep with
//! one adjacent comparison per step does not cover interior pivots, while a
//! queue gives the same `O(n log n)` total bound for both boundary and
//! interior pivots.

use crate::error::{AveError, Result};
use crate::instance::AveInstance;
use crate::linsolve::pivot_eps;
use crate::matrix::{orthant_check, Permutation, Signature, TriDiagMatrix};
use crate::sge::{choose_sign, SgeSolution, SolveMethod, StepAudit, AUDIT_TOL};
use crate::structure::classify;

const NONE: usize = usize::MAX;

/// Lazy-deletion binary max-heap over `(|c|, index)` with smallest-index
/// tie-break. Stale entries are skipped on pop via per-index generations.
/// `ops` counts push/pop events and every sift comparison.
struct MaxAbsHeap {
    heap: Vec<(f64, u32, u32)>,
    gen: Vec<u32>,
    ops: u64,
}

impl MaxAbsHeap {
    fn with_capacity(n: usize) -> Self {
        Self {
            heap: Vec::with_capacity(2 * n),
            gen: vec![0; n],
            ops: 0,
        }
    }

    #[inline]
    fn above(a: &(f64, u32, u32), b: &(f64, u32, u32)) -> bool {
        match a.0.total_cmp(&b.0) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => a.1 < b.1,
        }
    }

    fn push(&mut self, idx: usize, key: f64) {
        self.ops += 1;
        self.heap.push((key, idx as u32, self.gen[idx]));
        let mut i = self.heap.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            self.ops += 1;
            if Self::above(&self.heap[i], &self.heap[parent]) {
                self.heap.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    /// Invalidate any queued entries for `idx` and queue its new key.
    fn refresh(&mut self, idx: usize, key: f64) {
        self.gen[idx] += 1;
        self.push(idx, key);
    }

    fn pop_raw(&mut self) -> Option<(f64, u32, u32)> {
        self.ops += 1;
        if self.heap.is_empty() {
            return None;
        }
        let top = self.heap.swap_remove(0);
        let len = self.heap.len();
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            let r = l + 1;
            if l >= len {
                break;
            }
            let mut child = l;
            if r < len {
                self.ops += 1;
                if Self::above(&self.heap[r], &self.heap[l]) {
                    child = r;
                }
            }
            self.ops += 1;
            if Self::above(&self.heap[child], &self.heap[i]) {
                self.heap.swap(i, child);
                i = child;
            } else {
                break;
            }
        }
        Some(top)
    }

    /// Pop the current maximum, dropping stale or dead entries.
    fn pop_current(&mut self, alive: &[bool]) -> Option<usize> {
        while let Some((_, idx, gen)) = self.pop_raw() {
            let idx = idx as usize;
            if alive[idx] && self.gen[idx] == gen {
                return Some(idx);
            }
        }
        None
    }
}

/// Record of one eliminated variable, kept for back substitution. The stored
/// couplings are the eliminated row's entries toward the neighbors that were
/// alive at elimination time.
#[derive(Debug, Clone)]
pub struct ElimRecord {
    pub index: usize,
    pub sign: i8,
    pub pivot: f64,
    pub rhs: f64,
    pub left: Option<(usize, f64)>,
    pub right: Option<(usize, f64)>,
}

/// The linked-chain form of a tridiagonal system under elimination.
///
/// Alive nodes always form disjoint simple chains: eliminating an interior
/// node reconnects its two neighbors with the Schur fill-in coupling, and
/// eliminating an end node shortens its chain.
pub struct ChainSystem {
    n: usize,
    diag: Vec<f64>,
    /// Row entry toward the left neighbor, `S[k][left(k)]`.
    to_left: Vec<f64>,
    /// Row entry toward the right neighbor, `S[k][right(k)]`.
    to_right: Vec<f64>,
    c: Vec<f64>,
    left: Vec<usize>,
    right: Vec<usize>,
    alive: Vec<bool>,
    sigma: Vec<i8>,
    queue: MaxAbsHeap,
    eliminated: Vec<ElimRecord>,
    pivot_eps: f64,
    arith_ops: u64,
}

impl ChainSystem {
    pub fn new(m: &TriDiagMatrix, c: &[f64]) -> Result<Self> {
        let n = m.n();
        if c.len() != n {
            return Err(AveError::BadParameter(format!(
                "rhs length {} != dimension {n}",
                c.len()
            )));
        }
        let mut to_left = vec![0.0; n];
        let mut to_right = vec![0.0; n];
        let mut left = vec![NONE; n];
        let mut right = vec![NONE; n];
        for i in 1..n {
            left[i] = i - 1;
            to_left[i] = m.sub()[i - 1];
        }
        for i in 0..n.saturating_sub(1) {
            right[i] = i + 1;
            to_right[i] = m.sup()[i];
        }
        let mut queue = MaxAbsHeap::with_capacity(n);
        for (i, &ci) in c.iter().enumerate() {
            queue.push(i, ci.abs());
        }
        Ok(Self {
            n,
            diag: m.diag().to_vec(),
            to_left,
            to_right,
            c: c.to_vec(),
            left,
            right,
            alive: vec![true; n],
            sigma: vec![0; n],
            queue,
            eliminated: Vec::with_capacity(n),
            pivot_eps: pivot_eps(m.inf_norm()),
            arith_ops: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_alive(&self, k: usize) -> bool {
        self.alive[k]
    }

    pub fn rhs(&self, k: usize) -> f64 {
        self.c[k]
    }

    pub fn diag(&self, k: usize) -> f64 {
        self.diag[k]
    }

    pub fn neighbors(&self, k: usize) -> (Option<usize>, Option<usize>) {
        (
            (self.left[k] != NONE).then_some(self.left[k]),
            (self.right[k] != NONE).then_some(self.right[k]),
        )
    }

    /// Row entry of `k` toward a linked neighbor `j`, zero otherwise.
    pub fn coupling(&self, k: usize, j: usize) -> f64 {
        if self.left[k] == j {
            self.to_left[k]
        } else if self.right[k] == j {
            self.to_right[k]
        } else {
            0.0
        }
    }

    pub fn eliminated(&self) -> &[ElimRecord] {
        &self.eliminated
    }

    /// Next pivot: alive index with maximal `|c|`, smallest index on ties.
    pub fn next_pivot(&mut self) -> Option<usize> {
        self.queue.pop_current(&self.alive)
    }

    /// Eliminate alive node `k` with the given sign. Its at most two alive
    /// neighbors receive the Schur updates of their diagonal, their mutual
    /// new coupling and their right-hand-side entries; queue keys of the
    /// affected neighbors are refreshed.
    pub fn eliminate_node(&mut self, k: usize, sign: i8) -> Result<()> {
        debug_assert!(self.alive[k]);
        let sig = f64::from(sign);
        let pivot = 1.0 - sig * self.diag[k];
        self.arith_ops += 1;
        if pivot.abs() < self.pivot_eps {
            return Err(AveError::ZeroPivot {
                step: self.eliminated.len(),
            });
        }

        let l = self.left[k];
        let r = self.right[k];
        let rec = ElimRecord {
            index: k,
            sign,
            pivot,
            rhs: self.c[k],
            left: (l != NONE).then(|| (l, self.to_left[k])),
            right: (r != NONE).then(|| (r, self.to_right[k])),
        };

        let mut m_l = 0.0;
        if l != NONE {
            m_l = sig * self.to_right[l] / pivot;
            self.diag[l] += m_l * self.to_left[k];
            self.c[l] += m_l * self.c[k];
            self.arith_ops += 3;
        }
        let mut m_r = 0.0;
        if r != NONE {
            m_r = sig * self.to_left[r] / pivot;
            self.diag[r] += m_r * self.to_right[k];
            self.c[r] += m_r * self.c[k];
            self.arith_ops += 3;
        }

        match (l != NONE, r != NONE) {
            (true, true) => {
                // splice: the neighbors become adjacent with fill-in couplings
                self.to_right[l] = m_l * self.to_right[k];
                self.to_left[r] = m_r * self.to_left[k];
                self.arith_ops += 2;
                self.right[l] = r;
                self.left[r] = l;
            }
            (true, false) => self.right[l] = NONE,
            (false, true) => self.left[r] = NONE,
            (false, false) => {}
        }

        self.alive[k] = false;
        self.sigma[k] = sign;
        if l != NONE {
            self.queue.refresh(l, self.c[l].abs());
        }
        if r != NONE {
            self.queue.refresh(r, self.c[r].abs());
        }
        self.eliminated.push(rec);
        Ok(())
    }

    /// Solve each eliminated row in reverse order; neighbors referenced by a
    /// record were eliminated later, so their entries are already known.
    fn back_substitute(&mut self) -> Vec<f64> {
        let mut z = vec![0.0; self.n];
        for rec in self.eliminated.iter().rev() {
            let mut acc = rec.rhs;
            if let Some((l, s_kl)) = rec.left {
                acc += s_kl * f64::from(self.sigma[l]) * z[l];
                self.arith_ops += 1;
            }
            if let Some((r, s_kr)) = rec.right {
                acc += s_kr * f64::from(self.sigma[r]) * z[r];
                self.arith_ops += 1;
            }
            z[rec.index] = acc / rec.pivot;
            self.arith_ops += 1;
        }
        z
    }
}

/// Solve a tridiagonal instance by signed elimination on the chain.
///
/// Same solution contract as the dense solver. Total arithmetic is `O(n)`
/// plus `O(n log n)` priority-queue work; per-step non-queue work is `O(1)`.
/// The matrix must be stored tridiagonal or be a dense matrix with exact
/// zeros outside the bands.
pub fn tridiag_sge_solve(inst: &AveInstance) -> Result<SgeSolution> {
    solve_inner(inst, None)
}

/// As [`tridiag_sge_solve`] with per-step structure checks.
pub fn tridiag_sge_solve_instrumented(inst: &AveInstance) -> Result<(SgeSolution, StepAudit)> {
    let mut audit = StepAudit::default();
    let sol = solve_inner(inst, Some(&mut audit))?;
    Ok((sol, audit))
}

fn solve_inner(inst: &AveInstance, mut audit: Option<&mut StepAudit>) -> Result<SgeSolution> {
    let tri = inst.matrix().as_tridiag().ok_or_else(|| {
        AveError::BadParameter("matrix is not tridiagonal; use the dense solver".into())
    })?;
    let n = tri.n();
    let norm0 = tri.inf_norm();
    let class = classify(inst.matrix());

    let mut ctx = audit.as_deref_mut().map(|a| {
        a.checked_chain = true;
        a.checked_sdd = crate::structure::is_strict_diag_dominant(inst.matrix());
        a.checked_symmetry = tri.is_symmetric();
        AuditCtx { prev_norm: norm0, norm0 }
    });

    let mut chain = ChainSystem::new(&tri, inst.rhs())?;
    for _ in 0..n {
        let k = chain.next_pivot().expect("one queued entry per alive node");
        let sign = choose_sign(chain.c[k]);
        chain.eliminate_node(k, sign)?;
        if let (Some(a), Some(cx)) = (audit.as_deref_mut(), ctx.as_mut()) {
            audit_step(&chain, a, cx);
        }
    }
    let z = chain.back_substitute();

    let signs: Vec<i8> = chain.sigma.clone();
    let signature = Signature::new(signs).expect("all nodes eliminated");
    let order: Vec<usize> = chain.eliminated.iter().map(|r| r.index).collect();
    let permutation = Permutation::new(order).expect("each node eliminated once");
    let residual_inf = inst.residual_inf(&z);
    let orthant_consistent = orthant_check(&z, &signature);

    Ok(SgeSolution {
        z,
        signature,
        permutation,
        residual_inf,
        comparisons: 0,
        arith_ops: chain.arith_ops,
        queue_ops: chain.queue.ops,
        norm_warning: norm0 >= 1.0,
        orthant_consistent,
        class,
        method: SolveMethod::Tridiag,
    })
}

struct AuditCtx {
    prev_norm: f64,
    norm0: f64,
}

fn audit_step(chain: &ChainSystem, audit: &mut StepAudit, ctx: &mut AuditCtx) {
    audit.steps += 1;
    let rec = chain.eliminated.last().expect("called after a step");

    if ctx.norm0 < 1.0 && rec.pivot < 1.0 - ctx.norm0 - AUDIT_TOL {
        audit.pivot_floor_violations += 1;
    }

    // link consistency: alive nodes must form disjoint doubly linked chains
    let mut chain_ok = true;
    let mut norm: f64 = 0.0;
    let mut sdd_ok = true;
    let mut sym_ok = true;
    for i in 0..chain.n {
        if !chain.alive[i] {
            continue;
        }
        let l = chain.left[i];
        let r = chain.right[i];
        if l != NONE && (l == i || !chain.alive[l] || chain.right[l] != i) {
            chain_ok = false;
        }
        if r != NONE && (r == i || !chain.alive[r] || chain.left[r] != i) {
            chain_ok = false;
        }
        let mut row = chain.diag[i].abs();
        let mut off = 0.0;
        if l != NONE {
            off += chain.to_left[i].abs();
        }
        if r != NONE {
            off += chain.to_right[i].abs();
        }
        row += off;
        norm = norm.max(row);
        if audit.checked_sdd && chain.diag[i].abs() <= off - AUDIT_TOL * (1.0 + chain.diag[i].abs())
        {
            sdd_ok = false;
        }
        if audit.checked_symmetry && r != NONE {
            let x = chain.to_right[i];
            let y = chain.to_left[r];
            if (x - y).abs() > AUDIT_TOL * (1.0 + x.abs().max(y.abs())) {
                sym_ok = false;
            }
        }
    }
    if !chain_ok {
        audit.chain_violations += 1;
    }
    if !sdd_ok {
        audit.sdd_violations += 1;
    }
    if !sym_ok {
        audit.symmetry_violations += 1;
    }
    audit.max_norm_seen = audit.max_norm_seen.max(norm);
    if norm > ctx.prev_norm + AUDIT_TOL * (1.0 + ctx.prev_norm) {
        audit.norm_violations += 1;
    }
    ctx.prev_norm = norm;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::sge::dense::sge_solve;

    fn tri_inst(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>, c: Vec<f64>) -> AveInstance {
        AveInstance::new(
            Matrix::Tridiag(TriDiagMatrix::new(sub, diag, sup).unwrap()),
            c,
        )
        .unwrap()
    }

    #[test]
    fn eliminate_node_without_couplings() {
        let m = TriDiagMatrix::new(vec![0.0, 0.0], vec![0.9, 0.9, 0.9], vec![0.0, 0.0]).unwrap();
        let mut chain = ChainSystem::new(&m, &[1.0, 2.0, 3.0]).unwrap();
        chain.eliminate_node(1, 1).unwrap();
        // zero couplings: neighbors keep their values
        assert_eq!(chain.rhs(0), 1.0);
        assert_eq!(chain.rhs(2), 3.0);
        assert_eq!(chain.diag(0), 0.9);
        assert_eq!(chain.diag(2), 0.9);
    }

    #[test]
    fn eliminate_end_node_schur_update() {
        // 2x2 chain; eliminating node 0 with sign +1 updates node 1:
        // diag 0 + (1)(1/2)(1)^-1(1/2) = 1/4, c 0.1 + (1/2)/1 * 1 = 0.6
        let m = TriDiagMatrix::new(vec![0.5], vec![0.0, 0.0], vec![0.5]).unwrap();
        let mut chain = ChainSystem::new(&m, &[1.0, 0.1]).unwrap();
        chain.eliminate_node(0, 1).unwrap();
        assert!((chain.diag(1) - 0.25).abs() < 1e-15);
        assert!((chain.rhs(1) - 0.6).abs() < 1e-15);
        assert_eq!(chain.neighbors(1), (None, None));
    }

    #[test]
    fn interior_elimination_splices_one_coupling() {
        let m = TriDiagMatrix::new(
            vec![0.2, 0.3],
            vec![0.1, 0.1, 0.1],
            vec![0.25, 0.35],
        )
        .unwrap();
        let mut chain = ChainSystem::new(&m, &[0.0, 1.0, 0.0]).unwrap();
        chain.eliminate_node(1, 1).unwrap();
        assert_eq!(chain.neighbors(0), (None, Some(2)));
        assert_eq!(chain.neighbors(2), (Some(0), None));
        // exactly one new mutual coupling appears between the two neighbors
        assert!(chain.coupling(0, 2) != 0.0);
        assert!(chain.coupling(2, 0) != 0.0);
    }

    #[test]
    fn matches_dense_on_two_by_two() {
        // frozen by hand: pivot index 0, sigma (+,+), z = (1.4, 0.8)
        let inst = tri_inst(vec![0.5], vec![0.0, 0.0], vec![0.5], vec![1.0, 0.1]);
        let sol = tridiag_sge_solve(&inst).unwrap();
        assert!((sol.z[0] - 1.4).abs() < 1e-15);
        assert!((sol.z[1] - 0.8).abs() < 1e-15);
        let dense = sge_solve(&inst).unwrap();
        assert_eq!(sol.z, dense.z);
        assert_eq!(sol.permutation.map(), dense.permutation.map());
    }

    #[test]
    fn zero_matrix_returns_rhs() {
        let inst = tri_inst(vec![0.0], vec![0.0, 0.0], vec![0.0], vec![5.0, -6.0]);
        let sol = tridiag_sge_solve(&inst).unwrap();
        assert_eq!(sol.z, vec![5.0, -6.0]);
        assert_eq!(sol.residual_inf, 0.0);
    }

    #[test]
    fn rejects_non_tridiagonal_dense() {
        let mut d = crate::matrix::DenseMatrix::zeros(3);
        d.set(0, 2, 0.5);
        let inst = AveInstance::new(Matrix::Dense(d), vec![0.0; 3]).unwrap();
        assert!(matches!(
            tridiag_sge_solve(&inst),
            Err(AveError::BadParameter(_))
        ));
    }

    #[test]
    fn accepts_dense_storage_with_tridiagonal_pattern() {
        let d = crate::matrix::DenseMatrix::from_rows(&[
            vec![0.0, 0.5],
            vec![0.5, 0.0],
        ])
        .unwrap();
        let inst = AveInstance::new(Matrix::Dense(d), vec![1.0, 0.1]).unwrap();
        let sol = tridiag_sge_solve(&inst).unwrap();
        assert!((sol.z[0] - 1.4).abs() < 1e-15);
    }

    #[test]
    fn queue_pops_max_abs_with_index_tie_break() {
        let m = TriDiagMatrix::new(
            vec![0.0, 0.0],
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0],
        )
        .unwrap();
        let mut chain = ChainSystem::new(&m, &[0.5, -0.5, 0.2]).unwrap();
        assert_eq!(chain.next_pivot(), Some(0));
        chain.eliminate_node(0, 1).unwrap();
        assert_eq!(chain.next_pivot(), Some(1));
        chain.eliminate_node(1, -1).unwrap();
        assert_eq!(chain.next_pivot(), Some(2));
    }
}
