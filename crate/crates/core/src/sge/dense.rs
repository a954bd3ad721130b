//! Dense signed Gaussian elimination with symmetric pivoting.
//!
//! The working matrix is kept in "S-form": after `j` steps the trailing
//! block of `a` is the reduced coefficient matrix `S_bar` of the remaining
//! subsystem, with the eliminated signs folded into the stored row
//! multipliers. Row `j` of the upper part, together with the signs chosen
//! later, is exactly row `j` of the triangularized `I - S*Sigma`, so a single
//! back substitution finishes the solve (the final explicit inversion of the
//! pseudocode would redo work the loop has already done).

use crate::error::{AveError, Result};
use crate::instance::AveInstance;
use crate::linsolve::pivot_eps;
use crate::matrix::{orthant_check, DenseMatrix, Permutation, Signature};
use crate::sge::{choose_sign, select_pivot, SgeSolution, SolveMethod, StepAudit, AUDIT_TOL};
use crate::structure::classify;

/// Working state of the elimination. After `step` steps, rows `0..step` of
/// the implicit `I - S*Sigma` are upper-triangular and the trailing block of
/// `a` holds the reduced matrix in S-form.
pub struct EliminationState {
    n: usize,
    a: Vec<f64>,
    c: Vec<f64>,
    pos_to_orig: Vec<usize>,
    sigma: Vec<i8>,
    pivots: Vec<f64>,
    step: usize,
    pivot_eps: f64,
    comparisons: u64,
    arith_ops: u64,
}

impl EliminationState {
    pub fn new(s: &DenseMatrix, c: &[f64]) -> Result<Self> {
        let n = s.n();
        if c.len() != n {
            return Err(AveError::BadParameter(format!(
                "rhs length {} != dimension {n}",
                c.len()
            )));
        }
        Ok(Self {
            n,
            a: s.entries().to_vec(),
            c: c.to_vec(),
            pos_to_orig: (0..n).collect(),
            sigma: vec![0; n],
            pivots: vec![0.0; n],
            step: 0,
            pivot_eps: pivot_eps(s.inf_norm()),
            comparisons: 0,
            arith_ops: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn active_dim(&self) -> usize {
        self.n - self.step
    }

    pub fn working_rhs(&self) -> &[f64] {
        &self.c
    }

    /// Right-hand side of the remaining subsystem.
    pub fn active_rhs(&self) -> &[f64] {
        &self.c[self.step..]
    }

    /// The reduced coefficient matrix `S_bar` of the remaining subsystem.
    pub fn active_matrix(&self) -> DenseMatrix {
        let j = self.step;
        let m = self.n - j;
        let mut entries = Vec::with_capacity(m * m);
        for i in j..self.n {
            entries.extend_from_slice(&self.a[i * self.n + j..i * self.n + self.n]);
        }
        DenseMatrix::new(m.max(1), if m == 0 { vec![0.0] } else { entries })
            .expect("block shape is consistent")
    }

    /// Symmetric swap of the current front position with working position
    /// `k`, mirrored in the right-hand side and the permutation record.
    pub fn pivot_to_front(&mut self, k: usize) {
        let j = self.step;
        debug_assert!(k >= j && k < self.n);
        if k == j {
            return;
        }
        for col in 0..self.n {
            self.a.swap(j * self.n + col, k * self.n + col);
        }
        for row in 0..self.n {
            self.a.swap(row * self.n + j, row * self.n + k);
        }
        self.c.swap(j, k);
        self.pos_to_orig.swap(j, k);
    }

    /// One elimination step with the given sign for the front variable.
    ///
    /// With pivot `p = 1 - sigma * s_11` and block partition
    /// `S = [[s_11, F], [G, H]]`, the reduced matrix is
    /// `S_bar = H + sigma * G * p^-1 * F` and the right-hand side updates as
    /// `c_bar_i = c_{i+1} + sigma * s_{i+1,1} / p * c_1`.
    pub fn gauss_step(&mut self, sigma: i8) -> Result<()> {
        let j = self.step;
        let n = self.n;
        debug_assert!(j < n, "elimination already complete");
        let sig = f64::from(sigma);
        let pivot = 1.0 - sig * self.a[j * n + j];
        self.arith_ops += 1;
        if pivot.abs() < self.pivot_eps {
            return Err(AveError::ZeroPivot { step: j });
        }
        self.sigma[j] = sigma;
        self.pivots[j] = pivot;
        for i in j + 1..n {
            let m = sig * self.a[i * n + j] / pivot;
            self.arith_ops += 1;
            self.a[i * n + j] = m;
            self.c[i] += m * self.c[j];
            self.arith_ops += 1;
            for l in j + 1..n {
                self.a[i * n + l] += m * self.a[j * n + l];
            }
            self.arith_ops += (n - j - 1) as u64;
        }
        self.step += 1;
        Ok(())
    }

    fn back_substitute(&mut self) -> Vec<f64> {
        let n = self.n;
        let mut zw = vec![0.0; n];
        for j in (0..n).rev() {
            let mut acc = self.c[j];
            for l in j + 1..n {
                acc += self.a[j * n + l] * f64::from(self.sigma[l]) * zw[l];
            }
            self.arith_ops += (n - j - 1) as u64;
            zw[j] = acc / self.pivots[j];
            self.arith_ops += 1;
        }
        zw
    }
}

/// Free-function form of one elimination step.
pub fn gauss_step(state: &mut EliminationState, sigma: i8) -> Result<()> {
    state.gauss_step(sigma)
}

/// Solve `z - S|z| = c` by signed Gaussian elimination on the dense
/// expansion of the instance.
///
/// For a matrix in any guaranteed class the result is the unique solution,
/// with `residual_inf <= TOL_SOLVE * (1 + inf_norm(c))`. Inputs with
/// `inf_norm(S) >= 1` are solved best-effort and flagged with
/// `norm_warning` instead of being rejected, so the failure modes of the
/// counterexample catalog stay executable.
pub fn sge_solve(inst: &AveInstance) -> Result<SgeSolution> {
    solve_inner(inst, None)
}

/// As [`sge_solve`], additionally checking the structure-preservation
/// invariants after every elimination step.
pub fn sge_solve_instrumented(inst: &AveInstance) -> Result<(SgeSolution, StepAudit)> {
    let mut audit = StepAudit::default();
    let sol = solve_inner(inst, Some(&mut audit))?;
    Ok((sol, audit))
}

fn solve_inner(inst: &AveInstance, mut audit: Option<&mut StepAudit>) -> Result<SgeSolution> {
    let s = inst.matrix().to_dense();
    let n = s.n();
    let norm0 = s.inf_norm();
    let class = classify(inst.matrix());

    let checker = audit.as_deref_mut().map(|a| {
        a.checked_sdd = crate::structure::is_strict_diag_dominant(inst.matrix());
        a.checked_symmetry = s.is_symmetric();
        AuditCtx {
            prev_norm: norm0,
            norm0,
        }
    });
    let mut ctx = checker;

    let mut st = EliminationState::new(&s, inst.rhs())?;
    for j in 0..n {
        let k = select_pivot(&st.c, j);
        st.comparisons += (n - 1 - j) as u64;
        st.pivot_to_front(k);
        let sigma = choose_sign(st.c[j]);
        st.gauss_step(sigma)?;
        if let (Some(a), Some(cx)) = (audit.as_deref_mut(), ctx.as_mut()) {
            audit_step(&st, a, cx);
        }
    }
    let zw = st.back_substitute();

    let mut z = vec![0.0; n];
    let mut signs = vec![1i8; n];
    for j in 0..n {
        z[st.pos_to_orig[j]] = zw[j];
        signs[st.pos_to_orig[j]] = st.sigma[j];
    }
    let signature = Signature::new(signs).expect("signs are +-1");
    let permutation = Permutation::new(st.pos_to_orig.clone()).expect("swaps keep a bijection");
    let residual_inf = inst.residual_inf(&z);
    let orthant_consistent = orthant_check(&z, &signature);

    Ok(SgeSolution {
        z,
        signature,
        permutation,
        residual_inf,
        comparisons: st.comparisons,
        arith_ops: st.arith_ops,
        queue_ops: 0,
        norm_warning: norm0 >= 1.0,
        orthant_consistent,
        class,
        method: SolveMethod::Dense,
    })
}

struct AuditCtx {
    prev_norm: f64,
    norm0: f64,
}

fn audit_step(st: &EliminationState, audit: &mut StepAudit, ctx: &mut AuditCtx) {
    audit.steps += 1;
    let j = st.step;
    let n = st.n;

    // pivot floor: 1 - sigma*s_11 >= 1 - inf_norm(S) when the norm is < 1
    if ctx.norm0 < 1.0 && st.pivots[j - 1] < 1.0 - ctx.norm0 - AUDIT_TOL {
        audit.pivot_floor_violations += 1;
    }

    let mut norm: f64 = 0.0;
    for i in j..n {
        let row: f64 = (j..n).map(|l| st.a[i * n + l].abs()).sum();
        norm = norm.max(row);
    }
    audit.max_norm_seen = audit.max_norm_seen.max(norm);
    if norm > ctx.prev_norm + AUDIT_TOL * (1.0 + ctx.prev_norm) {
        audit.norm_violations += 1;
    }
    ctx.prev_norm = norm;

    if audit.checked_sdd {
        for i in j..n {
            let d = st.a[i * n + i].abs();
            let off: f64 = (j..n)
                .filter(|&l| l != i)
                .map(|l| st.a[i * n + l].abs())
                .sum();
            if d <= off - AUDIT_TOL * (1.0 + d) {
                audit.sdd_violations += 1;
                break;
            }
        }
    }

    if audit.checked_symmetry {
        'sym: for i in j..n {
            for l in j..i {
                let x = st.a[i * n + l];
                let y = st.a[l * n + i];
                if (x - y).abs() > AUDIT_TOL * (1.0 + x.abs().max(y.abs())) {
                    audit.symmetry_violations += 1;
                    break 'sym;
                }
            }
        }
    }
}
