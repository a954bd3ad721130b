//! Exponential-cost ground truth: signature enumeration, sign-real spectral
//! radius, unique-solvability checks, the LCP reformulation and the
//! equilibrium-problem converter.
//!
//! Everything here costs `2^n` or worse and is gated by an explicit
//! dimension limit. Signatures are visited in integer mask order (bit `i`
//! set means sign `i` is `-1`), so reports are reproducible and a future
//! parallel split over mask ranges would merge deterministically.

pub mod eigen;

use crate::error::{AveError, Result};
use crate::instance::AveInstance;
use crate::linsolve::{lu_solve, LuFactors};
use crate::matrix::{DenseMatrix, Matrix, Signature};
use crate::rng::SplitMix64;

pub use eigen::REAL_EPS;

/// Default dimension cap for full signature enumeration (`2^n` solves).
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Default dimension cap for the sign-real spectral radius (`2^n`
/// eigendecompositions, cross-checked against the characteristic polynomial
/// for `n <= 3`).
pub const DEFAULT_RHO_LIMIT: usize = 8;

/// Solutions closer than this in the infinity norm are the same orthant
/// boundary point reached under different signatures.
pub const DEDUP_TOL: f64 = 1e-12;

/// Relative slack for orthant membership inside the enumeration. A solution
/// entry that is exactly zero comes back from the linear solve with noise of
/// either sign; without slack such a boundary solution can be rejected under
/// every signature. The public `orthant_check` stays strict.
pub const ORTHANT_SLACK: f64 = 1e-12;

/// All `2^n` signatures in mask order.
pub fn signatures(n: usize) -> impl Iterator<Item = Signature> {
    assert!(n < 64, "mask enumeration is limited to n < 64");
    (0..1u64 << n).map(move |mask| Signature::from_mask(n, mask))
}

/// Result of solving `(I - S*Sigma) z = c` over every signature.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Deduplicated solutions with the first signature that produced each.
    pub solutions: Vec<(Signature, Vec<f64>)>,
    /// How many signatures produced each solution (boundary solutions are
    /// found more than once).
    pub support: Vec<u32>,
    /// Signatures whose linear system is numerically singular.
    pub singular_signatures: Vec<Signature>,
}

/// Solve `(I - S*Sigma) z = c` for every signature and keep the orthant-
/// consistent solutions: exactly the solution set of `z - S|z| = c`.
pub fn enumerate_solutions(inst: &AveInstance, limit: usize) -> Result<Enumeration> {
    let n = inst.n();
    if n > limit {
        return Err(AveError::DimensionTooLarge { n, limit });
    }
    let s = inst.matrix().to_dense();
    let c = inst.rhs();
    let mut out = Enumeration {
        solutions: Vec::new(),
        support: Vec::new(),
        singular_signatures: Vec::new(),
    };
    for sigma in signatures(n) {
        let m = system_matrix(&s, &sigma);
        match lu_solve(&m, c) {
            Err(AveError::SingularMatrix) => out.singular_signatures.push(sigma),
            Err(e) => return Err(e),
            Ok(z) => {
                let scale = 1.0 + z.iter().map(|x| x.abs()).fold(0.0, f64::max);
                let inside = z
                    .iter()
                    .enumerate()
                    .all(|(i, &zi)| sigma.sign(i) * zi >= -ORTHANT_SLACK * scale);
                if inside {
                    match out.solutions.iter().position(|(_, prev)| {
                        prev.iter()
                            .zip(&z)
                            .all(|(a, b)| (a - b).abs() <= DEDUP_TOL)
                    }) {
                        Some(i) => out.support[i] += 1,
                        None => {
                            out.solutions.push((sigma, z));
                            out.support.push(1);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `I - S*Sigma`.
pub fn system_matrix(s: &DenseMatrix, sigma: &Signature) -> DenseMatrix {
    let n = s.n();
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = -s.get(i, j) * sigma.sign(j);
            m.set(i, j, if i == j { 1.0 + v } else { v });
        }
    }
    m
}

/// `Sigma * S`: row `i` scaled by sign `i`.
fn row_scaled(s: &DenseMatrix, sigma: &Signature) -> DenseMatrix {
    let n = s.n();
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, sigma.sign(i) * s.get(i, j));
        }
    }
    m
}

/// Maximum over all signatures of the largest absolute real eigenvalue of
/// `Sigma * S`. Strictly below 1 exactly when the equation is uniquely
/// solvable for every right-hand side.
pub fn sign_real_spectral_radius(s: &DenseMatrix, limit: usize) -> Result<f64> {
    let n = s.n();
    if n > limit {
        return Err(AveError::DimensionTooLarge { n, limit });
    }
    let mut best: f64 = 0.0;
    for sigma in signatures(n) {
        let m = row_scaled(s, &sigma);
        let r = eigen::real_spectral_radius(&m);
        if n <= 3 {
            let cp = eigen::real_spectral_radius_charpoly(&m)
                .expect("charpoly route covers n <= 3");
            assert!(
                (r - cp).abs() <= 1e-7 * (1.0 + r.abs()),
                "eigen backends disagree at signature {sigma}: {r} vs {cp}"
            );
        }
        best = best.max(r);
    }
    Ok(best)
}

/// Sampling-based side checks. These cover the two solvability
/// characterizations that cannot be enumerated (determinant positivity over
/// the continuum of contractive diagonals, and bijectivity over all
/// right-hand sides); reports must label them as sampled, not exhaustive.
#[derive(Debug, Clone)]
pub struct SampledChecks {
    pub diagonal_samples: usize,
    /// `det(I - S D) > 0` for every sampled diagonal `D` with `inf_norm <= 1`.
    pub diagonal_det_all_positive: bool,
    pub rhs_samples: usize,
    /// Exactly one deduplicated solution for every sampled right-hand side.
    pub rhs_all_unique: bool,
}

/// Everything the solvability oracle can say about a matrix.
#[derive(Debug, Clone)]
pub struct SolvabilityReport {
    pub n: usize,
    pub rho_s: f64,
    /// `det(I - S*Sigma) > 0` for all `2^n` signatures.
    pub det_all_positive: bool,
    /// Whether `(I - S)^-1 (I + S)` is a P-matrix; `None` when `I - S` is
    /// singular and the product is undefined.
    pub p_matrix: Option<bool>,
    /// Deduplicated solution count for one fixed seeded right-hand side.
    pub solution_count: usize,
    pub singular_signatures: Vec<Signature>,
    pub sampled: SampledChecks,
}

/// Run every solvability check at once. When `rho_s < 1` the verdicts must
/// all come back positive with exactly one solution.
pub fn check_unique_solvability(s: &DenseMatrix, limit: usize) -> Result<SolvabilityReport> {
    let n = s.n();
    if n > limit {
        return Err(AveError::DimensionTooLarge { n, limit });
    }
    let rho_s = sign_real_spectral_radius(s, limit)?;

    let mut det_all_positive = true;
    let mut singular = Vec::new();
    for sigma in signatures(n) {
        let det = LuFactors::new(&system_matrix(s, &sigma)).det();
        if det == 0.0 {
            singular.push(sigma.clone());
        }
        if det <= 0.0 {
            det_all_positive = false;
        }
    }

    let p_matrix = match product_m(s) {
        Ok(m) => Some(p_matrix_check(&m, limit)?),
        Err(AveError::SingularMatrix) => None,
        Err(e) => return Err(e),
    };

    // fixed seeded right-hand sides; stream depends only on n
    let mut rng = SplitMix64::new(0x5EED_0BAC ^ n as u64);
    let fixed_rhs: Vec<f64> = (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect();
    let inst = AveInstance::new(Matrix::Dense(s.clone()), fixed_rhs)?;
    let solution_count = enumerate_solutions(&inst, limit)?.solutions.len();

    let diagonal_samples = 32;
    let mut diagonal_det_all_positive = true;
    for _ in 0..diagonal_samples {
        let mut m = s.clone();
        // I - S D with D diagonal, |d_i| <= 1: scale column j by d_j
        let d: Vec<f64> = (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect();
        for i in 0..n {
            for j in 0..n {
                let v = -m.get(i, j) * d[j];
                m.set(i, j, v);
            }
        }
        for i in 0..n {
            m.set(i, i, 1.0 + m.get(i, i));
        }
        if LuFactors::new(&m).det() <= 0.0 {
            diagonal_det_all_positive = false;
        }
    }

    let rhs_samples = if n <= 10 { 20 } else { 2 };
    let mut rhs_all_unique = true;
    for _ in 0..rhs_samples {
        let c: Vec<f64> = (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect();
        let inst = AveInstance::new(Matrix::Dense(s.clone()), c)?;
        if enumerate_solutions(&inst, limit)?.solutions.len() != 1 {
            rhs_all_unique = false;
        }
    }

    Ok(SolvabilityReport {
        n,
        rho_s,
        det_all_positive,
        p_matrix,
        solution_count,
        singular_signatures: singular,
        sampled: SampledChecks {
            diagonal_samples,
            diagonal_det_all_positive,
            rhs_samples,
            rhs_all_unique,
        },
    })
}

/// `(I - S)^-1 (I + S)`, the system matrix of the equivalent LCP.
fn product_m(s: &DenseMatrix) -> Result<DenseMatrix> {
    let n = s.n();
    let mut i_minus_s = DenseMatrix::zeros(n);
    let mut i_plus_s = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let d = if i == j { 1.0 } else { 0.0 };
            i_minus_s.set(i, j, d - s.get(i, j));
            i_plus_s.set(i, j, d + s.get(i, j));
        }
    }
    let f = LuFactors::new(&i_minus_s);
    if f.is_singular() {
        return Err(AveError::SingularMatrix);
    }
    let mut m = DenseMatrix::zeros(n);
    let mut col = vec![0.0; n];
    for j in 0..n {
        for (i, slot) in col.iter_mut().enumerate() {
            *slot = i_plus_s.get(i, j);
        }
        let x = f.solve(&col)?;
        for i in 0..n {
            m.set(i, j, x[i]);
        }
    }
    Ok(m)
}

/// True iff every principal minor is positive (elimination per principal
/// submatrix; `2^n - 1` of them).
pub fn p_matrix_check(m: &DenseMatrix, limit: usize) -> Result<bool> {
    let n = m.n();
    if n > limit {
        return Err(AveError::DimensionTooLarge { n, limit });
    }
    for mask in 1u64..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let k = idx.len();
        let mut sub = DenseMatrix::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                sub.set(a, b, m.get(i, j));
            }
        }
        if LuFactors::new(&sub).det() <= 0.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The linear complementarity instance equivalent to an absolute value
/// equation: find `u, w >= 0` with `u^T w = 0` and `w = M u + q`; then
/// `z = u - w` solves the original equation.
#[derive(Debug, Clone)]
pub struct LcpInstance {
    pub m: DenseMatrix,
    pub q: Vec<f64>,
}

/// Convert to the equivalent LCP: `M = (I+S)^-1 (I-S)`, `q = -(I+S)^-1 c`.
///
/// Splitting `z = u - w` with `u = max(z, 0)`, `w = max(-z, 0)` gives
/// `|z| = u + w`; substituting into `z - S|z| = c` and solving the result
/// for `w` yields exactly `w = M u + q`. (Note the placement of the two
/// factors: the reformulation for the mirror-convention equation
/// `z + S|z| = c` has them swapped, and `(I+S)^-1 (I-S)` is the matrix
/// inverse of `(I-S)^-1 (I+S)`, so one is a P-matrix exactly when the other
/// is.) No LCP solver lives here; the reformulation exists for equivalence
/// checking only.
pub fn to_lcp(inst: &AveInstance) -> Result<LcpInstance> {
    let s = inst.matrix().to_dense();
    let n = s.n();
    let mut i_plus_s = DenseMatrix::zeros(n);
    let mut i_minus_s = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let d = if i == j { 1.0 } else { 0.0 };
            i_plus_s.set(i, j, d + s.get(i, j));
            i_minus_s.set(i, j, d - s.get(i, j));
        }
    }
    let f = LuFactors::new(&i_plus_s);
    if f.is_singular() {
        return Err(AveError::SingularMatrix);
    }
    let mut m = DenseMatrix::zeros(n);
    let mut col = vec![0.0; n];
    for j in 0..n {
        for (i, slot) in col.iter_mut().enumerate() {
            *slot = i_minus_s.get(i, j);
        }
        let x = f.solve(&col)?;
        for i in 0..n {
            m.set(i, j, x[i]);
        }
    }
    let q: Vec<f64> = f.solve(inst.rhs())?.into_iter().map(|x| -x).collect();
    Ok(LcpInstance { m, q })
}

/// Split `z` into the complementary pair `u = max(z, 0)`, `w = max(-z, 0)`.
pub fn split_complementary(z: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let u = z.iter().map(|&x| x.max(0.0)).collect();
    let w = z.iter().map(|&x| (-x).max(0.0)).collect();
    (u, w)
}

/// Rewrite the equilibrium problem `A x + max(0, x) = b` as an absolute
/// value equation. With `B = 2A + I` regular, `S = -B^-1` and `c = 2 B^-1 b`
/// give a standard-form instance whose solution `z` equals `x`.
pub fn equilibrium_to_ave(a: &DenseMatrix, b: &[f64]) -> Result<AveInstance> {
    let n = a.n();
    if b.len() != n {
        return Err(AveError::BadParameter(format!(
            "rhs length {} != dimension {n}",
            b.len()
        )));
    }
    let mut big_b = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let d = if i == j { 1.0 } else { 0.0 };
            big_b.set(i, j, 2.0 * a.get(i, j) + d);
        }
    }
    let f = LuFactors::new(&big_b);
    if f.is_singular() {
        return Err(AveError::SingularMatrix);
    }
    let mut s = DenseMatrix::zeros(n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = f.solve(&e)?;
        e[j] = 0.0;
        for i in 0..n {
            s.set(i, j, -col[i]);
        }
    }
    let c: Vec<f64> = f.solve(b)?.into_iter().map(|x| 2.0 * x).collect();
    AveInstance::new(Matrix::Dense(s), c)
}
