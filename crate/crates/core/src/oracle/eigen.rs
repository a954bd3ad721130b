//! Eigenvalue backends for the sign-real spectral radius.
//!
//! The production path is a standard dense nonsymmetric eigensolver used as
//! a black box behind [`real_spectral_radius`]. For `n <= 3` an independent
//! characteristic-polynomial root finder provides a second opinion; the
//! enumeration oracle cross-checks the two on every signature it visits at
//! those dimensions.

use nalgebra::DMatrix;

use crate::matrix::DenseMatrix;

/// Relative imaginary-part threshold under which an eigenvalue counts as
/// real. The exact-arithmetic notion has no such slack; this is the standard
/// floating-point surrogate.
pub const REAL_EPS: f64 = 1e-9;

/// Largest `|Re(lambda)|` over the eigenvalues with
/// `|Im(lambda)| <= REAL_EPS * (1 + |lambda|)`; 0 when no eigenvalue is real.
pub fn real_spectral_radius(m: &DenseMatrix) -> f64 {
    let n = m.n();
    let dm = DMatrix::from_row_slice(n, n, m.entries());
    let eigs = dm.complex_eigenvalues();
    eigs.iter()
        .filter(|l| l.im.abs() <= REAL_EPS * (1.0 + l.norm()))
        .map(|l| l.re.abs())
        .fold(0.0, f64::max)
}

/// Characteristic-polynomial route, closed forms only. `None` for `n > 3`.
/// Applies the same near-real tolerance as the black-box route so the two
/// backends agree on borderline conjugate pairs.
pub fn real_spectral_radius_charpoly(m: &DenseMatrix) -> Option<f64> {
    let roots = real_eigenvalues_charpoly(m)?;
    Some(roots.iter().map(|r| r.abs()).fold(0.0, f64::max))
}

/// Real eigenvalues of a matrix of dimension at most 3, via the closed-form
/// roots of the characteristic polynomial.
pub fn real_eigenvalues_charpoly(m: &DenseMatrix) -> Option<Vec<f64>> {
    match m.n() {
        1 => Some(vec![m.get(0, 0)]),
        2 => {
            let tr = m.get(0, 0) + m.get(1, 1);
            let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
            let disc = tr * tr - 4.0 * det;
            if disc >= 0.0 {
                let s = disc.sqrt();
                Some(vec![(tr + s) / 2.0, (tr - s) / 2.0])
            } else {
                // conjugate pair; accept as real when the imaginary part is
                // inside the near-real band
                let re = tr / 2.0;
                let im = (-disc).sqrt() / 2.0;
                let modulus = (re * re + im * im).sqrt();
                if im <= REAL_EPS * (1.0 + modulus) {
                    Some(vec![re, re])
                } else {
                    Some(vec![])
                }
            }
        }
        3 => Some(cubic_real_roots(m)),
        _ => None,
    }
}

/// Real roots of `det(lambda I - M) = 0` for a 3x3 matrix: trigonometric
/// form for three real roots, Cardano for one.
fn cubic_real_roots(m: &DenseMatrix) -> Vec<f64> {
    let a = m.get(0, 0);
    let b = m.get(0, 1);
    let c = m.get(0, 2);
    let d = m.get(1, 0);
    let e = m.get(1, 1);
    let f = m.get(1, 2);
    let g = m.get(2, 0);
    let h = m.get(2, 1);
    let i = m.get(2, 2);

    // lambda^3 - c2 lambda^2 + c1 lambda - c0
    let c2 = a + e + i;
    let c1 = (a * e - b * d) + (a * i - c * g) + (e * i - f * h);
    let c0 = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);

    // depressed cubic t^3 + p t + q = 0 with lambda = t + c2/3
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = -c0 + c2 * (c1 - 2.0 * c2 * c2 / 9.0) / 3.0;

    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let mut roots = Vec::with_capacity(3);
    if disc >= 0.0 && p < 0.0 {
        // three real roots
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt();
        let theta = arg.clamp(-1.0, 1.0).acos() / 3.0;
        for k in 0..3 {
            let t = r * (theta - 2.0 * std::f64::consts::PI * f64::from(k) / 3.0).cos();
            roots.push(t + shift);
        }
    } else if p.abs() < 1e-300 && q.abs() < 1e-300 {
        roots.push(shift);
        roots.push(shift);
        roots.push(shift);
    } else {
        // one real root (Cardano); the conjugate pair is checked against the
        // near-real band like the 2x2 case
        let half_q = q / 2.0;
        let inner = (half_q * half_q + p * p * p / 27.0).max(0.0).sqrt();
        let t = (-half_q + inner).cbrt() + (-half_q - inner).cbrt();
        roots.push(t + shift);
        // remaining quadratic t^2 + t*t0 + (t0^2 + p) where t0 is the real root
        let sum = -t; // sum of the remaining pair in t-coordinates
        let prod = if t.abs() > 1e-300 { -q / t } else { p };
        let pair_disc = sum * sum - 4.0 * prod;
        if pair_disc >= 0.0 {
            let s = pair_disc.sqrt();
            roots.push((sum + s) / 2.0 + shift);
            roots.push((sum - s) / 2.0 + shift);
        } else {
            let re = sum / 2.0 + shift;
            let im = (-pair_disc).sqrt() / 2.0;
            let modulus = (re * re + im * im).sqrt();
            if im <= REAL_EPS * (1.0 + modulus) {
                roots.push(re);
                roots.push(re);
            }
        }
    }
    roots
}
