//! Matrix storage (dense and tridiagonal), signature matrices and
//! permutations.

use std::fmt;

use crate::error::{AveError, Result};

/// Square matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(AveError::BadParameter("dimension must be >= 1".into()));
        }
        if entries.len() != n * n {
            return Err(AveError::BadParameter(format!(
                "dense matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scaled_identity(n, 1.0)
    }

    /// `a * I`.
    pub fn scaled_identity(n: usize, a: f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = a;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AveError::BadParameter("rows must have length n".into()));
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Maximum over rows of the sum of absolute entries.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(s, v)| s * v).sum())
            .collect()
    }

    /// `S |x|` with the componentwise absolute value.
    pub fn matvec_abs(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(s, v)| s * v.abs())
                    .sum()
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

/// Square matrix with nonzeros confined to the three central bands.
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiagMatrix {
    n: usize,
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

impl TriDiagMatrix {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(AveError::BadParameter("dimension must be >= 1".into()));
        }
        if sub.len() + 1 != n || sup.len() + 1 != n {
            return Err(AveError::BadParameter(format!(
                "band lengths inconsistent: n={n}, sub={}, sup={}",
                sub.len(),
                sup.len()
            )));
        }
        Ok(Self { n, sub, diag, sup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(i, i-1)` entries, length n-1.
    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    /// `(i, i+1)` entries, length n-1.
    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag[i]
        } else if j + 1 == i {
            self.sub[j]
        } else if i + 1 == j {
            self.sup[i]
        } else {
            0.0
        }
    }

    pub fn inf_norm(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.n {
            let mut s = self.diag[i].abs();
            if i > 0 {
                s += self.sub[i - 1].abs();
            }
            if i + 1 < self.n {
                s += self.sup[i].abs();
            }
            best = best.max(s);
        }
        best
    }

    pub fn matvec_abs(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut s = self.diag[i] * x[i].abs();
                if i > 0 {
                    s += self.sub[i - 1] * x[i - 1].abs();
                }
                if i + 1 < self.n {
                    s += self.sup[i] * x[i + 1].abs();
                }
                s
            })
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.n);
        for i in 0..self.n {
            m.set(i, i, self.diag[i]);
            if i > 0 {
                m.set(i, i - 1, self.sub[i - 1]);
            }
            if i + 1 < self.n {
                m.set(i, i + 1, self.sup[i]);
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }
}

/// Coefficient matrix in either storage form.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Dense(DenseMatrix),
    Tridiag(TriDiagMatrix),
}

impl Matrix {
    pub fn n(&self) -> usize {
        match self {
            Matrix::Dense(m) => m.n(),
            Matrix::Tridiag(m) => m.n(),
        }
    }

    pub fn inf_norm(&self) -> f64 {
        match self {
            Matrix::Dense(m) => m.inf_norm(),
            Matrix::Tridiag(m) => m.inf_norm(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        match self {
            Matrix::Dense(m) => m.get(i, j),
            Matrix::Tridiag(m) => m.get(i, j),
        }
    }

    pub fn matvec_abs(&self, x: &[f64]) -> Vec<f64> {
        match self {
            Matrix::Dense(m) => m.matvec_abs(x),
            Matrix::Tridiag(m) => m.matvec_abs(x),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        match self {
            Matrix::Dense(m) => m.clone(),
            Matrix::Tridiag(m) => m.to_dense(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Matrix::Dense(m) => m.is_symmetric(),
            Matrix::Tridiag(m) => m.is_symmetric(),
        }
    }

    /// Band extraction. `Some` when the matrix is stored tridiagonal or is a
    /// dense matrix with exact zeros outside the three bands.
    pub fn as_tridiag(&self) -> Option<TriDiagMatrix> {
        match self {
            Matrix::Tridiag(m) => Some(m.clone()),
            Matrix::Dense(m) => {
                if !crate::structure::is_tridiagonal(m) {
                    return None;
                }
                let n = m.n();
                let diag = (0..n).map(|i| m.get(i, i)).collect();
                let sub = (1..n).map(|i| m.get(i, i - 1)).collect();
                let sup = (0..n.saturating_sub(1)).map(|i| m.get(i, i + 1)).collect();
                Some(TriDiagMatrix::new(sub, diag, sup).expect("bands consistent"))
            }
        }
    }
}

/// Diagonal matrix with entries in `{+1, -1}`, stored as the sign vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    signs: Vec<i8>,
}

impl Signature {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(AveError::BadParameter("signature must be nonempty".into()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(AveError::BadParameter(
                "signature entries must be +1 or -1".into(),
            ));
        }
        Ok(Self { signs })
    }

    pub fn all_plus(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    /// Bit `i` of `mask` set means sign `i` is `-1`; mask 0 is the identity.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self {
            signs: (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    #[inline]
    pub fn sign(&self, i: usize) -> f64 {
        f64::from(self.signs[i])
    }

    #[inline]
    pub fn sign_i8(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn set(&mut self, i: usize, s: i8) {
        assert!(s == 1 || s == -1, "signs are +1 or -1");
        self.signs[i] = s;
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

impl fmt::Display for Signature {
    /// Compact form, e.g. `+-+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Bijective index map; `map[position] = original index` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n || seen[i] {
                return Err(AveError::BadParameter(
                    "permutation must be a bijection on 0..n".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Self { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        self.map.swap(a, b);
    }

    #[inline]
    pub fn get(&self, pos: usize) -> usize {
        self.map[pos]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Signum with the strict convention: an element of `{-1, 0, +1}`.
#[inline]
pub fn strict_sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Permissive orthant membership: `sigma_i * z_i >= 0` for all `i`.
/// Zeros belong to every orthant, unlike under [`strict_sign`] coincidence.
pub fn orthant_check(z: &[f64], sigma: &Signature) -> bool {
    assert_eq!(z.len(), sigma.len());
    z.iter()
        .enumerate()
        .all(|(i, &zi)| sigma.sign(i) * zi >= 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_inf_norm_half() {
        let s = DenseMatrix::from_rows(&[vec![0.0, 0.5], vec![0.0, 0.5]]).unwrap();
        assert_eq!(s.inf_norm(), 0.5);
    }

    #[test]
    fn inf_norm_zero_matrix() {
        for n in 1..5 {
            assert_eq!(DenseMatrix::zeros(n).inf_norm(), 0.0);
        }
    }

    #[test]
    fn tridiag_roundtrip_and_norm() {
        let t = TriDiagMatrix::new(vec![0.1, -0.2], vec![0.5, -0.5, 0.5], vec![0.3, 0.4]).unwrap();
        let d = t.to_dense();
        assert_eq!(d.get(1, 0), 0.1);
        assert_eq!(d.get(2, 1), -0.2);
        assert_eq!(d.get(0, 1), 0.3);
        assert_eq!(d.get(0, 2), 0.0);
        assert_eq!(t.inf_norm(), d.inf_norm());
        let back = Matrix::Dense(d).as_tridiag().unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn signature_mask_order() {
        let s = Signature::from_mask(3, 0b101);
        assert_eq!(s.signs(), &[-1, 1, -1]);
        assert_eq!(s.to_string(), "-+-");
        assert_eq!(Signature::from_mask(2, 0).signs(), &[1, 1]);
    }

    #[test]
    fn orthant_membership() {
        let z = [1.0, -2.0];
        assert!(orthant_check(&z, &Signature::new(vec![1, -1]).unwrap()));
        assert!(!orthant_check(&z, &Signature::new(vec![1, 1]).unwrap()));
        // zeros belong to every orthant
        let zero = [0.0, 0.0];
        assert!(orthant_check(&zero, &Signature::new(vec![-1, 1]).unwrap()));
        assert!(orthant_check(&zero, &Signature::new(vec![1, -1]).unwrap()));
    }

    #[test]
    fn strict_sign_values() {
        assert_eq!(strict_sign(3.0), 1);
        assert_eq!(strict_sign(-0.5), -1);
        assert_eq!(strict_sign(0.0), 0);
        assert_eq!(strict_sign(-0.0), 0);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }
}
