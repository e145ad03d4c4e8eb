//! Real symmetric tridiagonal matrices.

use crate::{eigen, Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiag {
    /// Build from a diagonal of length n and an off-diagonal of length n-1.
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Domain("matrix dimension must be at least 1".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch(format!(
                "offdiag length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(offdiag.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        Ok(SymTridiag { diag, offdiag })
    }

    /// Toeplitz matrix P_n(a, b, b): constant diagonal a, constant off-diagonal b.
    pub fn toeplitz(n: usize, a: f64, b: f64) -> Result<Self> {
        SymTridiag::new(vec![a; n], vec![b; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Leading principal submatrix of the given size.
    pub fn leading_principal(&self, size: usize) -> Result<Self> {
        if size == 0 || size > self.n() {
            return Err(Error::Domain(format!(
                "leading principal size {size} out of range 1..={}",
                self.n()
            )));
        }
        SymTridiag::new(self.diag[..size].to_vec(), self.offdiag[..size - 1].to_vec())
    }

    /// Upper bound on the spectral radius from Gershgorin disks.
    pub fn gershgorin_bound(&self) -> f64 {
        let n = self.n();
        let mut bound: f64 = 0.0;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            bound = bound.max(self.diag[i].abs() + left + right);
        }
        bound
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(v.len(), n, "vector length must match matrix dimension");
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut s = self.diag[i] * v[i];
            if i > 0 {
                s += self.offdiag[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                s += self.offdiag[i] * v[i + 1];
            }
            out[i] = s;
        }
        out
    }

    /// Largest singular value, i.e. max |eigenvalue|.
    pub fn spectral_norm(&self) -> f64 {
        let tol = 1e-13;
        let top = eigen::eigen_kth(self, self.n() - 1, tol);
        let bottom = eigen::eigen_kth(self, 0, tol);
        top.abs().max(bottom.abs())
    }
}

/// True iff every entry of `a` is bounded by the matching entry of `b`.
///
/// Both matrices must be entrywise nonnegative and of equal size; together
/// with norm monotonicity this justifies spectral-norm sandwich arguments.
pub fn entrywise_dominates(a: &SymTridiag, b: &SymTridiag) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!(
            "sizes {} and {} differ",
            a.n(),
            b.n()
        )));
    }
    let nonneg = |m: &SymTridiag| m.diag.iter().chain(m.offdiag.iter()).all(|&v| v >= 0.0);
    if !nonneg(a) || !nonneg(b) {
        return Err(Error::Domain("entrywise comparison requires nonnegative entries".into()));
    }
    let diag_ok = a.diag.iter().zip(&b.diag).all(|(x, y)| x <= y);
    let off_ok = a.offdiag.iter().zip(&b.offdiag).all(|(x, y)| x <= y);
    Ok(diag_ok && off_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> SymTridiag {
        SymTridiag::toeplitz(3, 0.0, 0.5).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert!(SymTridiag::new(vec![], vec![]).is_err());
        assert!(SymTridiag::new(vec![1.0], vec![1.0]).is_err());
        assert!(SymTridiag::new(vec![1.0, f64::NAN], vec![0.0]).is_err());
        assert!(SymTridiag::new(vec![1.0], vec![]).is_ok());
    }

    #[test]
    fn spectral_norm_identity() {
        let id = SymTridiag::new(vec![1.0; 3], vec![0.0; 2]).unwrap();
        assert!((id.spectral_norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn spectral_norm_toeplitz() {
        // Largest eigenvalue of P_3(0, 1/2, 1/2) is cos(pi/4).
        let want = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p3().spectral_norm() - want).abs() <= 1e-12);
    }

    #[test]
    fn dominates_examples() {
        let big = SymTridiag::toeplitz(3, 0.0, 1.0).unwrap();
        assert!(entrywise_dominates(&p3(), &big).unwrap());
        assert!(!entrywise_dominates(&big, &p3()).unwrap());
        let neg = SymTridiag::toeplitz(3, 0.0, -0.5).unwrap();
        assert!(entrywise_dominates(&neg, &big).is_err());
        let small = SymTridiag::toeplitz(2, 0.0, 0.5).unwrap();
        assert!(entrywise_dominates(&small, &big).is_err());
    }

    #[test]
    fn gershgorin_bounds_norm() {
        let t = SymTridiag::new(vec![0.5, -0.25, 0.0], vec![0.3, 0.7]).unwrap();
        assert!(t.gershgorin_bound() >= t.spectral_norm());
    }

    #[test]
    fn leading_principal_slices() {
        let t = SymTridiag::new(vec![1.0, 2.0, 3.0], vec![4.0, 5.0]).unwrap();
        let s = t.leading_principal(2).unwrap();
        assert_eq!(s.diag(), &[1.0, 2.0]);
        assert_eq!(s.offdiag(), &[4.0]);
        assert!(t.leading_principal(0).is_err());
        assert!(t.leading_principal(4).is_err());
    }
}
