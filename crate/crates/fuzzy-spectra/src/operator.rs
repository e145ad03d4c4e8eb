//! Dense complex operators over labeled bases.
//!
//! The circle basis is {psi_n : n = Lambda ... -Lambda} in descending n; the
//! sphere basis is {psi_l^m} ordered lexicographically by (m, l) with m from
//! -Lambda to Lambda and l from |m| to Lambda, so each L3-block is contiguous.
//! The Madore basis reuses the descending angular-momentum labels.

use num_complex::Complex64;

use crate::params::SpaceKind;
use crate::state::StateVector;
use crate::tridiag::SymTridiag;
use crate::{Error, Result};

/// Label of a single basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Circle eigenvector psi_n of L.
    CircleN(i64),
    /// Sphere eigenvector psi_l^m of (L^2, L3).
    SphereLM { l: u32, m: i64 },
    /// Madore eigenvector phi_m of L3 in the spin-Lambda representation.
    MadoreM(i64),
}

/// Ordered basis of one of the three spaces at a fixed cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Basis {
    kind: SpaceKind,
    lambda: u32,
}

impl Basis {
    pub fn new(kind: SpaceKind, lambda: u32) -> Basis {
        assert!(lambda >= 1, "cutoff must be at least 1");
        Basis { kind, lambda }
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn dim(&self) -> usize {
        let l = self.lambda as usize;
        match self.kind {
            SpaceKind::Circle | SpaceKind::Madore => 2 * l + 1,
            SpaceKind::Sphere => (l + 1) * (l + 1),
        }
    }

    /// Label of basis index `i`.
    pub fn label(&self, i: usize) -> BasisLabel {
        assert!(i < self.dim(), "basis index out of range");
        let lam = self.lambda as i64;
        match self.kind {
            SpaceKind::Circle => BasisLabel::CircleN(lam - i as i64),
            SpaceKind::Madore => BasisLabel::MadoreM(lam - i as i64),
            SpaceKind::Sphere => {
                let mut rest = i;
                for m in -lam..=lam {
                    let size = (lam - m.abs() + 1) as usize;
                    if rest < size {
                        let l = m.unsigned_abs() as u32 + rest as u32;
                        return BasisLabel::SphereLM { l, m };
                    }
                    rest -= size;
                }
                unreachable!("index bounded by dim");
            }
        }
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    /// Index of the circle (or Madore) basis vector with L-eigenvalue `n`.
    pub fn index_of_n(&self, n: i64) -> Option<usize> {
        let lam = self.lambda as i64;
        match self.kind {
            SpaceKind::Circle | SpaceKind::Madore => {
                if n.abs() <= lam {
                    Some((lam - n) as usize)
                } else {
                    None
                }
            }
            SpaceKind::Sphere => None,
        }
    }

    /// Index of the sphere basis vector psi_l^m.
    pub fn index_of_lm(&self, l: u32, m: i64) -> Option<usize> {
        if self.kind != SpaceKind::Sphere {
            return None;
        }
        let lam = self.lambda as i64;
        if m.abs() > lam || (l as i64) < m.abs() || l > self.lambda {
            return None;
        }
        Some(self.sphere_block_start(m) + (l as i64 - m.abs()) as usize)
    }

    /// Contiguous index range of the L3 = m block of the sphere basis.
    pub fn sphere_block_range(&self, m: i64) -> std::ops::Range<usize> {
        assert_eq!(self.kind, SpaceKind::Sphere, "block ranges are a sphere notion");
        assert!(m.abs() <= self.lambda as i64, "|m| exceeds the cutoff");
        let start = self.sphere_block_start(m);
        let size = (self.lambda as i64 - m.abs() + 1) as usize;
        start..start + size
    }

    fn sphere_block_start(&self, m: i64) -> usize {
        let lam = self.lambda as i64;
        let mut start = 0usize;
        for mp in -lam..m {
            start += (lam - mp.abs() + 1) as usize;
        }
        start
    }
}

/// Dense complex matrix over a labeled basis, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorRep {
    basis: Basis,
    data: Vec<Complex64>,
}

impl OperatorRep {
    pub fn zeros(basis: Basis) -> OperatorRep {
        let n = basis.dim();
        OperatorRep { basis, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(basis: Basis) -> OperatorRep {
        let mut out = OperatorRep::zeros(basis);
        for i in 0..basis.dim() {
            out.set(i, i, Complex64::new(1.0, 0.0));
        }
        out
    }

    /// Diagonal operator with real entries assigned per basis label.
    pub fn diag_from_labels(basis: Basis, f: impl Fn(&BasisLabel) -> f64) -> OperatorRep {
        let mut out = OperatorRep::zeros(basis);
        for i in 0..basis.dim() {
            let v = f(&basis.label(i));
            out.set(i, i, Complex64::new(v, 0.0));
        }
        out
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        let n = self.dim();
        self.data[row * n + col] = v;
    }

    fn check_same_basis(&self, other: &OperatorRep) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::DimensionMismatch(
                "operators live on different bases".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &OperatorRep) -> Result<OperatorRep> {
        self.check_same_basis(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(OperatorRep { basis: self.basis, data })
    }

    pub fn sub(&self, other: &OperatorRep) -> Result<OperatorRep> {
        self.check_same_basis(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(OperatorRep { basis: self.basis, data })
    }

    pub fn scale(&self, c: Complex64) -> OperatorRep {
        let data = self.data.iter().map(|a| a * c).collect();
        OperatorRep { basis: self.basis, data }
    }

    pub fn mul(&self, other: &OperatorRep) -> Result<OperatorRep> {
        self.check_same_basis(other)?;
        let n = self.dim();
        let mut out = OperatorRep::zeros(self.basis);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> OperatorRep {
        let n = self.dim();
        let mut out = OperatorRep::zeros(self.basis);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    /// Matrix power by repeated multiplication; `pow(0)` is the identity.
    pub fn pow(&self, e: u32) -> OperatorRep {
        let mut acc = OperatorRep::identity(self.basis);
        for _ in 0..e {
            acc = acc.mul(self).expect("same basis");
        }
        acc
    }

    pub fn commutator(a: &OperatorRep, b: &OperatorRep) -> Result<OperatorRep> {
        a.mul(b)?.sub(&b.mul(a)?)
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.data[i * n..(i + 1) * n];
            let mut s = Complex64::new(0.0, 0.0);
            for (a, x) in row.iter().zip(v) {
                s += a * x;
            }
            *o = s;
        }
        out
    }

    fn matvec_adjoint(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (j, &vj) in v.iter().enumerate().take(n) {
            if vj == Complex64::new(0.0, 0.0) {
                continue;
            }
            let row = &self.data[j * n..(j + 1) * n];
            for (o, a) in out.iter_mut().zip(row) {
                *o += a.conj() * vj;
            }
        }
        out
    }

    /// Largest singular value via power iteration on the Gram matrix.
    ///
    /// The estimate is floored by the largest entry magnitude, which is always
    /// a valid lower bound on the spectral norm.
    pub fn spectral_norm(&self) -> f64 {
        let n = self.dim();
        if self.frobenius_norm() == 0.0 {
            return 0.0;
        }
        let graded: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(1.0 + i as f64 / (n as f64 + 1.0), 0.0))
            .collect();
        // Column of largest norm, as a fallback start outside any kernel the
        // graded vector might land in.
        let jmax = (0..n)
            .max_by(|&a, &b| {
                let ca: f64 = (0..n).map(|i| self.get(i, a).norm_sqr()).sum();
                let cb: f64 = (0..n).map(|i| self.get(i, b).norm_sqr()).sum();
                ca.partial_cmp(&cb).expect("finite entries")
            })
            .expect("nonzero dimension");
        let mut ej = vec![Complex64::new(0.0, 0.0); n];
        ej[jmax] = Complex64::new(1.0, 0.0);
        let s1 = self.power_iterate(graded);
        let s2 = if s1 > 0.0 { s1 } else { self.power_iterate(ej) };
        s1.max(s2).max(self.max_abs_entry())
    }

    fn power_iterate(&self, start: Vec<Complex64>) -> f64 {
        let mut v = start;
        let vn = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if vn == 0.0 {
            return 0.0;
        }
        for c in &mut v {
            *c /= vn;
        }
        let mut sigma2 = 0.0f64;
        let mut prev = f64::NEG_INFINITY;
        for _ in 0..600 {
            let w = self.matvec(&v);
            sigma2 = w.iter().map(|c| c.norm_sqr()).sum();
            if sigma2 == 0.0 {
                return 0.0;
            }
            let u = self.matvec_adjoint(&w);
            let un = u.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if un == 0.0 {
                break;
            }
            for (vi, ui) in v.iter_mut().zip(&u) {
                *vi = ui / un;
            }
            if (sigma2 - prev).abs() <= 1e-15 * sigma2 {
                break;
            }
            prev = sigma2;
        }
        sigma2.sqrt()
    }

    /// Apply to a state, returning the unnormalized image.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        if state.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "state dimension {} does not match operator dimension {}",
                state.dim(),
                self.dim()
            )));
        }
        StateVector::new(self.matvec(state.coeffs()))
    }

    /// Expectation value <v, M v>.
    pub fn expectation(&self, state: &StateVector) -> Result<Complex64> {
        let image = self.apply(state)?;
        state.inner(&image)
    }

    /// Extract a contiguous index range as a real symmetric tridiagonal block.
    ///
    /// Fails if any entry in the range has an imaginary part, sits outside the
    /// tridiagonal band, or breaks symmetry; all three would indicate the
    /// block structure assumed by the caller does not hold.
    pub fn tridiag_block(&self, range: std::ops::Range<usize>) -> Result<SymTridiag> {
        let n = self.dim();
        if range.end > n || range.is_empty() {
            return Err(Error::Domain("block range out of bounds".into()));
        }
        let size = range.len();
        let mut diag = vec![0.0; size];
        let mut off = vec![0.0; size.saturating_sub(1)];
        for (bi, i) in range.clone().enumerate() {
            for (bj, j) in range.clone().enumerate() {
                let v = self.get(i, j);
                if v.im != 0.0 {
                    return Err(Error::Domain("block entry has an imaginary part".into()));
                }
                match bj as i64 - bi as i64 {
                    0 => diag[bi] = v.re,
                    1 => off[bi] = v.re,
                    -1 => {
                        if v.re != self.get(j, i).re {
                            return Err(Error::Domain("block is not symmetric".into()));
                        }
                    }
                    _ => {
                        if v != Complex64::new(0.0, 0.0) {
                            return Err(Error::Domain(
                                "block has entries outside the tridiagonal band".into(),
                            ));
                        }
                    }
                }
            }
        }
        SymTridiag::new(diag, off)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_basis_descends() {
        let b = Basis::new(SpaceKind::Circle, 2);
        assert_eq!(b.dim(), 5);
        assert_eq!(b.label(0), BasisLabel::CircleN(2));
        assert_eq!(b.label(4), BasisLabel::CircleN(-2));
        assert_eq!(b.index_of_n(1), Some(1));
        assert_eq!(b.index_of_n(3), None);
    }

    #[test]
    fn sphere_basis_is_m_then_l() {
        let b = Basis::new(SpaceKind::Sphere, 2);
        assert_eq!(b.dim(), 9);
        let want = [
            (2u32, -2i64),
            (1, -1),
            (2, -1),
            (0, 0),
            (1, 0),
            (2, 0),
            (1, 1),
            (2, 1),
            (2, 2),
        ];
        for (i, &(l, m)) in want.iter().enumerate() {
            assert_eq!(b.label(i), BasisLabel::SphereLM { l, m });
            assert_eq!(b.index_of_lm(l, m), Some(i));
        }
        assert_eq!(b.sphere_block_range(0), 3..6);
        assert_eq!(b.index_of_lm(0, 1), None);
    }

    #[test]
    fn identity_norm_is_one() {
        let id = OperatorRep::identity(Basis::new(SpaceKind::Circle, 1));
        assert!((id.spectral_norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn dagger_and_commutator() {
        let basis = Basis::new(SpaceKind::Circle, 1);
        let mut a = OperatorRep::zeros(basis);
        a.set(0, 1, Complex64::new(0.0, 2.0));
        let ad = a.dagger();
        assert_eq!(ad.get(1, 0), Complex64::new(0.0, -2.0));
        let c = OperatorRep::commutator(&a, &ad).unwrap();
        // [a, a^dagger] for a single raising-type entry is diagonal.
        assert_eq!(c.get(0, 0), Complex64::new(4.0, 0.0));
        assert_eq!(c.get(1, 1), Complex64::new(-4.0, 0.0));
    }

    #[test]
    fn gram_power_iteration_matches_known_norm() {
        let basis = Basis::new(SpaceKind::Circle, 1);
        // Tridiagonal 0, 1/2 Toeplitz as a dense operator.
        let mut a = OperatorRep::zeros(basis);
        for i in 0..2 {
            a.set(i, i + 1, Complex64::new(0.5, 0.0));
            a.set(i + 1, i, Complex64::new(0.5, 0.0));
        }
        let want = std::f64::consts::FRAC_1_SQRT_2;
        assert!((a.spectral_norm() - want).abs() <= 1e-10);
    }

    #[test]
    fn tridiag_block_extraction_checks_structure() {
        let basis = Basis::new(SpaceKind::Sphere, 1);
        let mut a = OperatorRep::zeros(basis);
        let r = basis.sphere_block_range(0);
        a.set(r.start, r.start + 1, Complex64::new(0.25, 0.0));
        a.set(r.start + 1, r.start, Complex64::new(0.25, 0.0));
        let t = a.tridiag_block(r.clone()).unwrap();
        assert_eq!(t.offdiag(), &[0.25]);
        a.set(r.start, r.start, Complex64::new(0.0, 1.0));
        assert!(a.tridiag_block(r).is_err());
    }

    #[test]
    fn pow_zero_is_identity() {
        let basis = Basis::new(SpaceKind::Circle, 1);
        let mut a = OperatorRep::zeros(basis);
        a.set(0, 1, Complex64::new(3.0, 0.0));
        assert_eq!(a.pow(0), OperatorRep::identity(basis));
        assert_eq!(a.pow(2).max_abs_entry(), 0.0);
    }
}
