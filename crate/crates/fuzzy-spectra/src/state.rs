//! State vectors over the operator bases.

use num_complex::Complex64;

use crate::{Error, Result};

/// A vector of complex coefficients over the basis of an `OperatorRep`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    coeffs: Vec<Complex64>,
    normalized: bool,
}

impl StateVector {
    /// Wrap raw coefficients without normalizing.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a state needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Domain("state coefficients must be finite".into()));
        }
        Ok(StateVector { coeffs, normalized: false })
    }

    /// Wrap and scale to unit Euclidean norm.
    pub fn normalized(coeffs: Vec<Complex64>) -> Result<Self> {
        let mut s = StateVector::new(coeffs)?;
        let n = s.norm();
        if n == 0.0 {
            return Err(Error::Domain("cannot normalize the zero vector".into()));
        }
        for c in &mut s.coeffs {
            *c /= n;
        }
        s.normalized = true;
        Ok(s)
    }

    /// Convenience constructor for real coefficients, normalized.
    pub fn normalized_real(coeffs: &[f64]) -> Result<Self> {
        StateVector::normalized(coeffs.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Hermitian inner product, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "state dimensions {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}
