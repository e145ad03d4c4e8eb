//! Eigenvalue collections sorted in descending order.

use crate::{Error, Result};

/// Eigenvalues in descending order with gap bookkeeping.
///
/// `min_gap` is the smallest spacing between consecutive values (infinite for
/// a single value). Equal values are admitted, in which case `min_gap` is 0;
/// strict descent is guaranteed exactly when `min_gap > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    min_gap: f64,
}

impl Spectrum {
    /// Wrap a descending-sorted list of finite values.
    pub fn from_descending(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("a spectrum holds at least one value".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("eigenvalues must be finite".into()));
        }
        let mut min_gap = f64::INFINITY;
        for w in values.windows(2) {
            let gap = w[0] - w[1];
            if gap < 0.0 {
                return Err(Error::Domain("values must be sorted in descending order".into()));
            }
            min_gap = min_gap.min(gap);
        }
        Ok(Spectrum { values, min_gap })
    }

    /// Sort (descending) and wrap arbitrary finite values.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite values"));
        Spectrum::from_descending(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest value.
    pub fn top(&self) -> f64 {
        self.values[0]
    }

    /// Smallest spacing between consecutive values.
    pub fn min_gap(&self) -> f64 {
        self.min_gap
    }

    /// Largest absolute value (the spectral radius for symmetric matrices).
    pub fn max_abs(&self) -> f64 {
        self.values[0].abs().max(self.values[self.values.len() - 1].abs())
    }

    /// True iff all values are separated by more than `tol`.
    pub fn is_simple(&self, tol: f64) -> bool {
        self.min_gap > tol
    }
}
