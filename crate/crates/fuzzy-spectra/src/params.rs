//! Model parameters: the cutoff Lambda, the potential stiffness k, and the
//! space kind they apply to.

use std::fmt;

use crate::{Error, Result};

/// Which fuzzy space a parameter set describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Circle,
    Sphere,
    Madore,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Circle => write!(f, "circle"),
            SpaceKind::Sphere => write!(f, "sphere"),
            SpaceKind::Madore => write!(f, "madore"),
        }
    }
}

/// Validated parameter set; the single source of every coefficient value.
///
/// `k` defaults to the floor Lambda^2 (Lambda+1)^2 and is rejected below it.
/// The Madore space has no stiffness parameter, so `k` must be absent there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FuzzyParams {
    lambda: u32,
    k: Option<f64>,
    kind: SpaceKind,
}

/// Smallest admissible stiffness for a given cutoff.
pub fn k_floor(lambda: u32) -> f64 {
    let l = lambda as f64;
    (l * (l + 1.0)).powi(2)
}

/// Build a validated parameter set. `k = None` selects the floor value.
pub fn make_params(lambda: u32, k: Option<f64>, kind: SpaceKind) -> Result<FuzzyParams> {
    if lambda == 0 {
        return Err(Error::InvalidParams("lambda must be at least 1".into()));
    }
    match kind {
        SpaceKind::Madore => {
            if k.is_some() {
                return Err(Error::InvalidParams(
                    "the Madore space takes no stiffness k".into(),
                ));
            }
            Ok(FuzzyParams { lambda, k: None, kind })
        }
        SpaceKind::Circle | SpaceKind::Sphere => {
            let floor = k_floor(lambda);
            let k = k.unwrap_or(floor);
            if !k.is_finite() || k <= 0.0 {
                return Err(Error::InvalidParams("k must be a positive finite real".into()));
            }
            if k < floor {
                return Err(Error::InvalidParams(format!(
                    "k = {k} violates k >= Lambda^2 (Lambda+1)^2 = {floor} at Lambda = {lambda}"
                )));
            }
            Ok(FuzzyParams { lambda, k: Some(k), kind })
        }
    }
}

impl FuzzyParams {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// Stiffness value. Panics for the Madore space, which has none.
    pub fn k(&self) -> f64 {
        self.k.expect("k is undefined for the Madore space")
    }

    pub(crate) fn expect_kind(&self, expected: SpaceKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongKind { expected, got: self.kind })
        }
    }
}

/// Named rules k = k(Lambda) used by the monotonicity sweeps.
///
/// Every rule is clamped from below by [`k_floor`], since the model itself is
/// only defined for k at or above the floor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KRule {
    /// The floor Lambda^2 (Lambda+1)^2 (also the default of `make_params`).
    Default,
    /// Alias of `Default`; kept as a distinct spelling for run configs.
    Floor,
    /// Lambda (Lambda-1) (2 Lambda+3)^2 (2 Lambda+4)^4 / (4 pi^4), the
    /// threshold stated by the circle monotonicity theorem.
    Theorem1cStatement,
    /// Lambda (Lambda-1) (2 Lambda+2)^6 (2 Lambda+3)^2 / (4 pi^4), the
    /// threshold reached on the final line of that theorem's proof.
    Theorem1cProof,
    /// max(Lambda^6, floor), the sphere monotonicity growth rule.
    Lambda6,
    /// A fixed user-supplied value (still clamped to the floor).
    Explicit(f64),
}

impl KRule {
    /// Evaluate the rule at a cutoff.
    pub fn k(&self, lambda: u32) -> f64 {
        let l = lambda as f64;
        let raw = match self {
            KRule::Default | KRule::Floor => k_floor(lambda),
            KRule::Theorem1cStatement => {
                let pi4 = std::f64::consts::PI.powi(4);
                l * (l - 1.0) * (2.0 * l + 3.0).powi(2) * (2.0 * l + 4.0).powi(4) / (4.0 * pi4)
            }
            KRule::Theorem1cProof => {
                let pi4 = std::f64::consts::PI.powi(4);
                l * (l - 1.0) * (2.0 * l + 2.0).powi(6) * (2.0 * l + 3.0).powi(2) / (4.0 * pi4)
            }
            KRule::Lambda6 => l.powi(6),
            KRule::Explicit(v) => *v,
        };
        raw.max(k_floor(lambda))
    }

    /// Stable label used in reports and file output.
    pub fn label(&self) -> String {
        match self {
            KRule::Default => "default".into(),
            KRule::Floor => "floor".into(),
            KRule::Theorem1cStatement => "theorem1c".into(),
            KRule::Theorem1cProof => "theorem1c-proof".into(),
            KRule::Lambda6 => "lambda6".into(),
            KRule::Explicit(v) => format!("explicit({v})"),
        }
    }

    /// Parameter set for one sweep point.
    pub fn params(&self, lambda: u32, kind: SpaceKind) -> Result<FuzzyParams> {
        make_params(lambda, Some(self.k(lambda)), kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_k_is_the_floor() {
        let p = make_params(1, None, SpaceKind::Circle).unwrap();
        assert_eq!(p.k(), 4.0);
        assert_eq!(p.lambda(), 1);
    }

    #[test]
    fn floor_value_accepted() {
        let p = make_params(2, Some(36.0), SpaceKind::Sphere).unwrap();
        assert_eq!(p.k(), 36.0);
    }

    #[test]
    fn below_floor_rejected_with_constraint_in_message() {
        let err = make_params(2, Some(10.0), SpaceKind::Sphere).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Lambda^2 (Lambda+1)^2"), "message was: {msg}");
        assert!(msg.contains("36"), "message was: {msg}");
    }

    #[test]
    fn lambda_zero_rejected() {
        assert!(make_params(0, None, SpaceKind::Circle).is_err());
    }

    #[test]
    fn madore_rejects_k() {
        assert!(make_params(3, Some(100.0), SpaceKind::Madore).is_err());
        assert!(make_params(3, None, SpaceKind::Madore).is_ok());
    }

    #[test]
    fn k_rules_clamp_to_floor() {
        // The stated theorem threshold vanishes at Lambda = 1.
        assert_eq!(KRule::Theorem1cStatement.k(1), k_floor(1));
        // Lambda^6 falls below the floor only at Lambda = 1 (1 < 4).
        assert_eq!(KRule::Lambda6.k(1), k_floor(1));
        assert_eq!(KRule::Lambda6.k(2), 64.0);
        // Well above the floor the rules are used as written.
        let l = 10.0f64;
        let pi4 = std::f64::consts::PI.powi(4);
        let expect = l * (l - 1.0) * 23.0f64.powi(2) * 24.0f64.powi(4) / (4.0 * pi4);
        assert_eq!(KRule::Theorem1cStatement.k(10), expect);
        assert_eq!(KRule::Lambda6.k(10), 1e6);
    }

    #[test]
    fn explicit_rule_still_validated() {
        assert!(KRule::Explicit(10.0).params(2, SpaceKind::Sphere).is_ok());
        assert_eq!(KRule::Explicit(10.0).k(2), 36.0);
    }
}
