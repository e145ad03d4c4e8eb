//! Fuzzy-circle operators.
//!
//! The space carries the orthonormal basis psi_Lambda ... psi_{-Lambda}
//! (descending angular momentum n). The ladder operators act as
//! x_+ psi_n = b_{n+1} psi_{n+1} and x_- psi_n = b_n psi_{n-1} with
//! b_n = sqrt(1 + n(n-1)/k) inside the band and b_{-Lambda} = b_{Lambda+1} = 0
//! at its edges; x_1 = (x_+ + x_-)/2 is the real coordinate whose matrix is
//! tridiagonal with zero diagonal.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::operator::{Basis, BasisLabel, OperatorRep};
use crate::params::{FuzzyParams, SpaceKind};
use crate::tridiag::SymTridiag;
use crate::Result;

/// Ladder coefficients b_n for n in {-Lambda, ..., Lambda+1}.
#[derive(Clone, Debug)]
pub struct CircleCoefficients {
    lambda: u32,
    b: Vec<f64>,
}

impl CircleCoefficients {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// b_n, zero outside the stored range.
    pub fn b(&self, n: i64) -> f64 {
        let lam = self.lambda as i64;
        if n < -lam || n > lam + 1 {
            return 0.0;
        }
        self.b[(n + lam) as usize]
    }

    /// Largest coefficient, b_Lambda = sqrt(1 + Lambda(Lambda-1)/k).
    pub fn max_b(&self) -> f64 {
        self.b.iter().cloned().fold(0.0, f64::max)
    }
}

/// Coefficients b_n of the circle at the given parameters.
pub fn circle_coefficients(p: &FuzzyParams) -> Result<CircleCoefficients> {
    p.expect_kind(SpaceKind::Circle)?;
    let lam = p.lambda() as i64;
    let k = p.k();
    let b = (-lam..=lam + 1)
        .map(|n| {
            if n <= -lam || n > lam {
                0.0
            } else {
                (1.0 + (n * (n - 1)) as f64 / k).sqrt()
            }
        })
        .collect();
    Ok(CircleCoefficients { lambda: p.lambda(), b })
}

/// Matrix of the coordinate x_1: zero diagonal, off-diagonal
/// (b_Lambda/2, ..., b_{1-Lambda}/2) in descending-n basis order.
pub fn build_x1(p: &FuzzyParams) -> Result<SymTridiag> {
    let coeffs = circle_coefficients(p)?;
    let lam = p.lambda() as i64;
    let n = (2 * lam + 1) as usize;
    let offdiag = (0..n - 1).map(|i| coeffs.b(lam - i as i64) / 2.0).collect();
    SymTridiag::new(vec![0.0; n], offdiag)
}

/// The circle ladder operators and the angular momentum.
#[derive(Clone, Debug)]
pub struct CircleOperators {
    pub x_plus: OperatorRep,
    pub x_minus: OperatorRep,
    pub l: OperatorRep,
}

/// Dense x_+, x_-, L on the descending-n basis; x_- is the exact conjugate
/// transpose of x_+.
pub fn build_circle_operators(p: &FuzzyParams) -> Result<CircleOperators> {
    p.expect_kind(SpaceKind::Circle)?;
    let coeffs = circle_coefficients(p)?;
    let basis = Basis::new(SpaceKind::Circle, p.lambda());
    let lam = p.lambda() as i64;
    let mut x_plus = OperatorRep::zeros(basis);
    for n in -lam..lam {
        let row = basis.index_of_n(n + 1).expect("in range");
        let col = basis.index_of_n(n).expect("in range");
        x_plus.set(row, col, Complex64::new(coeffs.b(n + 1), 0.0));
    }
    let x_minus = x_plus.dagger();
    let l = OperatorRep::diag_from_labels(basis, |label| match label {
        BasisLabel::CircleN(n) => *n as f64,
        _ => unreachable!("circle basis"),
    });
    Ok(CircleOperators { x_plus, x_minus, l })
}

/// The hermitian coordinate pair [x_1, x_2] as dense operators.
pub fn circle_cartesian_ops(p: &FuzzyParams) -> Result<[OperatorRep; 2]> {
    let ops = build_circle_operators(p)?;
    let x1 = ops.x_plus.add(&ops.x_minus)?.scale(Complex64::new(0.5, 0.0));
    let x2 = ops.x_plus.sub(&ops.x_minus)?.scale(Complex64::new(0.0, -0.5));
    Ok([x1, x2])
}

/// Diagonal value of the squared radius x_1^2 + x_2^2 on psi_n.
pub fn x_square_diagonal(p: &FuzzyParams, n: i64) -> Result<f64> {
    p.expect_kind(SpaceKind::Circle)?;
    let lam = p.lambda() as i64;
    assert!(n.abs() <= lam, "basis label out of range");
    let k = p.k();
    let edge = if n.abs() == lam {
        (1.0 + (lam * (lam + 1)) as f64 / k) / 2.0
    } else {
        0.0
    };
    Ok(1.0 + (n * n) as f64 / k - edge)
}

fn projector_on(basis: Basis, index: usize) -> OperatorRep {
    let mut p = OperatorRep::zeros(basis);
    p.set(index, index, Complex64::new(1.0, 0.0));
    p
}

/// Spectral-norm residuals of the equivariant algebra of the circle:
/// ladder commutators with L, the x_+/x_- commutator, the squared radius,
/// the minimal polynomial of L, and nilpotency of the ladders.
pub fn circle_algebra_residuals(p: &FuzzyParams) -> Result<BTreeMap<String, f64>> {
    let ops = build_circle_operators(p)?;
    let basis = *ops.x_plus.basis();
    let lam = p.lambda() as i64;
    let k = p.k();
    let dim = basis.dim();
    let mut out = BTreeMap::new();

    let comm_plus = OperatorRep::commutator(&ops.l, &ops.x_plus)?.sub(&ops.x_plus)?;
    out.insert("commutator_l_xplus".into(), comm_plus.spectral_norm());
    let comm_minus = OperatorRep::commutator(&ops.l, &ops.x_minus)?.add(&ops.x_minus)?;
    out.insert("commutator_l_xminus".into(), comm_minus.spectral_norm());

    let edge = 1.0 + (lam * (lam + 1)) as f64 / k;
    let p_top = projector_on(basis, basis.index_of_n(lam).expect("edge state"));
    let p_bot = projector_on(basis, basis.index_of_n(-lam).expect("edge state"));
    let ladder = OperatorRep::commutator(&ops.x_plus, &ops.x_minus)?
        .add(&ops.l.scale(Complex64::new(2.0 / k, 0.0)))?
        .sub(&p_top.sub(&p_bot)?.scale(Complex64::new(edge, 0.0)))?;
    out.insert("commutator_xplus_xminus".into(), ladder.spectral_norm());

    let xsq = ops
        .x_plus
        .mul(&ops.x_minus)?
        .add(&ops.x_minus.mul(&ops.x_plus)?)?
        .scale(Complex64::new(0.5, 0.0));
    let radius = xsq
        .sub(&OperatorRep::identity(basis))?
        .sub(&ops.l.mul(&ops.l)?.scale(Complex64::new(1.0 / k, 0.0)))?
        .add(&p_top.add(&p_bot)?.scale(Complex64::new(edge / 2.0, 0.0)))?;
    out.insert("radius_square".into(), radius.spectral_norm());

    // L is diagonal, so the minimal polynomial evaluates entrywise; each basis
    // label n meets its own factor (n - m) = 0, making the product exact.
    let minpoly = (0..dim)
        .map(|i| {
            let n = match basis.label(i) {
                BasisLabel::CircleN(n) => n,
                _ => unreachable!("circle basis"),
            };
            let mut prod = 1.0f64;
            for m in -lam..=lam {
                prod *= (n - m) as f64;
                if prod == 0.0 {
                    break;
                }
            }
            prod.abs()
        })
        .fold(0.0, f64::max);
    out.insert("l_minimal_polynomial".into(), minpoly);

    out.insert(
        "xplus_nilpotency".into(),
        ops.x_plus.pow(2 * p.lambda() + 1).max_abs_entry(),
    );
    out.insert(
        "xminus_nilpotency".into(),
        ops.x_minus.pow(2 * p.lambda() + 1).max_abs_entry(),
    );
    Ok(out)
}
