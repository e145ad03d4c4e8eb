//! Fuzzy-sphere operators.
//!
//! Basis states psi_l^m are ordered lexicographically by (m, l), m from
//! -Lambda to Lambda, l from |m| to Lambda, so the coordinate x_0 (which
//! preserves m) is block diagonal with one tridiagonal block B_m per m.
//!
//! Coordinate action: x_a psi_l^m = c_l A_l^{a,m} psi_{l-1}^{m+a} plus
//! c_{l+1} B_l^{a,m} psi_{l+1}^{m+a}, a in {+1, 0, -1}, with radial weights
//! c_l = sqrt(1 + l^2/k), c_0 = c_{Lambda+1} = 0. The raising-block table is
//! tied to the lowering one by B_l^{a,m} = A_{l+1}^{-a,m+a}, which is exactly
//! the condition that makes x_0 symmetric and x_- the adjoint of x_+; the
//! variant with m-a in place of m+a would break both.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::operator::{Basis, BasisLabel, OperatorRep};
use crate::params::{FuzzyParams, SpaceKind};
use crate::tridiag::SymTridiag;
use crate::{Error, Result};

fn a0_formula(l: i64, m: i64) -> f64 {
    let num = (l * l - m * m) as f64;
    let den = ((2 * l + 1) * (2 * l - 1)) as f64;
    (num / den).sqrt()
}

fn aplus_formula(l: i64, m: i64) -> f64 {
    let num = ((l - m) * (l - m - 1)).max(0) as f64;
    let den = ((2 * l - 1) * (2 * l + 1)) as f64;
    std::f64::consts::FRAC_1_SQRT_2 * (num / den).sqrt()
}

fn aminus_formula(l: i64, m: i64) -> f64 {
    let num = ((l + m) * (l + m - 1)).max(0) as f64;
    let den = ((2 * l - 1) * (2 * l + 1)) as f64;
    -std::f64::consts::FRAC_1_SQRT_2 * (num / den).sqrt()
}

fn a_formula(a: i64, l: i64, m: i64) -> f64 {
    match a {
        0 => a0_formula(l, m),
        1 => aplus_formula(l, m),
        -1 => aminus_formula(l, m),
        _ => panic!("coordinate index must be -1, 0, or +1"),
    }
}

/// Radial weights c_l and the lowering tables A_l^{a,m} of the sphere.
#[derive(Clone, Debug)]
pub struct SphereCoefficients {
    lambda: u32,
    c: Vec<f64>,
}

impl SphereCoefficients {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// c_l for l in {0, ..., Lambda+1}; zero at both ends.
    pub fn c(&self, l: i64) -> f64 {
        if l < 0 || l > self.lambda as i64 + 1 {
            return 0.0;
        }
        self.c[l as usize]
    }

    /// Lowering coefficient A_l^{a,m} (zero outside 1 <= l, |m| <= l).
    pub fn a(&self, a: i64, l: i64, m: i64) -> f64 {
        if l < 1 || m.abs() > l {
            return 0.0;
        }
        a_formula(a, l, m)
    }

    /// Raising coefficient B_l^{a,m} = A_{l+1}^{-a,m+a}.
    pub fn b(&self, a: i64, l: i64, m: i64) -> f64 {
        self.a(-a, l + 1, m + a)
    }
}

/// Coefficient tables of the sphere at the given parameters.
pub fn sphere_coefficients(p: &FuzzyParams) -> Result<SphereCoefficients> {
    p.expect_kind(SpaceKind::Sphere)?;
    let lam = p.lambda() as i64;
    let k = p.k();
    let c = (0..=lam + 1)
        .map(|l| {
            if l == 0 || l == lam + 1 {
                0.0
            } else {
                (1.0 + (l * l) as f64 / k).sqrt()
            }
        })
        .collect();
    Ok(SphereCoefficients { lambda: p.lambda(), c })
}

/// Size of the L3 = m block, Lambda - |m| + 1.
pub fn block_size(lambda: u32, m: i64) -> usize {
    (lambda as i64 - m.abs() + 1) as usize
}

/// Tridiagonal block of x_0 on the L3 = m eigenspace: zero diagonal,
/// off-diagonal entries c_{|m|+1} A_{|m|+1}^{0,m}, ..., c_Lambda A_Lambda^{0,m}.
pub fn build_bm(p: &FuzzyParams, m: i64) -> Result<SymTridiag> {
    let coeffs = sphere_coefficients(p)?;
    let lam = p.lambda() as i64;
    if m.abs() > lam {
        return Err(Error::Domain(format!(
            "|m| = {} exceeds the cutoff {}",
            m.abs(),
            lam
        )));
    }
    let n = block_size(p.lambda(), m);
    let offdiag = (0..n - 1)
        .map(|j| {
            let l = m.abs() + 1 + j as i64;
            coeffs.c(l) * coeffs.a(0, l, m)
        })
        .collect();
    SymTridiag::new(vec![0.0; n], offdiag)
}

/// All blocks of x_0, keyed by m.
#[derive(Clone, Debug)]
pub struct BlockFamily {
    blocks: BTreeMap<i64, SymTridiag>,
}

impl BlockFamily {
    pub fn build(p: &FuzzyParams) -> Result<BlockFamily> {
        let lam = p.lambda() as i64;
        let mut blocks = BTreeMap::new();
        for m in -lam..=lam {
            blocks.insert(m, build_bm(p, m)?);
        }
        Ok(BlockFamily { blocks })
    }

    pub fn get(&self, m: i64) -> Option<&SymTridiag> {
        self.blocks.get(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &SymTridiag)> {
        self.blocks.iter().map(|(m, t)| (*m, t))
    }
}

/// The dense sphere operators.
#[derive(Clone, Debug)]
pub struct SphereOperators {
    pub x0: OperatorRep,
    pub x_plus: OperatorRep,
    pub x_minus: OperatorRep,
    pub l3: OperatorRep,
    pub l_plus: OperatorRep,
    pub l_minus: OperatorRep,
    pub l_sq: OperatorRep,
}

fn lm_of(label: &BasisLabel) -> (i64, i64) {
    match label {
        BasisLabel::SphereLM { l, m } => (*l as i64, *m),
        _ => unreachable!("sphere basis"),
    }
}

fn build_x(coeffs: &SphereCoefficients, basis: Basis, a: i64) -> OperatorRep {
    let mut x = OperatorRep::zeros(basis);
    for col in 0..basis.dim() {
        let (l, m) = lm_of(&basis.label(col));
        let down = coeffs.c(l) * coeffs.a(a, l, m);
        if down != 0.0 {
            let row = basis
                .index_of_lm((l - 1) as u32, m + a)
                .expect("nonzero lowering keeps |m| <= l");
            x.set(row, col, Complex64::new(down, 0.0));
        }
        let up = coeffs.c(l + 1) * coeffs.b(a, l, m);
        if up != 0.0 {
            let row = basis
                .index_of_lm((l + 1) as u32, m + a)
                .expect("nonzero raising stays under the cutoff");
            x.set(row, col, Complex64::new(up, 0.0));
        }
    }
    x
}

/// Dense x_0, x_+/-, L3, L_+/-, L^2 on the (m, l)-ordered basis.
pub fn build_sphere_operators(p: &FuzzyParams) -> Result<SphereOperators> {
    let coeffs = sphere_coefficients(p)?;
    let basis = Basis::new(SpaceKind::Sphere, p.lambda());
    let x0 = build_x(&coeffs, basis, 0);
    let x_plus = build_x(&coeffs, basis, 1);
    let x_minus = build_x(&coeffs, basis, -1);
    let l3 = OperatorRep::diag_from_labels(basis, |lb| lm_of(lb).1 as f64);
    let l_sq = OperatorRep::diag_from_labels(basis, |lb| {
        let (l, _) = lm_of(lb);
        (l * (l + 1)) as f64
    });
    let mut l_plus = OperatorRep::zeros(basis);
    for col in 0..basis.dim() {
        let (l, m) = lm_of(&basis.label(col));
        if m < l {
            let row = basis.index_of_lm(l as u32, m + 1).expect("m+1 <= l");
            let v = (((l - m) * (l + m + 1)) as f64 / 2.0).sqrt();
            l_plus.set(row, col, Complex64::new(v, 0.0));
        }
    }
    let l_minus = l_plus.dagger();
    Ok(SphereOperators { x0, x_plus, x_minus, l3, l_plus, l_minus, l_sq })
}

/// Diagonal value of the squared radius on psi_l^m.
pub fn x_square_diagonal(p: &FuzzyParams, l: u32) -> Result<f64> {
    p.expect_kind(SpaceKind::Sphere)?;
    assert!(l <= p.lambda(), "angular label out of range");
    let k = p.k();
    let lam = p.lambda() as f64;
    let lf = l as f64;
    let edge = if l == p.lambda() {
        (1.0 + (lam + 1.0) * (lam + 1.0) / k) * (lam + 1.0) / (2.0 * lam + 1.0)
    } else {
        0.0
    };
    Ok(1.0 + (lf * (lf + 1.0) + 1.0) / k - edge)
}

struct CartesianOps {
    x: [OperatorRep; 3],
    l: [OperatorRep; 3],
}

/// The hermitian coordinate triple [x_1, x_2, x_3] as dense operators.
pub fn sphere_cartesian_ops(p: &FuzzyParams) -> Result<[OperatorRep; 3]> {
    let ops = build_sphere_operators(p)?;
    Ok(cartesian(&ops)?.x)
}

fn cartesian(ops: &SphereOperators) -> Result<CartesianOps> {
    let inv_sqrt2 = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let neg_i_inv_sqrt2 = Complex64::new(0.0, -std::f64::consts::FRAC_1_SQRT_2);
    let x1 = ops.x_plus.add(&ops.x_minus)?.scale(inv_sqrt2);
    let x2 = ops.x_plus.sub(&ops.x_minus)?.scale(neg_i_inv_sqrt2);
    let l1 = ops.l_plus.add(&ops.l_minus)?.scale(inv_sqrt2);
    let l2 = ops.l_plus.sub(&ops.l_minus)?.scale(neg_i_inv_sqrt2);
    Ok(CartesianOps {
        x: [x1, x2, ops.x0.clone()],
        l: [l1, l2, ops.l3.clone()],
    })
}

fn projector_top_l(basis: Basis) -> OperatorRep {
    let lam = basis.lambda() as i64;
    OperatorRep::diag_from_labels(basis, |lb| if lm_of(lb).0 == lam { 1.0 } else { 0.0 })
}

const EPS_PAIRS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// Spectral-norm residuals of the equivariant algebra of the sphere.
pub fn sphere_algebra_residuals(p: &FuzzyParams) -> Result<BTreeMap<String, f64>> {
    let ops = build_sphere_operators(p)?;
    let basis = *ops.x0.basis();
    let cart = cartesian(&ops)?;
    let lam = p.lambda() as i64;
    let k = p.k();
    let mut out = BTreeMap::new();

    let i1 = Complex64::new(0.0, 1.0);
    let mut cov = 0.0f64;
    for (i, j, h) in EPS_PAIRS {
        let r = OperatorRep::commutator(&cart.l[i], &cart.x[j])?
            .sub(&cart.x[h].scale(i1))?
            .spectral_norm();
        cov = cov.max(r);
        // The antisymmetric partner [L_j, x_i] = -i x_h.
        let r = OperatorRep::commutator(&cart.l[j], &cart.x[i])?
            .add(&cart.x[h].scale(i1))?
            .spectral_norm();
        cov = cov.max(r);
        let r = OperatorRep::commutator(&cart.l[i], &cart.x[i])?.spectral_norm();
        cov = cov.max(r);
    }
    out.insert("covariance_l_x".into(), cov);

    let mut lalg = 0.0f64;
    for (i, j, h) in EPS_PAIRS {
        let r = OperatorRep::commutator(&cart.l[i], &cart.l[j])?
            .sub(&cart.l[h].scale(i1))?
            .spectral_norm();
        lalg = lalg.max(r);
    }
    out.insert("l_algebra".into(), lalg);

    let mut xdotl = OperatorRep::zeros(basis);
    let mut ldotx = OperatorRep::zeros(basis);
    for i in 0..3 {
        xdotl = xdotl.add(&cart.x[i].mul(&cart.l[i])?)?;
        ldotx = ldotx.add(&cart.l[i].mul(&cart.x[i])?)?;
    }
    out.insert("x_dot_l".into(), xdotl.spectral_norm().max(ldotx.spectral_norm()));

    let mut xsq = OperatorRep::zeros(basis);
    for i in 0..3 {
        xsq = xsq.add(&cart.x[i].mul(&cart.x[i])?)?;
    }
    let edge = (1.0 + ((lam + 1) * (lam + 1)) as f64 / k) * (lam + 1) as f64
        / (2 * lam + 1) as f64;
    let radius = xsq
        .sub(&OperatorRep::identity(basis))?
        .sub(
            &ops.l_sq
                .add(&OperatorRep::identity(basis))?
                .scale(Complex64::new(1.0 / k, 0.0)),
        )?
        .add(&projector_top_l(basis).scale(Complex64::new(edge, 0.0)))?;
    out.insert("radius_square".into(), radius.spectral_norm());

    // L^2 and L3 are diagonal, so their minimal polynomials evaluate
    // entrywise and hit an exactly zero factor on every basis state.
    let lsq_min = (0..basis.dim())
        .map(|idx| {
            let (l, _) = lm_of(&basis.label(idx));
            let mut prod = 1.0f64;
            for lp in 0..=lam {
                prod *= (l * (l + 1) - lp * (lp + 1)) as f64;
                if prod == 0.0 {
                    break;
                }
            }
            prod.abs()
        })
        .fold(0.0, f64::max);
    out.insert("lsq_minimal_polynomial".into(), lsq_min);

    let l3_min = (0..basis.dim())
        .map(|idx| {
            let (l, m) = lm_of(&basis.label(idx));
            let mut prod = 1.0f64;
            for mp in -l..=l {
                prod *= (m - mp) as f64;
                if prod == 0.0 {
                    break;
                }
            }
            prod.abs()
        })
        .fold(0.0, f64::max);
    out.insert("l3_block_minimal_polynomial".into(), l3_min);

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

/// Fit the scalar K in [x_i, x_j] = i eps_{ijh} (-1/k + K P_Lambda) L_h for
/// one index pair (1-based). Fails if the commutator has support that the
/// right-hand side cannot carry.
pub fn fit_commutator_k_for(p: &FuzzyParams, i: usize, j: usize) -> Result<f64> {
    let ops = build_sphere_operators(p)?;
    let cart = cartesian(&ops)?;
    let (ii, jj, hh) = EPS_PAIRS
        .iter()
        .copied()
        .find(|&(a, b, _)| (a + 1, b + 1) == (i, j))
        .ok_or_else(|| {
            Error::Domain(format!("unsupported index pair ({i}, {j}); use (1,2), (2,3) or (3,1)"))
        })?;
    let k = p.k();
    // C := [x_i, x_j] + i L_h / k should equal i K P L_h.
    let c = OperatorRep::commutator(&cart.x[ii], &cart.x[jj])?
        .add(&cart.l[hh].scale(Complex64::new(0.0, 1.0 / k)))?;
    let m = projector_top_l(*ops.x0.basis()).mul(&cart.l[hh])?;
    let m_norm2 = m.frobenius_norm().powi(2);
    if m_norm2 == 0.0 {
        return Err(Error::Domain("projected angular momentum vanishes".into()));
    }
    // Frobenius projection of C onto the ray spanned by iM.
    let n = m.dim();
    let mut dot = Complex64::new(0.0, 0.0);
    for r in 0..n {
        for s in 0..n {
            dot += (m.get(r, s) * Complex64::new(0.0, 1.0)).conj() * c.get(r, s);
        }
    }
    let kfit = dot.re / m_norm2;
    let resid = c
        .sub(&m.scale(Complex64::new(0.0, kfit)))?
        .spectral_norm();
    if resid > 1e-10 {
        return Err(Error::Domain(format!(
            "commutator [x_{i}, x_{j}] deviates from i K P L by {resid:e}; \
             support outside the top angular block"
        )));
    }
    Ok(kfit)
}

/// Fit K from the (1,2) pair.
pub fn fit_commutator_k(p: &FuzzyParams) -> Result<f64> {
    fit_commutator_k_for(p, 1, 2)
}

/// Check c_l A_l^{0,m-1} > c_{l+1} A_{l+1}^{0,m} for all 1 <= m <= Lambda,
/// m <= l <= Lambda, the strict decrease of matching block entries.
pub fn coefficient_inequality_check(p: &FuzzyParams) -> Result<bool> {
    let coeffs = sphere_coefficients(p)?;
    let lam = p.lambda() as i64;
    for m in 1..=lam {
        for l in m..=lam {
            let lhs = coeffs.c(l) * coeffs.a(0, l, m - 1);
            let rhs = coeffs.c(l + 1) * coeffs.a(0, l + 1, m);
            if lhs <= rhs || lhs.is_nan() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{eigen_all, eigen_top};
    use crate::params::make_params;
    use crate::state::StateVector;

    fn params(lambda: u32, k: f64) -> FuzzyParams {
        make_params(lambda, Some(k), SpaceKind::Sphere).unwrap()
    }

    fn default_params(lambda: u32) -> FuzzyParams {
        make_params(lambda, None, SpaceKind::Sphere).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let c = sphere_coefficients(&params(1, 4.0)).unwrap();
        assert!((c.a(0, 1, 0) - 0.5773502691896258).abs() <= 1e-15);
        assert_eq!(c.c(0), 0.0);
        assert_eq!(c.c(2), 0.0);
        assert!((c.c(1) - 1.25f64.sqrt()).abs() <= 1e-16);
        let c = sphere_coefficients(&default_params(6)).unwrap();
        for l in 1..=6i64 {
            assert_eq!(c.a(0, l, l), 0.0);
            assert_eq!(c.a(0, l, -l), 0.0);
        }
    }

    #[test]
    fn raising_table_matches_lowering_table() {
        let c = sphere_coefficients(&default_params(5)).unwrap();
        for l in 1..=5i64 {
            for m in -l..=l {
                for a in [-1i64, 0, 1] {
                    assert_eq!(c.a(a, l, m), c.b(-a, l - 1, m + a));
                }
            }
        }
    }

    #[test]
    fn bm_edge_cases() {
        let p = params(3, 1e4);
        let c = sphere_coefficients(&p).unwrap();
        let top = build_bm(&p, 3).unwrap();
        assert_eq!(top.n(), 1);
        assert_eq!(eigen_all(&top, 1e-13).unwrap().values(), &[0.0]);
        let near = build_bm(&p, 2).unwrap();
        assert_eq!(near.n(), 2);
        let want = c.c(3) * c.a(0, 3, 2);
        let s = eigen_all(&near, 1e-13).unwrap();
        assert!((s.values()[0] - want).abs() <= 1e-12);
        assert!((s.values()[1] + want).abs() <= 1e-12);
        assert!(build_bm(&p, 4).is_err());
    }

    #[test]
    fn b0_lambda1_closed_form() {
        let t = build_bm(&params(1, 4.0), 0).unwrap();
        let want_off = 1.25f64.sqrt() / 3.0f64.sqrt();
        assert!((t.offdiag()[0] - want_off).abs() <= 1e-15);
        let top = eigen_top(&t, 1e-13);
        assert!((top - 0.6454972243679028).abs() <= 1e-13);
    }

    #[test]
    fn blocks_are_even_in_m() {
        let p = default_params(6);
        let fam = BlockFamily::build(&p).unwrap();
        for m in 0..=6i64 {
            let a = fam.get(m).unwrap();
            let b = fam.get(-m).unwrap();
            assert_eq!(a.offdiag(), b.offdiag());
            assert_eq!(a.n(), block_size(6, m));
        }
    }

    #[test]
    fn operators_diagonals_and_blocks() {
        let p = params(2, 36.0);
        let ops = build_sphere_operators(&p).unwrap();
        let basis = *ops.x0.basis();
        for idx in 0..basis.dim() {
            let (l, m) = lm_of(&basis.label(idx));
            assert_eq!(ops.l3.get(idx, idx).re, m as f64);
            assert_eq!(ops.l_sq.get(idx, idx).re, (l * (l + 1)) as f64);
        }
        // x0 commutes with L3 exactly: it never leaves an m-block.
        let comm = OperatorRep::commutator(&ops.x0, &ops.l3).unwrap();
        assert_eq!(comm.max_abs_entry(), 0.0);
        // Each m-block of x0 is the directly built tridiagonal, bitwise.
        for m in -2i64..=2 {
            let block = ops.x0.tridiag_block(basis.sphere_block_range(m)).unwrap();
            let want = build_bm(&p, m).unwrap();
            assert_eq!(block.offdiag(), want.offdiag());
            assert_eq!(block.diag(), want.diag());
        }
        // Adjoint pairing of the ladder coordinates is exact.
        assert_eq!(ops.x_plus.dagger(), ops.x_minus);
    }

    #[test]
    fn algebra_residuals_are_tiny() {
        for p in [params(1, 4.0), default_params(3)] {
            let res = sphere_algebra_residuals(&p).unwrap();
            for (name, value) in &res {
                assert!(value <= &1e-10, "Lambda={}: residual {name} = {value}", p.lambda());
            }
            assert_eq!(res["xplus_nilpotency"], 0.0);
            assert_eq!(res["xminus_nilpotency"], 0.0);
        }
        let res = sphere_algebra_residuals(&params(1, 4.0)).unwrap();
        assert!(res["x_dot_l"] <= 1e-12);
    }

    #[test]
    fn x_square_diagonal_values() {
        let p = params(2, 36.0);
        let ops = build_sphere_operators(&p).unwrap();
        let basis = *ops.x0.basis();
        let mut xsq = OperatorRep::zeros(basis);
        let cart = cartesian(&ops).unwrap();
        for i in 0..3 {
            xsq = xsq.add(&cart.x[i].mul(&cart.x[i]).unwrap()).unwrap();
        }
        for (l, m) in [(0i64, 0i64), (1, -1), (2, 2)] {
            let idx = basis.index_of_lm(l as u32, m).unwrap();
            let mut e = vec![0.0; basis.dim()];
            e[idx] = 1.0;
            let state = StateVector::normalized_real(&e).unwrap();
            let got = xsq.expectation(&state).unwrap();
            let want = x_square_diagonal(&p, l as u32).unwrap();
            assert!(
                (got.re - want).abs() <= 1e-13 && got.im.abs() <= 1e-14,
                "l={l} m={m}: {} vs {want}",
                got.re
            );
        }
        // Interior value on psi_0^0 is 1 + 1/k.
        assert!((x_square_diagonal(&p, 0).unwrap() - (1.0 + 1.0 / 36.0)).abs() <= 1e-16);
    }

    #[test]
    fn commutator_scalar_fit() {
        let p = params(1, 4.0);
        let k12 = fit_commutator_k(&p).unwrap();
        assert!((k12 - 2.0 / 3.0).abs() <= 1e-12, "K = {k12}");
        let k23 = fit_commutator_k_for(&p, 2, 3).unwrap();
        let k31 = fit_commutator_k_for(&p, 3, 1).unwrap();
        assert!((k12 - k23).abs() <= 1e-10);
        assert!((k12 - k31).abs() <= 1e-10);
        assert!(fit_commutator_k_for(&p, 1, 3).is_err());
    }

    #[test]
    fn commutator_scalar_has_finite_limit() {
        // K(k) should behave as A + B/k for large k: successive differences
        // under k-doubling shrink by about half.
        let lambda = 1;
        let base = 4.0e6;
        let k1 = fit_commutator_k(&params(lambda, base)).unwrap();
        let k2 = fit_commutator_k(&params(lambda, 2.0 * base)).unwrap();
        let k4 = fit_commutator_k(&params(lambda, 4.0 * base)).unwrap();
        let r = (k1 - k2) / (k2 - k4);
        assert!((r - 2.0).abs() <= 0.1, "difference ratio {r}");
    }

    #[test]
    fn coefficient_inequality_examples() {
        assert!(coefficient_inequality_check(&params(1, 4.0)).unwrap());
        assert!(coefficient_inequality_check(&params(2, 36.0)).unwrap());
        assert!(coefficient_inequality_check(&default_params(10)).unwrap());
    }
}
