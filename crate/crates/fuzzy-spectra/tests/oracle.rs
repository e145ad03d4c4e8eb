//! Cross-checks of the Sturm/bisection eigensolver against independently
//! computed references: tridiagonal Toeplitz closed forms, dense Jacobi
//! rotations, and a handful of frozen constants evaluated by hand.

use fuzzy_spectra::circle::build_x1;
use fuzzy_spectra::eigen::{
    eigen_all, eigen_all_serial, eigen_kth, eigen_top, eigenvector_of, jacobi_eigenvalues,
    sturm_count, toeplitz_eigs, toeplitz_eigvec,
};
use fuzzy_spectra::params::{make_params, KRule, SpaceKind};
use fuzzy_spectra::sphere::build_bm;
use fuzzy_spectra::tridiag::SymTridiag;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn densify(t: &SymTridiag) -> Vec<f64> {
    let n = t.n();
    let mut mat = vec![0.0; n * n];
    for i in 0..n {
        mat[i * n + i] = t.diag()[i];
    }
    for i in 0..n - 1 {
        mat[i * n + i + 1] = t.offdiag()[i];
        mat[(i + 1) * n + i] = t.offdiag()[i];
    }
    mat
}

#[test]
fn toeplitz_eigenvalues_match_bisection() {
    for n in (1..=120).chain([511, 1001]) {
        let t = SymTridiag::toeplitz(n, 0.0, 0.5).unwrap();
        let s = eigen_all(&t, 1e-12).unwrap();
        let closed = toeplitz_eigs(n, 0.0, 0.5, 0.5).unwrap();
        for (a, b) in s.values().iter().zip(closed.values()) {
            assert!((a - b).abs() <= 1e-11, "n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn toeplitz_with_offset_diagonal() {
    let t = SymTridiag::toeplitz(37, -0.25, 0.4).unwrap();
    let s = eigen_all(&t, 1e-13).unwrap();
    let closed = toeplitz_eigs(37, -0.25, 0.4, 0.4).unwrap();
    for (a, b) in s.values().iter().zip(closed.values()) {
        assert!((a - b).abs() <= 1e-12);
    }
}

#[test]
fn asymmetric_toeplitz_reduces_to_symmetric() {
    // P(a, b, c) with bc > 0 is diagonally similar to the symmetric
    // P(a, sqrt(bc), sqrt(bc)), so the closed form must match the
    // bisection spectrum of the symmetrized matrix.
    let (n, a, b, c) = (23, 0.3, 0.7, 0.2);
    let closed = toeplitz_eigs(n, a, b, c).unwrap();
    let sym = SymTridiag::toeplitz(n, a, (b * c).sqrt()).unwrap();
    let s = eigen_all(&sym, 1e-13).unwrap();
    for (x, y) in s.values().iter().zip(closed.values()) {
        assert!((x - y).abs() <= 1e-12);
    }
}

#[test]
fn toeplitz_eigenvectors_all_indices() {
    for n in [1usize, 2, 3, 7, 24, 60] {
        let t = SymTridiag::toeplitz(n, 0.0, 0.5).unwrap();
        let s = eigen_all(&t, 1e-13).unwrap();
        for h in 1..=n {
            let pair = eigenvector_of(&t, s.values()[h - 1]).unwrap();
            let chi = toeplitz_eigvec(n, h, 0.5, 0.5).unwrap();
            // Both are normalized; fix the relative sign via the largest
            // closed-form component.
            let k_ref = chi
                .coeffs()
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.re.abs().partial_cmp(&y.1.re.abs()).unwrap())
                .unwrap()
                .0;
            let sign = (pair.vector.coeffs()[k_ref].re * chi.coeffs()[k_ref].re).signum();
            for (u, v) in pair.vector.coeffs().iter().zip(chi.coeffs()) {
                assert!(
                    (u.re - sign * v.re).abs() <= 1e-8,
                    "n={n} h={h}: {} vs {}",
                    u.re,
                    v.re
                );
            }
            assert!(pair.residual <= 1e-10);
        }
    }
}

#[test]
fn toeplitz_eigenvectors_spot_large() {
    for n in [200usize, 1001] {
        let t = SymTridiag::toeplitz(n, 0.0, 0.5).unwrap();
        for h in [1, n / 2, n] {
            let lambda = toeplitz_eigs(n, 0.0, 0.5, 0.5).unwrap().values()[h - 1];
            let pair = eigenvector_of(&t, lambda).unwrap();
            let chi = toeplitz_eigvec(n, h, 0.5, 0.5).unwrap();
            let k_ref = chi
                .coeffs()
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.re.abs().partial_cmp(&y.1.re.abs()).unwrap())
                .unwrap()
                .0;
            let sign = (pair.vector.coeffs()[k_ref].re * chi.coeffs()[k_ref].re).signum();
            for (u, v) in pair.vector.coeffs().iter().zip(chi.coeffs()) {
                assert!((u.re - sign * v.re).abs() <= 1e-8, "n={n} h={h}");
            }
        }
    }
}

#[test]
fn jacobi_agrees_with_bisection_on_fuzzy_matrices() {
    let pc = make_params(9, None, SpaceKind::Circle).unwrap();
    let x = build_x1(&pc).unwrap();
    let dense = jacobi_eigenvalues(&densify(&x), x.n()).unwrap();
    let s = eigen_all(&x, 1e-13).unwrap();
    for (a, b) in dense.iter().zip(s.values()) {
        assert!((a - b).abs() <= 1e-12);
    }

    let ps = make_params(7, None, SpaceKind::Sphere).unwrap();
    for m in [0i64, 2, -4] {
        let bm = build_bm(&ps, m).unwrap();
        let dense = jacobi_eigenvalues(&densify(&bm), bm.n()).unwrap();
        let s = eigen_all(&bm, 1e-13).unwrap();
        for (a, b) in dense.iter().zip(s.values()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }
}

#[test]
fn jacobi_agrees_on_skewed_tridiagonal() {
    // Non-Toeplitz entries exercise the general code paths of both solvers.
    let n = 24;
    let diag: Vec<f64> = (0..n).map(|j| (j as f64 * 0.37).sin()).collect();
    let off: Vec<f64> = (0..n - 1).map(|j| 0.3 + (j as f64) / 10.0).collect();
    let t = SymTridiag::new(diag, off).unwrap();
    let dense = jacobi_eigenvalues(&densify(&t), n).unwrap();
    let s = eigen_all(&t, 1e-13).unwrap();
    let serial = eigen_all_serial(&t, 1e-13).unwrap();
    for ((a, b), c) in dense.iter().zip(s.values()).zip(serial.values()) {
        assert!((a - b).abs() <= 1e-12);
        assert_eq!(b, c, "parallel and serial bisection must agree exactly");
    }
}

#[test]
fn sturm_counts_match_jacobi_counts() {
    let n = 18;
    let diag: Vec<f64> = (0..n).map(|j| ((j * j) as f64 * 0.11).cos()).collect();
    let off: Vec<f64> = (0..n - 1).map(|j| 0.2 + (j as f64 * 0.51).sin().abs()).collect();
    let t = SymTridiag::new(diag, off).unwrap();
    let dense = jacobi_eigenvalues(&densify(&t), n).unwrap();
    for x in [-2.0, -0.5, 0.0, 0.3, 1.1, 2.5] {
        let expected = dense.iter().filter(|&&v| v < x).count();
        assert_eq!(sturm_count(&t, x), expected, "at x={x}");
    }
}

#[test]
fn frozen_circle_constants() {
    // Lambda = 1 (k = 4): all off-diagonal entries are exactly 1/2.
    let p = make_params(1, None, SpaceKind::Circle).unwrap();
    let t = build_x1(&p).unwrap();
    assert!((eigen_top(&t, 1e-13) - FRAC_1_SQRT_2).abs() <= 1e-12);
    assert!(eigen_kth(&t, 1, 1e-13).abs() <= 1e-12);

    // Lambda = 2, k = 36: alpha_1 = sqrt(3 + 1/18)/2, alpha_2 = sqrt(1 + 1/18)/2.
    let p = make_params(2, Some(36.0), SpaceKind::Circle).unwrap();
    let t = build_x1(&p).unwrap();
    assert!((eigen_top(&t, 1e-13) - 0.8740073734751262).abs() <= 1e-12);
    assert!((eigen_kth(&t, 3, 1e-13) - 0.5137011669140814).abs() <= 1e-12);
    let b_edge = (19.0f64 / 18.0).sqrt();
    assert!((b_edge - 1.0274023338281628).abs() <= 1e-15);
}

#[test]
fn frozen_sphere_constants() {
    // Lambda = 1 (k = 4): B_0 = [[0, v], [v, 0]] with v^2 = 5/12.
    let p = make_params(1, None, SpaceKind::Sphere).unwrap();
    let b0 = build_bm(&p, 0).unwrap();
    assert!((eigen_top(&b0, 1e-13) - (5.0f64 / 12.0).sqrt()).abs() <= 1e-12);

    // Lambda = 2 under k = max(Lambda^6, floor) = 64.
    let p = KRule::Lambda6.params(2, SpaceKind::Sphere).unwrap();
    assert_eq!(p.k(), 64.0);
    let b0 = build_bm(&p, 0).unwrap();
    assert!((eigen_top(&b0, 1e-13) - 0.7885905147793751).abs() <= 1e-12);
}

#[test]
fn limit_constants() {
    assert!((1.0 - std::f64::consts::PI.powi(2) / 32.0 - 0.6915748624659576).abs() <= 1e-15);
    assert!(((std::f64::consts::PI / 6.0).cos() - 0.8660254037844387).abs() <= 1e-15);
}
