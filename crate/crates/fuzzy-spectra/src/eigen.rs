//! Symmetric-tridiagonal eigensolver.
//!
//! Eigenvalues come from bisection on Sturm counts of the characteristic
//! recursion, evaluated in a scaled pivot form that cannot overflow; the raw
//! leading-principal-minor recursion
//! p_h(x) = (diag_h - x) p_{h-1}(x) - offdiag_h^2 p_{h-2}(x)
//! grows out of range for n beyond a few hundred. Eigenvectors come from
//! inverse iteration with a pivoted tridiagonal LU. Tridiagonal Toeplitz
//! matrices have closed-form spectra, used throughout as the test oracle.

use crate::par;
use crate::spectrum::Spectrum;
use crate::state::StateVector;
use crate::tridiag::SymTridiag;
use crate::{Error, Result};

/// Shifts per Sturm-count sweep. The scalar division chain that dominates the
/// count is latency-bound, so evaluating several independent shifts in lock
/// step keeps the divider busy.
const LANES: usize = 8;

fn pivot_floor(off2_max: f64) -> f64 {
    (f64::MIN_POSITIVE / f64::EPSILON) * off2_max.max(1.0)
}

/// Count of eigenvalues strictly below each of the eight shifts.
///
/// Pivots d_h = p_h / p_{h-1} of the minor recursion are tracked instead of
/// the minors themselves; a vanishing pivot is nudged to +pivmin so that a
/// shift sitting exactly on an eigenvalue does not count it.
fn negcount8(diag: &[f64], off2: &[f64], pivmin: f64, xs: &[f64; LANES]) -> [u32; LANES] {
    let n = diag.len();
    let mut q = [0.0f64; LANES];
    let mut cnt = [0u32; LANES];
    let d0 = diag[0];
    for l in 0..LANES {
        let mut qi = d0 - xs[l];
        if qi.abs() < pivmin {
            qi = if qi < 0.0 { -pivmin } else { pivmin };
        }
        cnt[l] += (qi < 0.0) as u32;
        q[l] = qi;
    }
    for i in 1..n {
        let di = diag[i];
        let e2 = off2[i - 1];
        for l in 0..LANES {
            let mut qi = di - xs[l] - e2 / q[l];
            if qi.abs() < pivmin {
                qi = if qi < 0.0 { -pivmin } else { pivmin };
            }
            cnt[l] += (qi < 0.0) as u32;
            q[l] = qi;
        }
    }
    cnt
}

fn off_squares(t: &SymTridiag) -> Vec<f64> {
    t.offdiag().iter().map(|e| e * e).collect()
}

fn negcount1(diag: &[f64], off2: &[f64], pivmin: f64, x: f64) -> u32 {
    negcount8(diag, off2, pivmin, &[x; LANES])[0]
}

/// One evaluation of the Sturm sign count at a point.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    matrix: SymTridiag,
    x: f64,
    count: usize,
}

impl SturmSequence {
    pub fn evaluate(t: &SymTridiag, x: f64) -> SturmSequence {
        assert!(x.is_finite(), "Sturm count requires a finite evaluation point");
        let off2 = off_squares(t);
        let pivmin = pivot_floor(off2.iter().cloned().fold(0.0, f64::max));
        let count = negcount1(t.diag(), &off2, pivmin, x) as usize;
        SturmSequence { matrix: t.clone(), x, count }
    }

    pub fn matrix(&self) -> &SymTridiag {
        &self.matrix
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Number of eigenvalues of the matrix strictly below the point.
    pub fn count(&self) -> usize {
        self.count
    }
}

/// Number of eigenvalues of `t` strictly below `x`.
pub fn sturm_count(t: &SymTridiag, x: f64) -> usize {
    assert!(x.is_finite(), "Sturm count requires a finite evaluation point");
    let off2 = off_squares(t);
    let pivmin = pivot_floor(off2.iter().cloned().fold(0.0, f64::max));
    negcount1(t.diag(), &off2, pivmin, x) as usize
}

#[derive(Clone, Copy, Debug)]
struct Interval {
    lo: f64,
    hi: f64,
    clo: u32,
    chi: u32,
}

/// Initial enclosing bracket with verified counts 0 and n.
fn enclosing_interval(t: &SymTridiag, off2: &[f64], pivmin: f64) -> Interval {
    let n = t.n() as u32;
    let mut r = t.gershgorin_bound().max(1e-300);
    for _ in 0..8 {
        let lo = -r;
        let hi = r;
        let clo = negcount1(t.diag(), off2, pivmin, lo);
        let chi = negcount1(t.diag(), off2, pivmin, hi);
        if clo == 0 && chi == n {
            return Interval { lo, hi, clo, chi };
        }
        r *= 2.0;
    }
    unreachable!("Gershgorin bound encloses the spectrum");
}

fn eigen_all_impl(t: &SymTridiag, tol: f64, parallel: bool) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain("bisection tolerance must be positive".into()));
    }
    let n = t.n();
    if n == 1 {
        return Spectrum::from_descending(vec![t.diag()[0]]);
    }
    let off2 = off_squares(t);
    let pivmin = pivot_floor(off2.iter().cloned().fold(0.0, f64::max));
    let mut out = vec![0.0f64; n];
    let mut active = vec![enclosing_interval(t, &off2, pivmin)];
    let mut rounds = 0;
    while !active.is_empty() {
        rounds += 1;
        if rounds > 200 {
            return Err(Error::NoConvergence(
                "bisection bracket failed to shrink".into(),
            ));
        }
        let mut to_eval: Vec<(Interval, f64)> = Vec::with_capacity(active.len());
        for iv in active.drain(..) {
            let mid = 0.5 * (iv.lo + iv.hi);
            if iv.hi - iv.lo <= tol || !(iv.lo < mid && mid < iv.hi) {
                for idx in iv.clo..iv.chi {
                    out[idx as usize] = mid;
                }
            } else {
                to_eval.push((iv, mid));
            }
        }
        if to_eval.is_empty() {
            break;
        }
        let chunks: Vec<[f64; LANES]> = to_eval
            .chunks(LANES)
            .map(|c| {
                let mut xs = [c[0].1; LANES];
                for (slot, &(_, m)) in xs.iter_mut().zip(c) {
                    *slot = m;
                }
                xs
            })
            .collect();
        let diag = t.diag();
        let eval = |xs: [f64; LANES]| negcount8(diag, &off2, pivmin, &xs);
        let counts: Vec<[u32; LANES]> = if parallel {
            par::map_collect(chunks, eval)
        } else {
            par::map_collect_serial(chunks, eval)
        };
        let mut flat = counts.iter().flat_map(|c| c.iter().copied());
        for (iv, mid) in to_eval {
            // Clamp to keep counts monotone under roundoff.
            let cmid = flat.next().expect("one count per midpoint").clamp(iv.clo, iv.chi);
            if cmid > iv.clo {
                active.push(Interval { lo: iv.lo, hi: mid, clo: iv.clo, chi: cmid });
            }
            if iv.chi > cmid {
                active.push(Interval { lo: mid, hi: iv.hi, clo: cmid, chi: iv.chi });
            }
        }
    }
    out.reverse();
    Spectrum::from_descending(out)
}

/// All eigenvalues, descending, each bisected to a bracket of width <= tol.
pub fn eigen_all(t: &SymTridiag, tol: f64) -> Result<Spectrum> {
    eigen_all_impl(t, tol, true)
}

/// Single-threaded [`eigen_all`], for benchmarking the parallel speedup.
pub fn eigen_all_serial(t: &SymTridiag, tol: f64) -> Result<Spectrum> {
    eigen_all_impl(t, tol, false)
}

/// The k-th smallest eigenvalue (k = 0 is the bottom, k = n-1 the top).
pub fn eigen_kth(t: &SymTridiag, k: usize, tol: f64) -> f64 {
    assert!(k < t.n(), "eigenvalue index out of range");
    assert!(tol > 0.0, "bisection tolerance must be positive");
    if t.n() == 1 {
        return t.diag()[0];
    }
    let off2 = off_squares(t);
    let pivmin = pivot_floor(off2.iter().cloned().fold(0.0, f64::max));
    let iv = enclosing_interval(t, &off2, pivmin);
    let (mut lo, mut hi) = (iv.lo, iv.hi);
    let k = k as u32;
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || !(lo < mid && mid < hi) {
            return mid;
        }
        if negcount1(t.diag(), &off2, pivmin, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Largest eigenvalue.
pub fn eigen_top(t: &SymTridiag, tol: f64) -> f64 {
    eigen_kth(t, t.n() - 1, tol)
}

/// Eigenvalue/eigenvector pair with its residual norm.
#[derive(Clone, Debug)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: StateVector,
    pub residual: f64,
}

struct TriLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swap: Vec<bool>,
}

/// Pivoted LU of (T - shift I); zero pivots are perturbed so solves stay
/// finite, which inverse iteration tolerates.
fn factor_shifted(t: &SymTridiag, shift: f64, pert: f64) -> TriLu {
    let n = t.n();
    let mut d: Vec<f64> = t.diag().iter().map(|v| v - shift).collect();
    let mut dl = t.offdiag().to_vec();
    let mut du = t.offdiag().to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swap = vec![false; n.saturating_sub(1)];
    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = pert;
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            dl[i] = fact;
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let tmp = d[i + 1];
            d[i + 1] = du[i] - fact * tmp;
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -fact;
            }
            du[i] = tmp;
            dl[i] = fact;
            swap[i] = true;
        }
    }
    let last = n - 1;
    if d[last] == 0.0 {
        d[last] = pert;
    }
    TriLu { dl, d, du, du2, swap }
}

impl TriLu {
    fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swap[i] {
                b.swap(i, i + 1);
            }
            b[i + 1] -= self.dl[i] * b[i];
        }
        b[n - 1] /= self.d[n - 1];
        if n >= 2 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

pub(crate) fn lcg_fill(seed: u64, out: &mut [f64]) {
    let mut state = seed;
    for v in out.iter_mut() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        *v = ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0;
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if nrm > 0.0 {
        for x in v.iter_mut() {
            *x /= nrm;
        }
    }
    nrm
}

fn residual_and_rayleigh(t: &SymTridiag, v: &[f64]) -> (f64, f64) {
    let tv = t.matvec(v);
    let rq: f64 = v.iter().zip(&tv).map(|(a, b)| a * b).sum();
    let res = tv
        .iter()
        .zip(v)
        .map(|(tvi, vi)| {
            let r = tvi - rq * vi;
            r * r
        })
        .sum::<f64>()
        .sqrt();
    (res, rq)
}

/// Unit eigenvector for the eigenvalue nearest `lambda`, by inverse iteration.
///
/// The returned value is the Rayleigh quotient of the converged vector, so the
/// stored residual is measured against the best available eigenvalue. Sign
/// convention: the first component that is not negligibly small is positive.
pub fn eigenvector_of(t: &SymTridiag, lambda: f64) -> Result<Eigenpair> {
    if !lambda.is_finite() {
        return Err(Error::Domain("eigenvalue estimate must be finite".into()));
    }
    let n = t.n();
    let scale = t.gershgorin_bound().max(1.0);
    if n == 1 {
        return Ok(Eigenpair {
            value: t.diag()[0],
            vector: StateVector::normalized_real(&[1.0])?,
            residual: 0.0,
        });
    }
    let pert = f64::EPSILON * scale;
    let thresh = 1e-11 * scale;
    let seeds = [0x9e3779b97f4a7c15u64, 0x5851f42d4c957f2d, 0xd1342543de82ef95];
    let mut v = vec![0.0f64; n];
    for &seed in &seeds {
        lcg_fill(seed, &mut v);
        if normalize(&mut v) == 0.0 {
            continue;
        }
        let mut shift = lambda;
        let mut lu = factor_shifted(t, shift, pert);
        for iter in 0..12 {
            lu.solve_in_place(&mut v);
            let nrm = normalize(&mut v);
            if nrm == 0.0 || !v.iter().all(|x| x.is_finite()) {
                break;
            }
            let (res, rq) = residual_and_rayleigh(t, &v);
            if res <= thresh {
                fix_sign(&mut v);
                let (res, rq) = residual_and_rayleigh(t, &v);
                return Ok(Eigenpair {
                    value: rq,
                    vector: StateVector::normalized_real(&v)?,
                    residual: res,
                });
            }
            // Re-center on the Rayleigh quotient if plain iteration stalls.
            if iter >= 3 && (iter - 3) % 4 == 0 && rq.is_finite() && rq != shift {
                shift = rq;
                lu = factor_shifted(t, shift, pert);
            }
        }
    }
    Err(Error::NoConvergence(format!(
        "inverse iteration did not converge near {lambda}"
    )))
}

fn fix_sign(v: &mut [f64]) {
    let maxabs = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let cut = 1e-8 * maxabs;
    if let Some(first) = v.iter().find(|x| x.abs() > cut) {
        if *first < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

/// Spectrum of the n x n tridiagonal Toeplitz matrix with diagonal `a`,
/// subdiagonal `b`, superdiagonal `c`:
/// lambda_h = a + 2 sqrt(bc) cos(h pi / (n+1)), h = 1..n, descending.
pub fn toeplitz_eigs(n: usize, a: f64, b: f64, c: f64) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::Domain("Toeplitz order must be positive".into()));
    }
    let bc = b * c;
    if bc < 0.0 {
        return Err(Error::Domain(
            "bc < 0 has a complex spectrum, which is out of scope".into(),
        ));
    }
    let amp = 2.0 * bc.sqrt();
    let step = std::f64::consts::PI / (n as f64 + 1.0);
    let values = (1..=n).map(|h| a + amp * (h as f64 * step).cos()).collect();
    Spectrum::from_descending(values)
}

/// Unnormalized closed-form eigenvector of the Toeplitz matrix:
/// component k = (c/b)^{k/2} sin(h k pi / (n+1)), k = 1..n.
pub fn toeplitz_eigvec_raw(n: usize, h: usize, b: f64, c: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Domain("Toeplitz order must be positive".into()));
    }
    if h < 1 || h > n {
        return Err(Error::Domain(format!(
            "eigenvector index {h} outside 1..={n}"
        )));
    }
    if b * c <= 0.0 || (b * c).is_nan() {
        return Err(Error::Domain(
            "closed-form eigenvectors require bc > 0".into(),
        ));
    }
    let ratio = c / b;
    let step = h as f64 * std::f64::consts::PI / (n as f64 + 1.0);
    Ok((1..=n)
        .map(|k| ratio.powf(k as f64 / 2.0) * (k as f64 * step).sin())
        .collect())
}

/// Normalized closed-form Toeplitz eigenvector.
pub fn toeplitz_eigvec(n: usize, h: usize, b: f64, c: f64) -> Result<StateVector> {
    StateVector::normalized_real(&toeplitz_eigvec_raw(n, h, b, c)?)
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// descending. Independent of the Sturm/bisection path; used to cross-check.
pub fn jacobi_eigenvalues(mat: &[f64], n: usize) -> Result<Vec<f64>> {
    if n == 0 || mat.len() != n * n {
        return Err(Error::DimensionMismatch(
            "matrix buffer does not match the stated order".into(),
        ));
    }
    let mut a = mat.to_vec();
    for i in 0..n {
        for j in 0..i {
            if (a[i * n + j] - a[j * n + i]).abs() > 1e-12 * a[i * n + j].abs().max(1.0) {
                return Err(Error::Domain("matrix is not symmetric".into()));
            }
        }
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if fro == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let stop = 1e-15 * fro;
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() <= stop {
            let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            vals.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
            return Ok(vals);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let cth = 1.0 / (t * t + 1.0).sqrt();
                let sth = t * cth;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = cth * akp - sth * akq;
                    a[k * n + q] = sth * akp + cth * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = cth * apk - sth * aqk;
                    a[q * n + k] = sth * apk + cth * aqk;
                }
            }
        }
    }
    Err(Error::NoConvergence(
        "Jacobi sweeps did not reduce the off-diagonal norm".into(),
    ))
}
