//! Command-line front end: build the fuzzy-space coordinate operators, solve
//! their spectra, run the verification reports, and emit machine-readable
//! results.
//!
//! Exit status: 0 on success (and all verifications passing), 1 when a
//! verification check fails, 2 on usage errors. All output is
//! byte-deterministic for a fixed command line: floats are printed with 17
//! significant digits and records are newline-terminated. Files are written
//! atomically (temp file + rename). The environment variable
//! FUZZY_SPECTRA_THREADS (a positive integer) caps sweep parallelism.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuzzy_spectra::analysis::{self, CheckResult, VerificationReport};
use fuzzy_spectra::circle::build_x1;
use fuzzy_spectra::eigen;
use fuzzy_spectra::params::{k_floor, make_params, FuzzyParams, KRule, SpaceKind};
use fuzzy_spectra::report::{
    atomic_write, eigvec_csv, fmt_g17, report_json, report_text, spectrum_csv, sweep_csv,
};
use fuzzy_spectra::sphere::build_bm;
use fuzzy_spectra::spectrum::Spectrum;

#[derive(Parser)]
#[command(
    name = "fuzzy-spectra",
    about = "Spectra of fuzzy-circle and fuzzy-sphere coordinate operators",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Circle,
    Sphere,
    Madore,
}

impl Space {
    fn kind(self) -> SpaceKind {
        match self {
            Space::Circle => SpaceKind::Circle,
            Space::Sphere => SpaceKind::Sphere,
            Space::Madore => SpaceKind::Madore,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Space::Circle => "circle",
            Space::Sphere => "sphere",
            Space::Madore => "madore",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleName {
    Default,
    Floor,
    Theorem1c,
    Theorem1cProof,
    Lambda6,
}

impl RuleName {
    fn rule(self) -> KRule {
        match self {
            RuleName::Default => KRule::Default,
            RuleName::Floor => KRule::Floor,
            RuleName::Theorem1c => KRule::Theorem1cStatement,
            RuleName::Theorem1cProof => KRule::Theorem1cProof,
            RuleName::Lambda6 => KRule::Lambda6,
        }
    }
}

#[derive(clap::Args)]
struct Stiffness {
    /// Explicit confining stiffness k (must be at least Lambda^2(Lambda+1)^2)
    #[arg(long, conflicts_with = "k_rule")]
    k: Option<f64>,
    /// Named rule assigning k to each Lambda
    #[arg(long, value_enum, default_value = "default")]
    k_rule: RuleName,
}

impl Stiffness {
    fn rule(&self) -> KRule {
        match self.k {
            Some(v) => KRule::Explicit(v),
            None => self.k_rule.rule(),
        }
    }

    /// Parameters for one fixed cutoff; explicit k below the floor is a
    /// usage error rather than a silent clamp.
    fn params(&self, lambda: u32, space: Space) -> Result<FuzzyParams, CliError> {
        if space == Space::Madore {
            if self.k.is_some() || self.k_rule != RuleName::Default {
                return Err(CliError::Usage(
                    "the rescaled angular-momentum sphere has no stiffness parameter".into(),
                ));
            }
            return Ok(make_params(lambda, None, SpaceKind::Madore)?);
        }
        if let Some(v) = self.k {
            if v.is_nan() || v < k_floor(lambda) {
                return Err(CliError::Usage(format!(
                    "k = {v} is below the floor {} at lambda = {lambda}",
                    k_floor(lambda)
                )));
            }
        }
        Ok(self.rule().params(lambda, space.kind())?)
    }
}

#[derive(clap::Args)]
struct Output {
    /// Write to this path (atomically) instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format (data commands default to csv; verify and
    /// algebra-check default to a plain-text report)
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of a coordinate operator, descending
    Spectrum {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        lambda: u32,
        /// Magnetic index selecting the sphere block B_m
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Bisection half-width for eigenvalues
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
    /// Components of the h-th eigenvector (h = 1 is the top eigenvalue)
    Eigvec {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        lambda: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// 1-based eigenvalue index in descending order
        #[arg(long, default_value_t = 1)]
        h: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
    /// Run verification reports; exits 1 if any check fails
    Verify {
        /// Run the full catalogue of reports
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        /// Run a single named report (see --theorem help for names)
        #[arg(long, value_name = "NAME")]
        theorem: Option<String>,
        /// Largest cutoff the sweeps reach
        #[arg(long)]
        lambda_max: Option<u32>,
        /// Cutoff for the focused single-matrix checks (e.g. parity)
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long, value_enum)]
        space: Option<Space>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Pass tolerance for the focused single-matrix checks
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
    /// Top-eigenvalue sweep rows (lambda, alpha1, bounds, pass)
    Sweep {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        lambda_max: u32,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
    /// Most localized state: top eigenvalue, dispersion, L3 expectation
    Localize {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        lambda: u32,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
    /// Contrast the fuzzy sphere with the rescaled angular-momentum sphere
    MadoreCompare {
        #[arg(long)]
        lambda: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Operator-algebra residuals of one space at one cutoff
    AlgebraCheck {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        lambda: u32,
        /// Largest residual accepted as a pass
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        stiffness: Stiffness,
        #[command(flatten)]
        out: Output,
    },
}

enum CliError {
    Usage(String),
    Failed(fuzzy_spectra::Error),
    Io(std::io::Error),
}

impl From<fuzzy_spectra::Error> for CliError {
    fn from(e: fuzzy_spectra::Error) -> Self {
        match e {
            fuzzy_spectra::Error::InvalidParams(_) | fuzzy_spectra::Error::WrongKind { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failed(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    if let Err(msg) = apply_thread_cap() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn apply_thread_cap() -> Result<(), String> {
    match std::env::var("FUZZY_SPECTRA_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(format!("FUZZY_SPECTRA_THREADS is not valid unicode: {e}")),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| format!("FUZZY_SPECTRA_THREADS must be a positive integer, got {raw:?}"))?;
            if n == 0 {
                return Err("FUZZY_SPECTRA_THREADS must be a positive integer, got 0".into());
            }
            fuzzy_spectra::configure_threads(n).map_err(|e| e.to_string())
        }
    }
}

/// Runs the command; `Ok(false)` means a verification check failed (exit 1).
fn run(cmd: Command) -> Result<bool, CliError> {
    match cmd {
        Command::Spectrum {
            space,
            lambda,
            m,
            tol,
            stiffness,
            out,
        } => {
            let (s, k) = solve_spectrum(space, lambda, m, tol, &stiffness)?;
            let content = match out.format.unwrap_or(Format::Csv) {
                Format::Csv => spectrum_csv(&s),
                Format::Json => spectrum_json(space, lambda, k, &s),
            };
            emit(&out, &content)?;
            Ok(true)
        }
        Command::Eigvec {
            space,
            lambda,
            m,
            h,
            tol,
            stiffness,
            out,
        } => {
            let (value, components, k) = solve_eigvec(space, lambda, m, h, tol, &stiffness)?;
            let content = match out.format.unwrap_or(Format::Csv) {
                Format::Csv => eigvec_csv(&components),
                Format::Json => eigvec_json(space, lambda, k, h, value, &components),
            };
            emit(&out, &content)?;
            Ok(true)
        }
        Command::Verify {
            all,
            theorem,
            lambda_max,
            lambda,
            space,
            m,
            tol,
            stiffness,
            out,
        } => {
            let reports = if all {
                analysis::default_verify_reports(lambda_max.unwrap_or(200))?
            } else {
                let name = theorem.as_deref().ok_or_else(|| {
                    CliError::Usage("pass --all or --theorem NAME".into())
                })?;
                vec![run_theorem(
                    name, lambda_max, lambda, space, m, tol, &stiffness,
                )?]
            };
            let passed = reports.iter().all(|r| r.passed());
            let content = match out.format {
                None => reports_text(&reports),
                Some(Format::Csv) => reports_csv(&reports),
                Some(Format::Json) => reports_json(&reports),
            };
            emit(&out, &content)?;
            Ok(passed)
        }
        Command::Sweep {
            space,
            lambda_max,
            stiffness,
            out,
        } => {
            let rule = stiffness.rule();
            let report = match space {
                Space::Circle => analysis::top_eig_monotonicity_circle(lambda_max, &rule)?,
                Space::Sphere => analysis::top_eig_monotonicity_sphere(lambda_max, &rule)?,
                Space::Madore => {
                    return Err(CliError::Usage(
                        "sweep supports --space circle or sphere".into(),
                    ))
                }
            };
            let content = match out.format.unwrap_or(Format::Csv) {
                Format::Csv => sweep_csv(&report.rows),
                Format::Json => sweep_json(space, &report),
            };
            emit(&out, &content)?;
            Ok(true)
        }
        Command::Localize {
            space,
            lambda,
            stiffness,
            out,
        } => {
            let p = stiffness.params(lambda, space)?;
            let loc = analysis::most_localized(&p)?;
            let lf = lambda as f64;
            let bound = match space {
                Space::Circle => (std::f64::consts::PI.powi(2) / 4.0) / (lf * lf),
                Space::Sphere => (std::f64::consts::PI.powi(2) - 1.0) / (lf * lf),
                Space::Madore => 1.0 / (lf + 1.0),
            };
            let fields = [
                ("top_eigenvalue", loc.top_eigenvalue),
                ("dispersion", loc.dispersion),
                ("dispersion_bound", bound),
                ("l_expectation", loc.l_expectation),
            ];
            let content = match out.format.unwrap_or(Format::Json) {
                Format::Csv => fields_csv(&fields),
                Format::Json => fields_json("localize", space.name(), lambda, &fields),
            };
            emit(&out, &content)?;
            Ok(true)
        }
        Command::MadoreCompare { lambda, out } => {
            let fuzzy =
                analysis::most_localized(&make_params(lambda, None, SpaceKind::Sphere)?)?;
            let madore =
                analysis::most_localized(&make_params(lambda, None, SpaceKind::Madore)?)?;
            let fields = [
                ("top_eig_fuzzy", fuzzy.top_eigenvalue),
                ("top_eig_madore", madore.top_eigenvalue),
                ("L3_fuzzy", fuzzy.l_expectation),
                ("L3_madore", madore.l_expectation),
            ];
            let content = match out.format.unwrap_or(Format::Json) {
                Format::Csv => fields_csv(&fields),
                Format::Json => fields_json("madore-compare", "sphere", lambda, &fields),
            };
            emit(&out, &content)?;
            Ok(true)
        }
        Command::AlgebraCheck {
            space,
            lambda,
            tol,
            stiffness,
            out,
        } => {
            let p = stiffness.params(lambda, space)?;
            let residuals = match space {
                Space::Circle => fuzzy_spectra::circle::circle_algebra_residuals(&p)?,
                Space::Sphere => fuzzy_spectra::sphere::sphere_algebra_residuals(&p)?,
                Space::Madore => {
                    return Err(CliError::Usage(
                        "algebra-check supports --space circle or sphere".into(),
                    ))
                }
            };
            let passed = residuals.values().all(|&r| r <= tol);
            let content = match out.format {
                None => {
                    let mut s = String::new();
                    for (key, val) in &residuals {
                        let verdict = if *val <= tol { "PASS" } else { "FAIL" };
                        let _ = writeln!(s, "{verdict} {key} residual={}", fmt_g17(*val));
                    }
                    let _ = writeln!(s, "# result: {}", if passed { "PASS" } else { "FAIL" });
                    s
                }
                Some(Format::Csv) => {
                    let mut s = String::from("identity,residual\n");
                    for (key, val) in &residuals {
                        let _ = writeln!(s, "{key},{}", fmt_g17(*val));
                    }
                    s
                }
                Some(Format::Json) => {
                    let mut s = format!(
                        "{{\"command\":\"algebra-check\",\"space\":\"{}\",\"lambda\":{lambda},\"tol\":{},\"identities\":[",
                        space.name(),
                        fmt_g17(tol)
                    );
                    for (i, (key, val)) in residuals.iter().enumerate() {
                        if i > 0 {
                            s.push(',');
                        }
                        let _ = write!(
                            s,
                            "{{\"identity\":\"{key}\",\"residual\":{}}}",
                            fmt_g17(*val)
                        );
                    }
                    let _ = writeln!(s, "],\"pass\":{passed}}}");
                    s
                }
            };
            emit(&out, &content)?;
            Ok(passed)
        }
    }
}

fn require_sphere_for_m(space: Space, m: Option<i64>) -> Result<i64, CliError> {
    match (space, m) {
        (Space::Sphere, Some(m)) => Ok(m),
        (Space::Sphere, None) => Ok(0),
        (_, Some(_)) => Err(CliError::Usage(
            "--m selects a sphere block; it is only valid with --space sphere".into(),
        )),
        (_, None) => Ok(0),
    }
}

fn solve_spectrum(
    space: Space,
    lambda: u32,
    m: Option<i64>,
    tol: f64,
    stiffness: &Stiffness,
) -> Result<(Spectrum, Option<f64>), CliError> {
    let m = require_sphere_for_m(space, m)?;
    match space {
        Space::Circle => {
            let p = stiffness.params(lambda, space)?;
            Ok((eigen::eigen_all(&build_x1(&p)?, tol)?, Some(p.k())))
        }
        Space::Sphere => {
            let p = stiffness.params(lambda, space)?;
            Ok((eigen::eigen_all(&build_bm(&p, m)?, tol)?, Some(p.k())))
        }
        Space::Madore => {
            stiffness.params(lambda, space)?;
            Ok((analysis::madore_spectrum(lambda)?, None))
        }
    }
}

fn solve_eigvec(
    space: Space,
    lambda: u32,
    m: Option<i64>,
    h: usize,
    tol: f64,
    stiffness: &Stiffness,
) -> Result<(f64, Vec<f64>, Option<f64>), CliError> {
    let (s, k) = solve_spectrum(space, lambda, m, tol, stiffness)?;
    if h < 1 || h > s.len() {
        return Err(CliError::Usage(format!(
            "--h {h} outside 1..={}",
            s.len()
        )));
    }
    let value = s.values()[h - 1];
    let components = match space {
        Space::Madore => {
            let mut v = vec![0.0; s.len()];
            v[h - 1] = 1.0;
            v
        }
        Space::Circle => {
            let p = stiffness.params(lambda, space)?;
            let pair = eigen::eigenvector_of(&build_x1(&p)?, value)?;
            pair.vector.coeffs().iter().map(|c| c.re).collect()
        }
        Space::Sphere => {
            let p = stiffness.params(lambda, space)?;
            let mm = require_sphere_for_m(space, m)?;
            let pair = eigen::eigenvector_of(&build_bm(&p, mm)?, value)?;
            pair.vector.coeffs().iter().map(|c| c.re).collect()
        }
    };
    Ok((value, components, k))
}

fn run_theorem(
    name: &str,
    lambda_max: Option<u32>,
    lambda: Option<u32>,
    space: Option<Space>,
    m: Option<i64>,
    tol: f64,
    stiffness: &Stiffness,
) -> Result<VerificationReport, CliError> {
    let rule = stiffness.rule();
    let lmax = |d: u32| lambda_max.unwrap_or(d);
    let report = match name {
        "parity" => {
            let space = space.ok_or_else(|| {
                CliError::Usage("--theorem parity needs --space".into())
            })?;
            let lambda = lambda.ok_or_else(|| {
                CliError::Usage("--theorem parity needs --lambda".into())
            })?;
            let (s, _) = solve_spectrum(space, lambda, m, 1e-13, stiffness)?;
            let v = s.values();
            let defect = (0..v.len())
                .map(|i| (v[i] + v[v.len() - 1 - i]).abs())
                .fold(0.0f64, f64::max);
            VerificationReport {
                theorem: "parity".into(),
                lambda_min: lambda,
                lambda_max: lambda,
                k_rule: rule.label(),
                tolerance: tol,
                checks: vec![CheckResult {
                    name: format!("{}-parity", space.name()),
                    pass: defect <= tol,
                    measured: defect,
                    bound: tol,
                }],
                rows: vec![],
            }
        }
        "closed-forms" => analysis::closed_form_report()?,
        "toeplitz-oracle" => {
            let orders: Vec<usize> = match lambda_max {
                Some(n) => (1..=n as usize).collect(),
                None => (1..=200).chain([1001, 4001]).collect(),
            };
            analysis::toeplitz_oracle_report(&orders, 1e-11)?
        }
        "parity-simplicity" => {
            let top = lmax(200);
            let mut grid: Vec<u32> = (1..=top.min(12)).collect();
            for l in [20, 50, 100, 200, 500, 1000] {
                if l <= top {
                    grid.push(l);
                }
            }
            if !grid.contains(&top) {
                grid.push(top);
            }
            analysis::parity_simplicity_report(&grid)?
        }
        "circle-monotonicity" => analysis::top_eig_monotonicity_circle(lmax(500), &rule)?,
        "sphere-monotonicity" => analysis::top_eig_monotonicity_sphere(lmax(200), &rule)?,
        "perturbation" => analysis::perturbation_report(lmax(200), &rule)?,
        "circle-algebra" => analysis::algebra_circle_report(lmax(12))?,
        "sphere-algebra" => analysis::algebra_sphere_report(lmax(8))?,
        "blocks" => {
            let top = lmax(60);
            analysis::block_structure_report(top.min(8), top)?
        }
        "localization" => analysis::localization_report(lmax(200))?,
        "density" => {
            let top = lmax(800);
            let grid: Vec<u32> = [50u32, 100, 200, 400, 800]
                .iter()
                .copied()
                .filter(|&l| l <= top)
                .collect();
            if grid.len() < 2 {
                return Err(CliError::Usage(
                    "--theorem density needs --lambda-max at least 100".into(),
                ));
            }
            analysis::density_report(&grid)?
        }
        "dispersion-invariance" => analysis::dispersion_invariance_report()?,
        "profile" => {
            let top = lmax(40);
            let grid: Vec<u32> = [5u32, 10, 20, 40]
                .iter()
                .copied()
                .filter(|&l| l <= top)
                .collect();
            analysis::profile_report(&grid)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown theorem {other:?}; valid names: parity, closed-forms, \
                 toeplitz-oracle, parity-simplicity, circle-monotonicity, \
                 sphere-monotonicity, perturbation, circle-algebra, sphere-algebra, \
                 blocks, localization, density, dispersion-invariance, profile"
            )))
        }
    };
    Ok(report)
}

fn emit(out: &Output, content: &str) -> Result<(), CliError> {
    match &out.output {
        Some(path) => Ok(atomic_write(path, content)?),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn opt_k_json(k: Option<f64>) -> String {
    match k {
        Some(v) => fmt_g17(v),
        None => "null".into(),
    }
}

fn spectrum_json(space: Space, lambda: u32, k: Option<f64>, s: &Spectrum) -> String {
    let mut out = format!(
        "{{\"command\":\"spectrum\",\"space\":\"{}\",\"lambda\":{lambda},\"k\":{},\"rows\":[",
        space.name(),
        opt_k_json(k)
    );
    for (i, v) in s.values().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"h\":{},\"eigenvalue\":{}}}", i + 1, fmt_g17(*v));
    }
    out.push_str("]}\n");
    out
}

fn eigvec_json(
    space: Space,
    lambda: u32,
    k: Option<f64>,
    h: usize,
    value: f64,
    components: &[f64],
) -> String {
    let mut out = format!(
        "{{\"command\":\"eigvec\",\"space\":\"{}\",\"lambda\":{lambda},\"k\":{},\"h\":{h},\"eigenvalue\":{},\"rows\":[",
        space.name(),
        opt_k_json(k),
        fmt_g17(value)
    );
    for (i, c) in components.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"i\":{i},\"component\":{}}}", fmt_g17(*c));
    }
    out.push_str("]}\n");
    out
}

fn sweep_json(space: Space, report: &VerificationReport) -> String {
    let mut out = format!(
        "{{\"command\":\"sweep\",\"space\":\"{}\",\"k_rule\":\"{}\",\"rows\":[",
        space.name(),
        report.k_rule
    );
    for (i, r) in report.rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"lambda\":{},\"alpha1\":{},\"lower_bound\":{},\"upper_bound\":{},\"pass\":{}}}",
            r.lambda,
            fmt_g17(r.alpha1),
            fmt_g17(r.lower_bound),
            fmt_g17(r.upper_bound),
            r.pass
        );
    }
    out.push_str("]}\n");
    out
}

fn fields_csv(fields: &[(&str, f64)]) -> String {
    let mut out = String::from("field,value\n");
    for (name, v) in fields {
        let _ = writeln!(out, "{name},{}", fmt_g17(*v));
    }
    out
}

fn fields_json(command: &str, space: &str, lambda: u32, fields: &[(&str, f64)]) -> String {
    let mut out = format!("{{\"command\":\"{command}\",\"space\":\"{space}\",\"lambda\":{lambda}");
    for (name, v) in fields {
        let _ = write!(out, ",\"{name}\":{}", fmt_g17(*v));
    }
    out.push_str("}\n");
    out
}

fn reports_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&report_text(r));
    }
    out
}

fn reports_json(reports: &[VerificationReport]) -> String {
    let mut out = String::from("[");
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(report_json(r).trim_end());
    }
    out.push_str("]\n");
    out
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("theorem,check,pass,measured,bound\n");
    for r in reports {
        for c in &r.checks {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.theorem,
                c.name,
                c.pass,
                fmt_g17(c.measured),
                fmt_g17(c.bound)
            );
        }
    }
    out
}
