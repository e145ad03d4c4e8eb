//! Deterministic text emission for spectra and verification reports.
//!
//! Every float is printed with 17 significant digits (`d.16e` scientific
//! form), which round-trips f64 exactly, uses `.` as the decimal separator,
//! and is independent of locale and thread count. Nothing here embeds
//! timestamps or other run-varying data, so repeated runs with the same
//! inputs produce byte-identical files.

use std::io;
use std::path::Path;

use crate::analysis::{SweepRow, VerificationReport};
use crate::spectrum::Spectrum;

/// 17-significant-digit scientific form, enough to round-trip any f64.
pub fn fmt_g17(x: f64) -> String {
    format!("{:.16e}", x)
}

fn json_f64(x: f64) -> String {
    if x.is_finite() {
        fmt_g17(x)
    } else {
        "null".to_string()
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// CSV with header `h,eigenvalue`; h counts from 1 for the largest eigenvalue.
pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("h,eigenvalue\n");
    for (i, v) in s.values().iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        out.push(',');
        out.push_str(&fmt_g17(*v));
        out.push('\n');
    }
    out
}

/// CSV with header `i,component`; i counts from 1 for the first basis vector.
pub fn eigvec_csv(components: &[f64]) -> String {
    let mut out = String::from("i,component\n");
    for (i, v) in components.iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        out.push(',');
        out.push_str(&fmt_g17(*v));
        out.push('\n');
    }
    out
}

/// CSV with header `lambda,alpha1,lower_bound,upper_bound,pass`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("lambda,alpha1,lower_bound,upper_bound,pass\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.lambda,
            fmt_g17(r.alpha1),
            fmt_g17(r.lower_bound),
            fmt_g17(r.upper_bound),
            r.pass
        ));
    }
    out
}

/// Plain-text block: header lines, one line per check, then a result line.
/// Informational checks (infinite bound) print as INFO and never fail.
pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# theorem: {}\n", r.theorem));
    out.push_str(&format!("# lambda: {}..={}\n", r.lambda_min, r.lambda_max));
    out.push_str(&format!("# k_rule: {}\n", r.k_rule));
    out.push_str(&format!("# tolerance: {}\n", fmt_g17(r.tolerance)));
    for c in &r.checks {
        if c.bound.is_finite() {
            out.push_str(&format!(
                "{} {} measured={} bound={}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                fmt_g17(c.measured),
                fmt_g17(c.bound)
            ));
        } else {
            out.push_str(&format!("INFO {} measured={}\n", c.name, fmt_g17(c.measured)));
        }
    }
    out.push_str(&format!(
        "# result: {}\n",
        if r.passed() { "PASS" } else { "FAIL" }
    ));
    out
}

/// JSON object mirroring the report fields; floats keep 17 significant
/// digits, informational bounds serialize as null.
pub fn report_json(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push('{');
    out.push_str(&format!("\"theorem\":\"{}\",", json_escape(&r.theorem)));
    out.push_str(&format!("\"lambda_min\":{},", r.lambda_min));
    out.push_str(&format!("\"lambda_max\":{},", r.lambda_max));
    out.push_str(&format!("\"k_rule\":\"{}\",", json_escape(&r.k_rule)));
    out.push_str(&format!("\"tolerance\":{},", fmt_g17(r.tolerance)));
    out.push_str("\"checks\":[");
    for (i, c) in r.checks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"name\":\"{}\",\"pass\":{},\"measured\":{},\"bound\":{}}}",
            json_escape(&c.name),
            c.pass,
            json_f64(c.measured),
            json_f64(c.bound)
        ));
    }
    out.push_str("],\"rows\":[");
    for (i, row) in r.rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"lambda\":{},\"alpha1\":{},\"lower_bound\":{},\"upper_bound\":{},\"pass\":{}}}",
            row.lambda,
            fmt_g17(row.alpha1),
            fmt_g17(row.lower_bound),
            fmt_g17(row.upper_bound),
            row.pass
        ));
    }
    out.push_str(&format!("],\"pass\":{}}}", r.passed()));
    out.push('\n');
    out
}

/// Writes through a temporary file in the same directory, then renames it
/// over the target, so readers never observe a partially written file.
pub fn atomic_write(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    let mut tmp_name = file_name.to_os_string();
    tmp_name.push(".tmp");
    let tmp_path = match dir {
        Some(d) => d.join(&tmp_name),
        None => Path::new(&tmp_name).to_path_buf(),
    };
    std::fs::write(&tmp_path, contents)?;
    std::fs::rename(&tmp_path, path)
}
