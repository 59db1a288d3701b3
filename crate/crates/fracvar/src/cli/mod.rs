//! Batch front end: reproduce the worked examples as CSV and solve
//! user-defined problems from a problem file.

mod problem;
mod reproduce;

pub use problem::{load_problem, LoadedProblem};
pub use reproduce::{run_example, ExampleId, Overrides};

use std::io::Write;

use crate::error::Result;
use crate::variational::ExtremalCandidate;

/// Output format for `solve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Pretty,
}

/// Render a float with 15 significant digits, decimal point, no locale.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (14 - mag).clamp(0, 17) as usize;
    let s = format!("{v:.decimals$}");
    // trim trailing zeros but keep at least one digit after the point
    if s.contains('.') {
        let t = s.trim_end_matches('0');
        let t = t.strip_suffix('.').unwrap_or(t);
        t.to_string()
    } else {
        s
    }
}

/// Solve the problem described by a problem file and print all candidates
/// sorted by functional value.
pub fn solve_from_file(
    path: &std::path::Path,
    format: OutputFormat,
    seed: Option<u64>,
    out: &mut dyn Write,
) -> Result<()> {
    let LoadedProblem { problem, mut solver } = load_problem(path)?;
    if let Some(seed) = seed {
        solver.seed = seed;
    }
    let candidates = crate::variational::solve_extremals(&problem, &solver)?;
    let grid = problem.grid();
    match format {
        OutputFormat::Csv => {
            let mut header = vec!["candidate".to_string()];
            header.extend(grid.points().map(|t| format!("y({})", fmt_sig(t))));
            header.push("J".to_string());
            header.push("el_residual_inf".to_string());
            header.push("legendre".to_string());
            writeln!(out, "{}", header.join(","))?;
            for (i, c) in candidates.iter().enumerate() {
                write_candidate_csv(out, i + 1, c)?;
            }
        }
        OutputFormat::Pretty => {
            for (i, c) in candidates.iter().enumerate() {
                writeln!(
                    out,
                    "candidate {} (J = {}, residual {:.2e}, Legendre {})",
                    i + 1,
                    fmt_sig(c.functional_value),
                    c.el_residual_inf,
                    if c.legendre_verified { "verified" } else { "not verified" },
                )?;
                for (j, t) in grid.points().enumerate() {
                    writeln!(out, "  y({}) = {}", fmt_sig(t), fmt_sig(c.y.value(j)))?;
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn write_candidate_csv(
    out: &mut dyn Write,
    index: usize,
    c: &ExtremalCandidate,
) -> Result<()> {
    let mut row = vec![index.to_string()];
    row.extend(c.y.values().iter().map(|v| fmt_sig(*v)));
    row.push(fmt_sig(c.functional_value));
    row.push(format!("{:.2e}", c.el_residual_inf));
    row.push(if c.legendre_verified { "verified" } else { "not_verified" }.to_string());
    writeln!(out, "{}", row.join(","))?;
    Ok(())
}
