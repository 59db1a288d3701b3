//! Reproduction of the worked variational examples as CSV tables plus
//! (t, y) plot-data series.

use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::timescale::Grid;
use crate::variational::{
    reference_solution, solve_extremals, Boundary, ExprLagrangian, ExtremalCandidate,
    ReferenceSolution, SolverConfig, VariationalProblem,
};

use super::{fmt_sig, write_candidate_csv};

/// The worked examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    /// `sum (left diff y)^2` on [0, b], y(0)=0, y(b)=1, alpha sweep.
    Z1,
    /// `sum gamma1 v^2 + gamma2 w^2` on [0, 2], beta = alpha.
    Z2,
    /// `sum (1/2) v^2 - y^sigma` on [0, 2], zero boundary values.
    Z3,
    /// h-grid `integral (1/2) v^2 - y^sigma` on [0, 1], zero boundary, h sweep.
    Hz1,
    /// h-grid `integral (1/2) v^2` on [0, 1], y(1)=1, alpha = 3/4, h sweep,
    /// with the continuous fractional reference for comparison.
    Hz2,
    /// `integral v^3 + theta w^2` with alpha=0.8, beta=0.5, h=0.25, theta=1:
    /// the eight-candidate screening run.
    Hz3a,
    /// Same functional with alpha=0.3, h=0.1, b=0.5, theta=0: the
    /// sixteen-candidate screening run.
    Hz3b,
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "z1" => ExampleId::Z1,
            "z2" => ExampleId::Z2,
            "z3" => ExampleId::Z3,
            "hz1" => ExampleId::Hz1,
            "hz2" => ExampleId::Hz2,
            "hz3a" => ExampleId::Hz3a,
            "hz3b" => ExampleId::Hz3b,
            other => {
                return Err(Error::Validation {
                    path: "example".into(),
                    message: format!(
                        "unknown example '{other}' (expected z1, z2, z3, hz1, hz2, hz3a, hz3b)"
                    ),
                })
            }
        })
    }
}

/// Optional parameter overrides for [`run_example`].
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub h: Option<f64>,
    pub b: Option<f64>,
    pub theta: Option<f64>,
    pub gamma1: Option<f64>,
    pub gamma2: Option<f64>,
    /// Table CSV goes here instead of stdout; plot series go to sibling
    /// files `<stem>_series_*.csv`.
    pub out: Option<PathBuf>,
}

struct SeriesSink {
    base: Option<PathBuf>,
}

impl SeriesSink {
    fn write(&self, tag: &str, points: &[(f64, f64)]) -> Result<()> {
        let Some(base) = &self.base else { return Ok(()) };
        let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("series");
        let name = format!("{stem}_series_{tag}.csv");
        let path = base.with_file_name(name);
        let mut f = std::fs::File::create(path)?;
        writeln!(f, "t,y")?;
        for (t, y) in points {
            writeln!(f, "{},{}", fmt_sig(*t), fmt_sig(*y))?;
        }
        Ok(())
    }
}

fn quick_solver() -> SolverConfig {
    // the quadratic examples have a unique extremal; a handful of starts
    // is enough and keeps the sweeps fast
    SolverConfig { n_starts: 8, radius: 2.0, ..SolverConfig::default() }
}

fn unique_extremal(
    problem: &VariationalProblem<ExprLagrangian>,
    cfg: &SolverConfig,
) -> Result<ExtremalCandidate> {
    let mut found = solve_extremals(problem, cfg)?;
    Ok(found.swap_remove(0))
}

fn series_of(c: &ExtremalCandidate) -> Vec<(f64, f64)> {
    c.y.grid().points().zip(c.y.values().iter().copied()).collect()
}

fn float_tag(v: f64) -> String {
    fmt_sig(v).replace('.', "p").replace('-', "m")
}

fn check_range(name: &str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if !(value >= lo && value <= hi) {
        return Err(Error::Validation {
            path: name.to_string(),
            message: format!("must lie in [{lo}, {hi}], got {value}"),
        });
    }
    Ok(())
}

/// Run one worked example, writing its CSV table to `out` (or the file named
/// in `overrides.out`) and plot series next to that file.
pub fn run_example(id: ExampleId, overrides: &Overrides, out: &mut dyn Write) -> Result<()> {
    if let Some(beta) = overrides.beta {
        check_range("beta", beta, 1e-6, 1.0)?;
    }
    let mut file_out: Box<dyn Write> = match &overrides.out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(NullForward(out)),
    };
    let sink = SeriesSink { base: overrides.out.clone() };
    let w: &mut dyn Write = &mut file_out;
    match id {
        ExampleId::Z1 => z1(overrides, w, &sink),
        ExampleId::Z2 => z2(overrides, w, &sink),
        ExampleId::Z3 => z3(overrides, w, &sink),
        ExampleId::Hz1 => hz1(overrides, w, &sink),
        ExampleId::Hz2 => hz2(overrides, w, &sink),
        ExampleId::Hz3a => hz3(overrides, w, 0.8, 0.5, 0.25, 1.0, 1.0),
        ExampleId::Hz3b => hz3(overrides, w, 0.3, 0.5, 0.1, 0.5, 0.0),
    }
}

// forwards to the borrowed writer; lets the match above own a single type
struct NullForward<'a>(&'a mut dyn Write);

impl Write for NullForward<'_> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.0.write(buf)
    }
    fn flush(&mut self) -> std::io::Result<()> {
        self.0.flush()
    }
}

fn alphas_from(overrides: &Overrides) -> Vec<f64> {
    match overrides.alpha {
        Some(a) => vec![a],
        None => vec![0.25, 0.5, 0.75, 1.0],
    }
}

fn z1(overrides: &Overrides, out: &mut dyn Write, sink: &SeriesSink) -> Result<()> {
    let b = overrides.b.unwrap_or(4.0);
    check_range("b", b, 2.0, 12.0)?;
    let grid = Grid::from_interval(0.0, b, 1.0)
        .map_err(|e| Error::Validation { path: "b".into(), message: e.to_string() })?;
    let n = grid.len();
    let mut header: Vec<String> = vec!["alpha".into()];
    header.extend((1..n - 1).map(|i| format!("y({i})")));
    header.push("J".into());
    writeln!(out, "{}", header.join(","))?;
    for alpha in alphas_from(overrides) {
        check_range("alpha", alpha, 1e-6, 1.0)?;
        let lag = ExprLagrangian::parse("v^2", HashMap::new())?;
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            overrides.beta.unwrap_or(alpha),
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )?;
        let c = unique_extremal(&p, &quick_solver())?;
        let mut row = vec![fmt_sig(alpha)];
        row.extend(c.y.values()[1..n - 1].iter().map(|v| fmt_sig(*v)));
        row.push(fmt_sig(c.functional_value));
        writeln!(out, "{}", row.join(","))?;
        sink.write(&format!("alpha_{}", float_tag(alpha)), &series_of(&c))?;
    }
    Ok(())
}

fn z2(overrides: &Overrides, out: &mut dyn Write, sink: &SeriesSink) -> Result<()> {
    let g1 = overrides.gamma1.unwrap_or(1.0);
    let g2 = overrides.gamma2.unwrap_or(1.0);
    let grid = Grid::new(0.0, 1.0, 3)?;
    writeln!(out, "alpha,y(1),J")?;
    for alpha in alphas_from(overrides) {
        check_range("alpha", alpha, 1e-6, 1.0)?;
        let beta = overrides.beta.unwrap_or(alpha);
        check_range("beta", beta, 1e-6, 1.0)?;
        let params: HashMap<String, f64> =
            [("gamma1".to_string(), g1), ("gamma2".to_string(), g2)].into();
        let lag = ExprLagrangian::parse("gamma1*v^2+gamma2*w^2", params)?;
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            beta,
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )?;
        let c = unique_extremal(&p, &quick_solver())?;
        writeln!(
            out,
            "{},{},{}",
            fmt_sig(alpha),
            fmt_sig(c.y.value(1)),
            fmt_sig(c.functional_value)
        )?;
        sink.write(&format!("alpha_{}", float_tag(alpha)), &series_of(&c))?;
    }
    Ok(())
}

fn z3(overrides: &Overrides, out: &mut dyn Write, sink: &SeriesSink) -> Result<()> {
    let grid = Grid::new(0.0, 1.0, 3)?;
    writeln!(out, "alpha,y(1),J")?;
    for alpha in alphas_from(overrides) {
        check_range("alpha", alpha, 1e-6, 1.0)?;
        let lag = ExprLagrangian::parse("(1/2)*v^2-u", HashMap::new())?;
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            overrides.beta.unwrap_or(alpha),
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )?;
        let c = unique_extremal(&p, &quick_solver())?;
        writeln!(
            out,
            "{},{},{}",
            fmt_sig(alpha),
            fmt_sig(c.y.value(1)),
            fmt_sig(c.functional_value)
        )?;
        sink.write(&format!("alpha_{}", float_tag(alpha)), &series_of(&c))?;
    }
    Ok(())
}

fn hs_from(overrides: &Overrides, default: &[f64]) -> Vec<f64> {
    match overrides.h {
        Some(h) => vec![h],
        None => default.to_vec(),
    }
}

fn hz1(overrides: &Overrides, out: &mut dyn Write, sink: &SeriesSink) -> Result<()> {
    let alpha = overrides.alpha.unwrap_or(1.0);
    check_range("alpha", alpha, 1e-6, 1.0)?;
    writeln!(out, "h,alpha,J")?;
    for h in hs_from(overrides, &[0.5, 0.25, 0.125, 0.0625]) {
        let grid = Grid::from_interval(0.0, 1.0, h)
            .map_err(|e| Error::Validation { path: "h".into(), message: e.to_string() })?;
        let lag = ExprLagrangian::parse("(1/2)*v^2-u", HashMap::new())?;
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            overrides.beta.unwrap_or(alpha),
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )?;
        let c = unique_extremal(&p, &quick_solver())?;
        writeln!(out, "{},{},{}", fmt_sig(h), fmt_sig(alpha), fmt_sig(c.functional_value))?;
        sink.write(&format!("h_{}", float_tag(h)), &series_of(&c))?;
    }
    Ok(())
}

fn hz2(overrides: &Overrides, out: &mut dyn Write, sink: &SeriesSink) -> Result<()> {
    let alpha = overrides.alpha.unwrap_or(0.75);
    check_range("alpha", alpha, 1e-6, 1.0)?;
    writeln!(out, "h,J,sup_dist_to_continuous,dist_at_half")?;
    for h in hs_from(overrides, &[0.5, 0.125, 0.0625, 1.0 / 30.0]) {
        let grid = Grid::from_interval(0.0, 1.0, h)
            .map_err(|e| Error::Validation { path: "h".into(), message: e.to_string() })?;
        let lag = ExprLagrangian::parse("(1/2)*v^2", HashMap::new())?;
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            overrides.beta.unwrap_or(alpha),
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )?;
        let c = unique_extremal(&p, &quick_solver())?;
        let mut sup: f64 = 0.0;
        for (i, t) in grid.points().enumerate().skip(1) {
            let r = reference_solution(ReferenceSolution::Hz2Continuous { t })?;
            sup = sup.max((c.y.value(i) - r).abs());
        }
        let half = grid
            .index_of(0.5)
            .map(|i| {
                reference_solution(ReferenceSolution::Hz2Continuous { t: 0.5 })
                    .map(|r| (c.y.value(i) - r).abs())
            })
            .transpose()?;
        writeln!(
            out,
            "{},{},{},{}",
            fmt_sig(h),
            fmt_sig(c.functional_value),
            fmt_sig(sup),
            half.map(fmt_sig).unwrap_or_default()
        )?;
        sink.write(&format!("h_{}", float_tag(h)), &series_of(&c))?;
    }
    Ok(())
}

fn hz3(
    overrides: &Overrides,
    out: &mut dyn Write,
    alpha0: f64,
    beta0: f64,
    h0: f64,
    b0: f64,
    theta0: f64,
) -> Result<()> {
    let alpha = overrides.alpha.unwrap_or(alpha0);
    let beta = overrides.beta.unwrap_or(beta0);
    let h = overrides.h.unwrap_or(h0);
    let b = overrides.b.unwrap_or(b0);
    let theta = overrides.theta.unwrap_or(theta0);
    check_range("alpha", alpha, 1e-6, 1.0)?;
    check_range("beta", beta, 1e-6, 1.0)?;
    let grid = Grid::from_interval(0.0, b, h)
        .map_err(|e| Error::Validation { path: "h".into(), message: e.to_string() })?;
    let params: HashMap<String, f64> = [("theta".to_string(), theta)].into();
    let lag = ExprLagrangian::parse("v^3+theta*w^2", params)?;
    let p = VariationalProblem::new(
        grid,
        lag,
        alpha,
        beta,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )?;
    let candidates = solve_extremals(&p, &SolverConfig::default())?;
    let mut header = vec!["candidate".to_string()];
    header.extend(grid.points().map(|t| format!("y({})", fmt_sig(t))));
    header.push("J".into());
    header.push("el_residual_inf".into());
    header.push("legendre".into());
    writeln!(out, "{}", header.join(","))?;
    for (i, c) in candidates.iter().enumerate() {
        write_candidate_csv(out, i + 1, c)?;
    }
    Ok(())
}
