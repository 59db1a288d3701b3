//! Problem-file loading: a TOML document describing a variational problem.
//!
//! ```toml
//! lagrangian = "v^3+theta*w^2"
//! alpha = 0.8
//! beta = 0.5
//!
//! [params]
//! theta = 1.0
//!
//! [grid]          # a plus any two of h / b / n_points
//! a = 0.0
//! h = 0.25
//! b = 1.0
//!
//! [bc]            # a number fixes the endpoint, "free" frees it
//! left = 0.0
//! right = 1.0
//!
//! [solver]        # optional overrides
//! n_starts = 2000
//! radius = 5.0
//! seed = 42
//! newton_tol = 1e-10
//! newton_max_iter = 50
//! dedup_tol = 1e-6
//! ```

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::timescale::Grid;
use crate::variational::{Boundary, ExprLagrangian, SolverConfig, VariationalProblem};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    lagrangian: String,
    alpha: f64,
    beta: f64,
    #[serde(default)]
    params: HashMap<String, f64>,
    grid: RawGrid,
    bc: RawBc,
    #[serde(default)]
    solver: RawSolver,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    a: f64,
    h: Option<f64>,
    b: Option<f64>,
    n_points: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBc {
    left: RawBoundary,
    right: RawBoundary,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawBoundary {
    Fixed(f64),
    Named(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolver {
    n_starts: Option<usize>,
    radius: Option<f64>,
    seed: Option<u64>,
    newton_tol: Option<f64>,
    newton_max_iter: Option<usize>,
    dedup_tol: Option<f64>,
}

/// A validated problem plus its solver configuration.
#[derive(Debug)]
pub struct LoadedProblem {
    pub problem: VariationalProblem<ExprLagrangian>,
    pub solver: SolverConfig,
}

fn validation(path: &str, message: impl Into<String>) -> Error {
    Error::Validation { path: path.to_string(), message: message.into() }
}

fn build_grid(raw: &RawGrid) -> Result<Grid> {
    match (raw.h, raw.b, raw.n_points) {
        (Some(h), Some(b), None) => Grid::from_interval(raw.a, b, h)
            .map_err(|e| validation("grid", e.to_string())),
        (Some(h), None, Some(n)) => {
            Grid::new(raw.a, h, n).map_err(|e| validation("grid", e.to_string()))
        }
        (None, Some(b), Some(n)) => {
            if n < 2 {
                return Err(validation("grid.n_points", "need at least 2 points"));
            }
            let h = (b - raw.a) / (n - 1) as f64;
            Grid::new(raw.a, h, n).map_err(|e| validation("grid", e.to_string()))
        }
        (Some(h), Some(b), Some(n)) => {
            let g = Grid::from_interval(raw.a, b, h)
                .map_err(|e| validation("grid", e.to_string()))?;
            if g.len() != n {
                return Err(validation(
                    "grid.n_points",
                    format!("inconsistent with a, b, h (implies {} points)", g.len()),
                ));
            }
            Ok(g)
        }
        _ => Err(validation(
            "grid",
            "specify a together with two of: h, b, n_points",
        )),
    }
}

fn build_boundary(raw: &RawBoundary, path: &str) -> Result<Boundary> {
    match raw {
        RawBoundary::Fixed(v) => Ok(Boundary::Fixed(*v)),
        RawBoundary::Named(s) if s == "free" => Ok(Boundary::Free),
        RawBoundary::Named(s) => Err(validation(path, format!("expected a number or \"free\", got \"{s}\""))),
    }
}

/// Load and validate a problem file.
pub fn load_problem(path: &Path) -> Result<LoadedProblem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_problem(&text)
}

/// Parse a problem document from text.
pub fn parse_problem(text: &str) -> Result<LoadedProblem> {
    let raw: RawProblem = toml::from_str(text)
        .map_err(|e| validation("", e.message().to_string()))?;
    let grid = build_grid(&raw.grid)?;
    let lagrangian = ExprLagrangian::parse(&raw.lagrangian, raw.params.clone())
        .map_err(|e| validation("lagrangian", e.to_string()))?;
    if !(raw.alpha > 0.0 && raw.alpha <= 1.0) {
        return Err(validation("alpha", "must lie in (0, 1]"));
    }
    if !(raw.beta > 0.0 && raw.beta <= 1.0) {
        return Err(validation("beta", "must lie in (0, 1]"));
    }
    let left = build_boundary(&raw.bc.left, "bc.left")?;
    let right = build_boundary(&raw.bc.right, "bc.right")?;
    let problem = VariationalProblem::new(grid, lagrangian, raw.alpha, raw.beta, left, right)
        .map_err(|e| validation("", e.to_string()))?;

    let mut solver = SolverConfig::default();
    if let Some(v) = raw.solver.n_starts {
        if v == 0 {
            return Err(validation("solver.n_starts", "must be positive"));
        }
        solver.n_starts = v;
    }
    if let Some(v) = raw.solver.radius {
        if !(v > 0.0) {
            return Err(validation("solver.radius", "must be positive"));
        }
        solver.radius = v;
    }
    if let Some(v) = raw.solver.seed {
        solver.seed = v;
    }
    if let Some(v) = raw.solver.newton_tol {
        if !(v > 0.0) {
            return Err(validation("solver.newton_tol", "must be positive"));
        }
        solver.newton_tol = v;
    }
    if let Some(v) = raw.solver.newton_max_iter {
        solver.newton_max_iter = v;
    }
    if let Some(v) = raw.solver.dedup_tol {
        if !(v > 0.0) {
            return Err(validation("solver.dedup_tol", "must be positive"));
        }
        solver.dedup_tol = v;
    }
    Ok(LoadedProblem { problem, solver })
}
