//! Multi-start damped Newton solver for the Euler-Lagrange system.
//!
//! The fractional difference operators are linear in the grid values, so the
//! solver precomputes their weight matrices once per problem and assembles
//! residuals with matrix-vector products; a test pins this fast path to the
//! per-point public operators.

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fracops::{frac_diff, Side};
use crate::timescale::{Grid, GridFunction};

use super::{Boundary, Lagrangian, VariationalProblem};

/// Multi-start Newton configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Number of random starting vectors.
    pub n_starts: usize,
    /// Starts are drawn uniformly from [-radius, radius] per unknown.
    pub radius: f64,
    /// RNG seed; a fixed seed makes the returned list deterministic.
    pub seed: u64,
    /// Convergence threshold on the residual infinity norm.
    pub newton_tol: f64,
    /// Iteration cap per start.
    pub newton_max_iter: usize,
    /// Roots closer than this in the infinity norm are considered equal.
    pub dedup_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            n_starts: 2000,
            radius: 5.0,
            seed: 42,
            newton_tol: 1e-10,
            newton_max_iter: 50,
            dedup_tol: 1e-6,
        }
    }
}

/// A converged Euler-Lagrange candidate.
#[derive(Debug, Clone)]
pub struct ExtremalCandidate {
    /// Solution values on the full grid, boundary values included.
    pub y: GridFunction,
    /// Infinity norm of the residual system at the candidate.
    pub el_residual_inf: f64,
    /// Value of the variational functional along the candidate.
    pub functional_value: f64,
    /// Legendre left-hand sides over T^(kappa^2).
    pub legendre_values: Vec<f64>,
    /// Whether every Legendre value clears the scaled non-negativity test.
    pub legendre_verified: bool,
}

// Dense row-major matrix just big enough for the operator tables.
#[derive(Debug, Clone)]
struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    fn matvec(&self, x: &[f64], out: &mut [f64]) {
        for (r, slot) in out.iter_mut().enumerate().take(self.rows) {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            *slot = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

// Solve A x = b in place by Gaussian elimination with partial pivoting.
fn solve_linear(mut a: Mat, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let mut pivot = col;
        for r in col + 1..n {
            if a.at(r, col).abs() > a.at(pivot, col).abs() {
                pivot = r;
            }
        }
        if a.at(pivot, col).abs() < 1e-300 {
            return None;
        }
        if pivot != col {
            for c in 0..n {
                let tmp = a.at(col, c);
                a.set(col, c, a.at(pivot, c));
                a.set(pivot, c, tmp);
            }
            b.swap(col, pivot);
        }
        for r in col + 1..n {
            let factor = a.at(r, col) / a.at(col, col);
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                let v = a.at(r, c) - factor * a.at(col, c);
                a.set(r, c, v);
            }
            b[r] -= factor * b[col];
        }
    }
    for r in (0..n).rev() {
        let acc = b[r] - (r + 1..n).map(|c| a.at(r, c) * b[c]).sum::<f64>();
        b[r] = acc / a.at(r, r);
    }
    if b.iter().all(|v| v.is_finite()) {
        Some(b)
    } else {
        None
    }
}

// Weight matrix of a fractional difference: column j holds the operator
// applied to the j-th unit vector, so the matrix times the value vector
// reproduces frac_diff at every admissible point.
fn diff_matrix(grid: Grid, side: Side, order: f64) -> Result<Mat> {
    let n = grid.len();
    let mut m = Mat::zeros(n - 1, n);
    let mut unit = vec![0.0; n];
    for j in 0..n {
        unit[j] = 1.0;
        let f = GridFunction::new(grid, unit.clone())?;
        for i in 0..n - 1 {
            m.set(i, j, frac_diff(&f, side, order, i)?);
        }
        unit[j] = 0.0;
    }
    Ok(m)
}

struct Assembler<'p, L> {
    problem: &'p VariationalProblem<L>,
    dl: Mat,  // y -> v on T^kappa
    dr: Mat,  // y -> w on T^kappa
    drv: Mat, // L_v on T^kappa -> right diff on T^kappa^2
    dlw: Mat, // L_w on T^kappa -> left diff on T^kappa^2
    n: usize,
    free_left: bool,
    free_right: bool,
}

impl<'p, L: Lagrangian> Assembler<'p, L> {
    fn new(problem: &'p VariationalProblem<L>) -> Result<Self> {
        let grid = *problem.grid();
        let n = grid.len();
        Ok(Assembler {
            dl: diff_matrix(grid, Side::Left, problem.alpha())?,
            dr: diff_matrix(grid, Side::Right, problem.beta())?,
            drv: diff_matrix(grid.kappa(), Side::Right, problem.alpha())?,
            dlw: diff_matrix(grid.kappa(), Side::Left, problem.beta())?,
            free_left: problem.left_boundary() == Boundary::Free,
            free_right: problem.right_boundary() == Boundary::Free,
            problem,
            n,
        })
    }

    fn unknowns(&self) -> usize {
        self.n - 2 + usize::from(self.free_left) + usize::from(self.free_right)
    }

    // Interior values first, then any free endpoint values.
    fn compose(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        y[1..self.n - 1].copy_from_slice(&x[..self.n - 2]);
        let mut extra = self.n - 2;
        y[0] = match self.problem.left_boundary() {
            Boundary::Fixed(a) => a,
            Boundary::Free => {
                extra += 1;
                x[extra - 1]
            }
        };
        y[self.n - 1] = match self.problem.right_boundary() {
            Boundary::Fixed(b) => b,
            Boundary::Free => x[extra],
        };
        y
    }

    // Residual system: EL at each T^kappa^2 point, then natural boundary
    // conditions for free ends.
    fn residuals(&self, x: &[f64], out: &mut Vec<f64>) -> Result<()> {
        let y = self.compose(x);
        let grid = self.problem.grid();
        let h = grid.h();
        let nk = self.n - 1;
        let mut v = vec![0.0; nk];
        let mut w = vec![0.0; nk];
        self.dl.matvec(&y, &mut v);
        self.dr.matvec(&y, &mut w);
        let lag = self.problem.lagrangian();
        let mut lu = vec![0.0; nk];
        let mut lv = vec![0.0; nk];
        let mut lw = vec![0.0; nk];
        for i in 0..nk {
            let t = grid.point(i);
            let u = y[i + 1];
            lu[i] = lag.l_u(t, u, v[i], w[i]);
            lv[i] = lag.l_v(t, u, v[i], w[i]);
            lw[i] = lag.l_w(t, u, v[i], w[i]);
        }
        out.clear();
        out.resize(self.n - 2, 0.0);
        let mut tmp = vec![0.0; self.n - 2];
        self.drv.matvec(&lv, &mut tmp);
        for i in 0..self.n - 2 {
            out[i] = lu[i] + tmp[i];
        }
        self.dlw.matvec(&lw, &mut tmp);
        for i in 0..self.n - 2 {
            out[i] += tmp[i];
        }
        let _ = h;
        let yf = GridFunction::new(*grid, y)?;
        if self.free_left {
            out.push(self.problem.natural_bc_residual(&yf, Side::Left)?);
        }
        if self.free_right {
            out.push(self.problem.natural_bc_residual(&yf, Side::Right)?);
        }
        Ok(())
    }
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Find distinct roots of the Euler-Lagrange system (plus natural boundary
/// conditions for free ends) by damped Newton iteration from `n_starts`
/// seeded random starting vectors.
///
/// Returns candidates sorted by functional value (ties broken by
/// lexicographic order of the grid values), deduplicated by infinity-norm
/// distance; deterministic for a fixed seed. Errs with
/// [`Error::NoConvergence`] when no start converges.
pub fn solve_extremals<L: Lagrangian>(
    problem: &VariationalProblem<L>,
    cfg: &SolverConfig,
) -> Result<Vec<ExtremalCandidate>> {
    let asm = Assembler::new(problem)?;
    let dim = asm.unknowns();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let dist = Uniform::new_inclusive(-cfg.radius, cfg.radius);

    let mut roots: Vec<Vec<f64>> = Vec::new();
    let mut res = Vec::new();
    let mut res_trial = Vec::new();

    for _ in 0..cfg.n_starts {
        let mut x: Vec<f64> = (0..dim).map(|_| dist.sample(&mut rng)).collect();
        let mut converged = false;
        if asm.residuals(&x, &mut res).is_err() {
            continue;
        }
        for _ in 0..cfg.newton_max_iter {
            let rnorm = inf_norm(&res);
            if !rnorm.is_finite() {
                break;
            }
            if rnorm < cfg.newton_tol {
                converged = true;
                break;
            }
            // forward-difference Jacobian
            let mut jac = Mat::zeros(dim, dim);
            let mut ok = true;
            for j in 0..dim {
                let step = 1e-7 * x[j].abs().max(1.0);
                let saved = x[j];
                x[j] = saved + step;
                if asm.residuals(&x, &mut res_trial).is_err() {
                    ok = false;
                    x[j] = saved;
                    break;
                }
                for i in 0..dim {
                    jac.set(i, j, (res_trial[i] - res[i]) / step);
                }
                x[j] = saved;
            }
            if !ok {
                break;
            }
            let rhs: Vec<f64> = res.iter().map(|r| -r).collect();
            let Some(step) = solve_linear(jac, rhs) else {
                break;
            };
            // damping by step halving until the residual norm drops
            let mut lambda = 1.0;
            let mut accepted = false;
            for _ in 0..30 {
                let trial: Vec<f64> =
                    x.iter().zip(&step).map(|(a, d)| a + lambda * d).collect();
                if asm.residuals(&trial, &mut res_trial).is_ok() {
                    let t_norm = inf_norm(&res_trial);
                    if t_norm.is_finite() && t_norm < rnorm {
                        x = trial;
                        std::mem::swap(&mut res, &mut res_trial);
                        accepted = true;
                        break;
                    }
                }
                lambda *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        if !converged {
            continue;
        }
        if !roots.iter().any(|r| {
            r.iter().zip(&x).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs())) < cfg.dedup_tol
        }) {
            roots.push(x.clone());
        }
    }

    if roots.is_empty() {
        return Err(Error::NoConvergence);
    }

    let mut candidates = Vec::with_capacity(roots.len());
    for x in roots {
        asm.residuals(&x, &mut res)?;
        let y = GridFunction::new(*problem.grid(), asm.compose(&x))?;
        let functional_value = problem.evaluate_functional(&y)?;
        let legendre_values = problem.legendre_values(&y)?;
        let scale = 1.0 + legendre_values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let legendre_verified =
            legendre_values.iter().all(|&v| v >= -1e-9 * scale);
        candidates.push(ExtremalCandidate {
            y,
            el_residual_inf: inf_norm(&res),
            functional_value,
            legendre_values,
            legendre_verified,
        });
    }
    candidates.sort_by(|a, b| {
        a.functional_value
            .partial_cmp(&b.functional_value)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| {
                a.y.values()
                    .iter()
                    .zip(b.y.values())
                    .find_map(|(x, y)| x.partial_cmp(y).filter(|o| o.is_ne()))
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    Ok(candidates)
}
