//! The grid model for the time scale (hZ)_a restricted to [a, b], the delta
//! derivative and h-integral, generalized polynomials, and the time-scale
//! exponential function.

use crate::error::{Error, Result};
use crate::special::h_falling_factorial;

/// A uniform grid `{a, a+h, ..., a + (n_points-1) h}` modelling the time
/// scale (hZ)_a on `[a, b]`. Points are always computed as `a + i*h` from
/// the integer index, never by repeated addition, so downstream pole
/// detection sees exact integers whenever `a/h` is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    a: f64,
    h: f64,
    n_points: usize,
}

impl Grid {
    /// Grid with `n_points >= 3` points (b = a + (n_points-1) h, so at
    /// least two steps, as the variational theory assumes).
    pub fn new(a: f64, h: f64, n_points: usize) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!("graininess must be positive, got {h}")));
        }
        if !a.is_finite() {
            return Err(Error::Domain(format!("left endpoint must be finite, got {a}")));
        }
        if n_points < 3 {
            return Err(Error::Domain(format!(
                "grid needs at least 3 points, got {n_points}"
            )));
        }
        Ok(Grid { a, h, n_points })
    }

    /// Grid over `[a, b]` with step `h`; `b - a` must be an integer
    /// multiple of `h` (to about one part in 1e9).
    pub fn from_interval(a: f64, b: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!("graininess must be positive, got {h}")));
        }
        let steps = (b - a) / h;
        if steps < 0.5 || (steps - steps.round()).abs() > 1e-9 * steps.abs().max(1.0) {
            return Err(Error::Domain(format!(
                "[{a}, {b}] is not an integer number of steps of {h}"
            )));
        }
        Grid::new(a, h, steps.round() as usize + 1)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// The right endpoint b = a + (len-1) h.
    pub fn b(&self) -> f64 {
        self.point(self.n_points - 1)
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        self.n_points == 0
    }

    /// The i-th grid point a + i*h.
    pub fn point(&self, i: usize) -> f64 {
        self.a + self.h * i as f64
    }

    /// All grid points in order.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.point(i))
    }

    /// T^kappa: the grid without its last point.
    pub fn kappa(&self) -> Grid {
        Grid { a: self.a, h: self.h, n_points: self.n_points - 1 }
    }

    /// T^(kappa^2): the grid without its last two points.
    pub fn kappa2(&self) -> Grid {
        Grid { a: self.a, h: self.h, n_points: self.n_points - 2 }
    }

    /// Index of the grid point equal to `t` (to within 1e-9 of a step).
    pub fn index_of(&self, t: f64) -> Option<usize> {
        let x = (t - self.a) / self.h;
        let i = x.round();
        if (x - i).abs() < 1e-9 && i >= 0.0 && (i as usize) < self.n_points {
            Some(i as usize)
        } else {
            None
        }
    }
}

/// Real values attached to consecutive grid points, optionally carrying a
/// real shift: sample `i` lives at `grid.point(i) + shift`. The shift field
/// expresses the +/- nu*h shifted domains of the unreduced fractional sums;
/// the re-indexed operators leave it at zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    shift: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Domain(format!(
                "expected {} values for the grid, got {}",
                grid.len(),
                values.len()
            )));
        }
        Ok(GridFunction { grid, shift: 0.0, values })
    }

    /// Values attached to the shifted domain `{t + shift : t in grid}`.
    pub fn shifted(grid: Grid, shift: f64, values: Vec<f64>) -> Result<Self> {
        let mut f = GridFunction::new(grid, values)?;
        f.shift = shift;
        Ok(f)
    }

    /// Sample a scalar function at every grid point.
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.points().map(f).collect();
        GridFunction { grid, shift: 0.0, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Real-line position of sample `i`, including the shift.
    pub fn position(&self, i: usize) -> f64 {
        self.grid.point(i) + self.shift
    }
}

/// Forward difference quotient `(f(t+h) - f(t))/h` at grid index `i`.
/// Defined on T^kappa, so the last grid point is out of range.
pub fn delta_derivative(f: &GridFunction, i: usize) -> Result<f64> {
    if i + 1 >= f.len() {
        return Err(Error::Index { index: i, len: f.len().saturating_sub(1) });
    }
    Ok((f.value(i + 1) - f.value(i)) / f.grid().h())
}

/// The function of forward differences, defined on T^kappa.
pub fn delta_derivative_fn(f: &GridFunction) -> GridFunction {
    let h = f.grid().h();
    let values: Vec<f64> = f.values().windows(2).map(|w| (w[1] - w[0]) / h).collect();
    GridFunction {
        grid: f.grid().kappa(),
        shift: f.shift(),
        values,
    }
}

/// Delta integral between two grid points: `sum_{t=from}^{rho(to)} h f(t)`
/// for from < to, zero when they coincide, the negated sum when reversed.
pub fn h_integral(f: &GridFunction, from: usize, to: usize) -> Result<f64> {
    let n = f.len();
    if from >= n || to >= n {
        return Err(Error::Index { index: from.max(to), len: n });
    }
    let h = f.grid().h();
    let (lo, hi, sign) = if from <= to { (from, to, 1.0) } else { (to, from, -1.0) };
    let sum: f64 = (lo..hi).map(|i| f.value(i)).sum();
    Ok(sign * h * sum)
}

/// Generalized polynomial `h_k(t, s) = (t - s)_h^(k) / k!` on the grid,
/// evaluated at grid indices. Agrees with the recursive definition
/// `h_{k+1}(t,s) = integral_s^t h_k(tau, s) dtau`.
pub fn generalized_polynomial(k: u32, t_index: usize, s_index: usize, grid: &Grid) -> Result<f64> {
    if t_index >= grid.len() || s_index >= grid.len() {
        return Err(Error::Index { index: t_index.max(s_index), len: grid.len() });
    }
    let t = grid.point(t_index);
    let s = grid.point(s_index);
    let mut kfac = 1.0;
    for j in 2..=k {
        kfac *= j as f64;
    }
    Ok(h_falling_factorial(t - s, k as f64, grid.h())? / kfac)
}

/// Closed form of the generalized polynomial on the real line:
/// `(t - s)^k / k!`.
pub fn polynomial_real(k: u32, t: f64, s: f64) -> f64 {
    let mut kfac = 1.0;
    for j in 2..=k {
        kfac *= j as f64;
    }
    (t - s).powi(k as i32) / kfac
}

/// Product form of `h_k(t, s)` on the quantum scale q^Z for q > 1:
/// `prod_{i=0}^{k-1} (t - q^i s) / sum_{j=0}^{i} q^j`.
pub fn polynomial_q(k: u32, t: f64, s: f64, q: f64) -> f64 {
    let mut prod = 1.0;
    let mut q_pow = 1.0; // q^i
    let mut geom = 0.0; // sum_{j=0}^{i} q^j
    for _ in 0..k {
        geom += q_pow;
        prod *= (t - q_pow * s) / geom;
        q_pow *= q;
    }
    prod
}

/// Time-scale exponential `e_z(t, s) = (1 + h z)^((t-s)/h)` for constant z,
/// at grid indices. Requires regressivity `1 + h z != 0`.
pub fn exp_ts(z: f64, t_index: usize, s_index: usize, grid: &Grid) -> Result<f64> {
    if t_index >= grid.len() || s_index >= grid.len() {
        return Err(Error::Index { index: t_index.max(s_index), len: grid.len() });
    }
    let base = 1.0 + grid.h() * z;
    if base.abs() < 1e-14 {
        return Err(Error::Regressivity { z, h: grid.h() });
    }
    let steps = t_index as i32 - s_index as i32;
    Ok(base.powi(steps))
}
