//! Left and right fractional sums and differences on (hZ)_a, the nabla and
//! diamond fractional sums on Z, and the structural identities between them
//! exposed as residual checks.
//!
//! All operators use the re-indexed presentation in which the operator and
//! the function share the same grid: the left sum of order nu at t is the
//! value the unreduced operator takes at t + nu h, and the right sum at t is
//! the value taken at t - nu h. The shifted-domain presentation remains
//! available through [`frac_sum_shifted`].

use crate::error::{Error, Result};
use crate::special::{binomial_real, h_falling_factorial, rising_factorial};
use crate::timescale::{delta_derivative_fn, GridFunction};

/// Which end of the interval the operator is anchored at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn gamma_coef(nu: f64) -> Result<f64> {
    // nu / Gamma(nu + 1); zero at nu = 0 so the order-0 sum is the identity
    if nu == 0.0 {
        return Ok(0.0);
    }
    let lg = crate::special::log_gamma_signed(nu + 1.0)?;
    Ok(nu * f64::from(lg.sign) * (-lg.log_abs).exp())
}

/// Fractional sum of order `nu >= 0` at grid index `i` over the function's
/// own domain, in re-indexed form:
///
/// * left:  `h^nu f(t) + nu/Gamma(nu+1) * sum_{s=a}^{t-h} (t + nu h - sigma(s))_h^(nu-1) f(s) h`
/// * right: `h^nu f(t) + nu/Gamma(nu+1) * sum_{s=sigma(t)}^{b} (s + nu h - sigma(t))_h^(nu-1) f(s) h`
///
/// Order zero returns `f(t)` exactly.
pub fn frac_sum(f: &GridFunction, side: Side, nu: f64, i: usize) -> Result<f64> {
    if nu < 0.0 {
        return Err(Error::Order(format!("fractional sum needs nu >= 0, got {nu}")));
    }
    let n = f.len();
    if i >= n {
        return Err(Error::Domain(format!("index {i} is off the {n}-point grid")));
    }
    let h = f.grid().h();
    let coef = gamma_coef(nu)?;
    let mut acc = h.powf(nu) * f.value(i);
    if coef != 0.0 {
        let mut sum = 0.0;
        match side {
            Side::Left => {
                for s in 0..i {
                    let kernel = h_falling_factorial(((i - s - 1) as f64 + nu) * h, nu - 1.0, h)?;
                    sum += kernel * f.value(s);
                }
            }
            Side::Right => {
                for s in (i + 1)..n {
                    let kernel = h_falling_factorial(((s - i - 1) as f64 + nu) * h, nu - 1.0, h)?;
                    sum += kernel * f.value(s);
                }
            }
        }
        acc += coef * sum * h;
    }
    Ok(acc)
}

/// The fractional sum as a whole function on the shifted domain of the
/// unreduced definition: the left sum lives on `{t + nu h}`, the right sum
/// on `{t - nu h}`, expressed through the [`GridFunction`] shift field.
pub fn frac_sum_shifted(f: &GridFunction, side: Side, nu: f64) -> Result<GridFunction> {
    let values: Result<Vec<f64>> = (0..f.len()).map(|i| frac_sum(f, side, nu, i)).collect();
    let shift = match side {
        Side::Left => nu * f.grid().h(),
        Side::Right => -nu * f.grid().h(),
    };
    GridFunction::shifted(*f.grid(), f.shift() + shift, values?)
}

// Re-indexed fractional sum as a function on the same grid.
fn frac_sum_fn(f: &GridFunction, side: Side, nu: f64) -> Result<GridFunction> {
    let values: Result<Vec<f64>> = (0..f.len()).map(|i| frac_sum(f, side, nu, i)).collect();
    GridFunction::new(*f.grid(), values?)
}

/// Fractional difference of order `alpha` in (0, 1] at grid index `i`:
/// the delta derivative of the fractional sum of order `1 - alpha` (left),
/// or its negation (right). Defined on T^kappa.
pub fn frac_diff(f: &GridFunction, side: Side, alpha: f64, i: usize) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Order(format!(
            "fractional difference needs 0 < alpha <= 1, got {alpha}"
        )));
    }
    if i + 1 >= f.len() {
        return Err(Error::Index { index: i, len: f.len().saturating_sub(1) });
    }
    let gamma = 1.0 - alpha;
    let hi = frac_sum(f, side, gamma, i + 1)?;
    let lo = frac_sum(f, side, gamma, i)?;
    let d = (hi - lo) / f.grid().h();
    Ok(match side {
        Side::Left => d,
        Side::Right => -d,
    })
}

/// Fractional difference as a function on T^kappa.
pub fn frac_diff_fn(f: &GridFunction, side: Side, alpha: f64) -> Result<GridFunction> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Order(format!(
            "fractional difference needs 0 < alpha <= 1, got {alpha}"
        )));
    }
    let sum = frac_sum_fn(f, side, 1.0 - alpha)?;
    let mut d = delta_derivative_fn(&sum);
    if side == Side::Right {
        d = GridFunction::new(*d.grid(), d.values().iter().map(|v| -v).collect())?;
    }
    Ok(d)
}

/// LHS minus RHS of the sum/difference interchange identity, which must
/// vanish for every f and nu >= 0:
///
/// * left: the order-nu sum of f^Delta equals the delta derivative of the
///   order-nu sum of f minus `nu/Gamma(nu+1) (t + nu h - a)_h^(nu-1) f(a)`;
/// * right: the order-nu sum of f^Delta over `[a, rho(b)]` equals
///   `nu/Gamma(nu+1) (b + nu h - sigma(t))_h^(nu-1) f(b)` plus the delta
///   derivative of the order-nu sum of f over `[a, b]`.
///
/// `i` indexes T^kappa.
pub fn shift_identity_residual(f: &GridFunction, side: Side, nu: f64, i: usize) -> Result<f64> {
    if nu < 0.0 {
        return Err(Error::Order(format!("shift identity needs nu >= 0, got {nu}")));
    }
    let n = f.len();
    if i + 1 >= n {
        return Err(Error::Index { index: i, len: n.saturating_sub(1) });
    }
    let h = f.grid().h();
    let fd = delta_derivative_fn(f);
    let coef = gamma_coef(nu)?;
    match side {
        Side::Left => {
            let lhs = frac_sum(&fd, Side::Left, nu, i)?;
            let sums = frac_sum_fn(f, Side::Left, nu)?;
            let dsum = (sums.value(i + 1) - sums.value(i)) / h;
            let boundary = coef * h_falling_factorial(i as f64 * h + nu * h, nu - 1.0, h)? * f.value(0);
            Ok(lhs - (dsum - boundary))
        }
        Side::Right => {
            let lhs = frac_sum(&fd, Side::Right, nu, i)?;
            let sums = frac_sum_fn(f, Side::Right, nu)?;
            let dsum = (sums.value(i + 1) - sums.value(i)) / h;
            let boundary =
                coef * h_falling_factorial((n - 2 - i) as f64 * h + nu * h, nu - 1.0, h)?
                    * f.value(n - 1);
            Ok(lhs - (boundary + dsum))
        }
    }
}

/// LHS minus RHS of the fractional summation-by-parts formula, which must
/// vanish for all inputs. `f` lives on T^kappa, `g` on the full grid T;
/// `f.len()` must equal `g.len() - 1`.
///
/// LHS: `integral_a^b f(t) (left frac diff of g)(t) dt`. RHS:
/// `h^gamma [f(rho(b)) g(b) - f(a) g(a)] + integral_a^rho(b) (right frac
/// diff of f over [a, rho(b)])(t) g(sigma(t)) dt` plus the gamma-weighted
/// boundary correction in `g(a)`.
pub fn summation_by_parts_residual(
    f: &GridFunction,
    g: &GridFunction,
    alpha: f64,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Order(format!(
            "summation by parts needs 0 < alpha <= 1, got {alpha}"
        )));
    }
    let n = g.len();
    if f.len() + 1 != n {
        return Err(Error::Domain(format!(
            "f must live on T^kappa: expected {} values, got {}",
            n - 1,
            f.len()
        )));
    }
    let h = g.grid().h();
    let gamma = 1.0 - alpha;

    let mut lhs = 0.0;
    for i in 0..n - 1 {
        lhs += h * f.value(i) * frac_diff(g, Side::Left, alpha, i)?;
    }

    let hg = h.powf(gamma);
    let mut rhs = hg * (f.value(n - 2) * g.value(n - 1) - f.value(0) * g.value(0));
    for i in 0..n - 2 {
        rhs += h * frac_diff(f, Side::Right, alpha, i)? * g.value(i + 1);
    }
    let coef = gamma_coef(gamma)?;
    if coef != 0.0 {
        let mut s1 = 0.0; // sum over T^kappa of (t + gamma h - a)_h^(gamma-1) f(t)
        for i in 0..n - 1 {
            s1 += h * h_falling_factorial((i as f64 + gamma) * h, gamma - 1.0, h)? * f.value(i);
        }
        let mut s2 = 0.0; // sum over [sigma(a), rho(b)] of (t + gamma h - sigma(a))_h^(gamma-1) f(t)
        for i in 1..n - 1 {
            s2 += h * h_falling_factorial(((i - 1) as f64 + gamma) * h, gamma - 1.0, h)? * f.value(i);
        }
        rhs += coef * g.value(0) * (s1 - s2);
    }
    Ok(lhs - rhs)
}

fn require_unit_grid(f: &GridFunction, what: &str) -> Result<()> {
    if (f.grid().h() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "{what} is defined on unit-step grids only, got h = {}",
            f.grid().h()
        )));
    }
    Ok(())
}

/// Discrete nabla fractional sum on N_a (h = 1):
/// `(1/Gamma(beta)) sum_{s=a}^{t} (t - rho(s))^(rising beta-1) f(s)`.
pub fn nabla_frac_sum(f: &GridFunction, beta: f64, i: usize) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Order(format!("nabla sum needs beta > 0, got {beta}")));
    }
    require_unit_grid(f, "the nabla fractional sum")?;
    if i >= f.len() {
        return Err(Error::Domain(format!("index {i} is off the {}-point grid", f.len())));
    }
    let lg = crate::special::log_gamma_signed(beta)?;
    let inv_gamma = f64::from(lg.sign) * (-lg.log_abs).exp();
    let mut sum = 0.0;
    for s in 0..=i {
        sum += rising_factorial((i - s + 1) as f64, beta - 1.0)? * f.value(s);
    }
    Ok(inv_gamma * sum)
}

/// Diamond-gamma fractional sum of order (alpha, beta) on N_a:
/// `gamma * (delta sum of order alpha, at the matching shifted point)
///  + (1 - gamma) * (nabla sum of order beta)`.
pub fn diamond_sum(f: &GridFunction, alpha: f64, beta: f64, gamma: f64, i: usize) -> Result<f64> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::Order(format!(
            "diamond sum needs alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::Order(format!("diamond weight must be in [0, 1], got {gamma}")));
    }
    require_unit_grid(f, "the diamond fractional sum")?;
    // (Delta_a^{-alpha} f)(t + alpha) is the re-indexed left sum at t.
    let delta_part = frac_sum(f, Side::Left, alpha, i)?;
    let nabla_part = nabla_frac_sum(f, beta, i)?;
    Ok(gamma * delta_part + (1.0 - gamma) * nabla_part)
}

/// Partial sum of the diamond Leibniz series through k = `k_max`:
///
/// `sum_k binom(-alpha, k) (nabla^k g)(t) (Delta_a^{-(alpha+k)} f)(t + alpha)`
/// weighted by gamma, plus the corresponding beta branch weighted by
/// 1 - gamma. The k-th delta sum is evaluated at base point `t - k`. When g
/// is a polynomial of degree d and `k_max >= d` the series is exact.
pub fn leibniz_series(
    f: &GridFunction,
    g: &GridFunction,
    alpha: f64,
    beta: f64,
    gamma: f64,
    i: usize,
    k_max: usize,
) -> Result<f64> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::Order(format!(
            "Leibniz series needs alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::Order(format!("diamond weight must be in [0, 1], got {gamma}")));
    }
    require_unit_grid(f, "the Leibniz series")?;
    if f.len() != g.len() {
        return Err(Error::Domain("f and g must share a grid".into()));
    }
    if i >= f.len() {
        return Err(Error::Domain(format!("index {i} is off the {}-point grid", f.len())));
    }
    if k_max > i {
        return Err(Error::History(format!(
            "nabla^{k_max} at index {i} needs {k_max} points of history, only {i} available"
        )));
    }
    // nabla^k g(t) by the binomial expansion of the backward difference
    let mut nabla_k = vec![0.0; k_max + 1];
    for (k, out) in nabla_k.iter_mut().enumerate() {
        let mut acc = 0.0;
        let mut binom = 1.0; // C(k, j)
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * binom * g.value(i - j);
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        *out = acc;
    }
    let mut total = 0.0;
    for (k, nk) in nabla_k.iter().enumerate() {
        let kf = k as f64;
        if gamma != 0.0 {
            total += gamma
                * binomial_real(-alpha, kf)?
                * nk
                * frac_sum(f, Side::Left, alpha + kf, i - k)?;
        }
        if gamma != 1.0 {
            total += (1.0 - gamma)
                * binomial_real(-beta, kf)?
                * nk
                * frac_sum(f, Side::Left, beta + kf, i - k)?;
        }
    }
    Ok(total)
}
