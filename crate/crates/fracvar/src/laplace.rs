//! The generalized Laplace transform on (hZ)_0, its derivative rule and
//! convolution, and the fractional integral/derivative realized exactly on
//! the span of generalized monomials h_k and constants through a formal
//! z-domain algebra.
//!
//! On (hZ)_0 the transform of f is the weighted geometric series
//! `sum_{k>=0} f(k h) h (1 + h z)^(-(k+1))`, which converges for
//! |1 + h z| > 1 when f grows no faster than the time-scale exponential.

use crate::error::{Error, Result};

const MAX_TERMS: usize = 1_000_000;

/// Numeric generalized Laplace transform of `f` at real `z`.
///
/// Truncates once a running geometric tail bound (built from |1 + h z| and
/// the observed growth of f) falls below `tol` relative to the partial sum.
pub fn laplace_numeric(f: impl Fn(f64) -> f64, z: f64, h: f64, tol: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::Domain(format!("graininess must be positive, got {h}")));
    }
    let base = 1.0 + h * z;
    let modulus = base.abs();
    if modulus <= 1.0 {
        return Err(Error::Divergence { modulus });
    }
    let q = 1.0 / base;
    let mut sum = 0.0;
    let mut q_pow = q; // q^(k+1)
    let mut prev_abs_f: f64 = 0.0;
    let mut growth: f64 = 1.0; // recent bound on |f(t+h)/f(t)|
    for k in 0..MAX_TERMS {
        let fv = f(k as f64 * h);
        if !fv.is_finite() {
            return Err(Error::Domain(format!(
                "transformed function not finite at t = {}",
                k as f64 * h
            )));
        }
        let term = fv * h * q_pow;
        sum += term;
        if prev_abs_f > 0.0 {
            growth = growth.max(fv.abs() / prev_abs_f).min(1.0 / q.abs() * 0.999_999);
        }
        prev_abs_f = prev_abs_f.max(fv.abs());
        if k >= 8 {
            let ratio = growth * q.abs();
            if ratio < 1.0 {
                let tail = term.abs().max(prev_abs_f * h * q_pow.abs()) * ratio / (1.0 - ratio);
                if tail <= tol * sum.abs().max(f64::MIN_POSITIVE) {
                    return Ok(sum);
                }
            }
        }
        q_pow *= q;
    }
    Err(Error::Budget { terms: MAX_TERMS })
}

/// Residual of the derivative rule `L[f^Delta](z) = z L[f](z) - f(0)`;
/// approximately zero for any transformable f.
pub fn derivative_rule_residual(
    f: impl Fn(f64) -> f64,
    z: f64,
    h: f64,
    tol: f64,
) -> Result<f64> {
    let fd = |t: f64| (f(t + h) - f(t)) / h;
    let lhs = laplace_numeric(fd, z, h, tol)?;
    let rhs = z * laplace_numeric(&f, z, h, tol)? - f(0.0);
    Ok(lhs - rhs)
}

/// Time-scale convolution `(f * g)(t) = integral_0^t f(tau) g(t, sigma(tau)) dtau`
/// on (hZ)_0: `h * sum_{tau=0}^{t-h} f(tau) g(t, tau + h)`.
pub fn convolve(f: impl Fn(f64) -> f64, g: impl Fn(f64, f64) -> f64, t: f64, h: f64) -> f64 {
    let steps = (t / h).round() as usize;
    let mut acc = 0.0;
    for k in 0..steps {
        let tau = k as f64 * h;
        acc += f(tau) * g(t, tau + h);
    }
    h * acc
}

/// Hilger real part `(|z h + 1| - 1)/h` of a complex z given as (re, im).
pub fn hilger_re(z_re: f64, z_im: f64, h: f64) -> f64 {
    ((z_re * h + 1.0).hypot(z_im * h) - 1.0) / h
}

/// Hilger imaginary part `Arg(z h + 1)/h` of a complex z given as (re, im).
pub fn hilger_im(z_re: f64, z_im: f64, h: f64) -> f64 {
    (z_im * h).atan2(z_re * h + 1.0) / h
}

/// A finite sum of `coeff * z^(-exponent)` terms with real exponents.
///
/// Terms with `exponent - 1` a non-negative integer invert back to
/// generalized monomials `coeff * h_(exponent-1)(t, 0)`; all other terms are
/// carried formally.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalTransform {
    terms: Vec<(f64, f64)>, // (coeff, exponent), exponents strictly positive
}

/// Tolerance for recognizing integer exponents during inversion.
const EXP_TOL: f64 = 1e-12;

impl FormalTransform {
    /// Build from (coefficient, exponent) pairs; like terms are merged and
    /// zero terms dropped. Exponents must be strictly positive (transforms
    /// vanish at infinity).
    pub fn new(terms: Vec<(f64, f64)>) -> Result<Self> {
        let mut t = FormalTransform { terms };
        t.normalize()?;
        Ok(t)
    }

    /// The transform of the monomial `h_k(t, 0)`: `z^(-(k+1))`.
    pub fn monomial(k: u32) -> Self {
        FormalTransform { terms: vec![(1.0, k as f64 + 1.0)] }
    }

    /// The transform of the constant c: `c / z`.
    pub fn constant(c: f64) -> Result<Self> {
        FormalTransform::new(vec![(c, 1.0)])
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(&mut self) -> Result<()> {
        self.terms
            .sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(self.terms.len());
        for &(c, p) in &self.terms {
            match merged.last_mut() {
                Some(last) if (last.1 - p).abs() < EXP_TOL => last.0 += c,
                _ => merged.push((c, p)),
            }
        }
        merged.retain(|&(c, _)| c.abs() > 0.0);
        for &(c, p) in &merged {
            if p <= EXP_TOL {
                return Err(Error::Domain(format!(
                    "formal transform term {c} z^(-{p}) does not vanish at infinity"
                )));
            }
        }
        self.terms = merged;
        Ok(())
    }

    pub fn scale(&self, c: f64) -> Self {
        FormalTransform { terms: self.terms.iter().map(|&(a, p)| (c * a, p)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        FormalTransform::new(terms)
    }

    /// Fractional integral of order `alpha > 0` at the transform level:
    /// divide by `z^alpha`, i.e. shift every exponent up by alpha.
    pub fn integrate(&self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Order(format!("integral order must be positive, got {alpha}")));
        }
        Ok(FormalTransform {
            terms: self.terms.iter().map(|&(c, p)| (c, p + alpha)).collect(),
        })
    }

    /// Fractional derivative of order `alpha` in (n-1, n] at the transform
    /// level: `z^alpha F(z) - sum_{k<n} f^(Delta^k)(0+) z^(alpha-k-1)`, with
    /// the initial values supplied by the caller (missing entries are zero).
    pub fn derive(&self, alpha: f64, initial: &[f64]) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Order(format!(
                "derivative order must be positive, got {alpha}"
            )));
        }
        let n = alpha.ceil().max(1.0) as usize;
        let mut terms: Vec<(f64, f64)> =
            self.terms.iter().map(|&(c, p)| (c, p - alpha)).collect();
        for k in 0..n {
            let f0 = initial.get(k).copied().unwrap_or(0.0);
            if f0 != 0.0 {
                // z^(alpha - k - 1) = z^(-(k + 1 - alpha))
                terms.push((-f0, k as f64 + 1.0 - alpha));
            }
        }
        FormalTransform::new(terms)
    }

    /// Invert every term to a generalized monomial, returning `(coeff, k)`
    /// pairs meaning `coeff * h_k(t, 0)". `None` when any exponent minus one
    /// is not a non-negative integer.
    pub fn invert_monomials(&self) -> Option<Vec<(f64, u32)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for &(c, p) in &self.terms {
            let k = p - 1.0;
            if k < -EXP_TOL || (k - k.round()).abs() > EXP_TOL {
                return None;
            }
            out.push((c, k.round() as u32));
        }
        Some(out)
    }
}

/// Basis element for the monomial fractional operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MonomialBasis {
    /// The generalized polynomial h_k(t, 0).
    Poly(u32),
    /// A constant function.
    Constant(f64),
}

impl MonomialBasis {
    fn transform(&self) -> Result<FormalTransform> {
        match *self {
            MonomialBasis::Poly(k) => Ok(FormalTransform::monomial(k)),
            MonomialBasis::Constant(c) => FormalTransform::constant(c),
        }
    }

    // Delta-derivative initial values f^(Delta^i)(0), i = 0, 1, ...;
    // h_k has h_(k-i)(0,0) = [i == k], constants are flat.
    fn initial_values(&self, count: usize) -> Vec<f64> {
        match *self {
            MonomialBasis::Poly(k) => {
                (0..count).map(|i| if i as u32 == k { 1.0 } else { 0.0 }).collect()
            }
            MonomialBasis::Constant(c) => {
                (0..count).map(|i| if i == 0 { c } else { 0.0 }).collect()
            }
        }
    }
}

/// Which fractional operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Integral,
    Derivative,
}

/// Result of a fractional operator on the monomial span: identically zero,
/// or a formal transform (invertible back to a monomial whenever its
/// exponent is an integer plus one).
#[derive(Debug, Clone, PartialEq)]
pub enum FracResult {
    Zero,
    Transform(FormalTransform),
}

impl FracResult {
    pub fn transform(&self) -> Option<&FormalTransform> {
        match self {
            FracResult::Zero => None,
            FracResult::Transform(t) => Some(t),
        }
    }
}

/// Fractional integral or derivative of order `alpha > 0` of a basis
/// element, computed exactly in the z domain.
///
/// With `n` determined by `alpha` in `(n-1, n]`: the derivative of `h_k`
/// vanishes for `k <= n-1` and equals `z^(-(k+1-alpha))` otherwise; the
/// derivative of any constant vanishes; the integral of `h_k` is
/// `z^(-(k+1+alpha))`.
pub fn frac_monomial_op(kind: OpKind, basis: MonomialBasis, alpha: f64) -> Result<FracResult> {
    if !(alpha > 0.0) {
        return Err(Error::Order(format!("fractional order must be positive, got {alpha}")));
    }
    let f = basis.transform()?;
    let out = match kind {
        OpKind::Integral => f.integrate(alpha)?,
        OpKind::Derivative => {
            let n = alpha.ceil().max(1.0) as usize;
            f.derive(alpha, &basis.initial_values(n))?
        }
    };
    Ok(if out.is_zero() { FracResult::Zero } else { FracResult::Transform(out) })
}

/// Fractional operator applied to a linear combination of basis elements,
/// assembled in one pass so boundary terms combine linearly.
pub fn frac_span_op(
    kind: OpKind,
    combo: &[(f64, MonomialBasis)],
    alpha: f64,
) -> Result<FracResult> {
    if !(alpha > 0.0) {
        return Err(Error::Order(format!("fractional order must be positive, got {alpha}")));
    }
    let mut f = FormalTransform { terms: Vec::new() };
    for &(c, basis) in combo {
        f = f.add(&basis.transform()?.scale(c))?;
    }
    let out = match kind {
        OpKind::Integral => f.integrate(alpha)?,
        OpKind::Derivative => {
            let n = alpha.ceil().max(1.0) as usize;
            let mut initial = vec![0.0; n];
            for &(c, basis) in combo {
                for (i, v) in basis.initial_values(n).iter().enumerate() {
                    initial[i] += c * v;
                }
            }
            f.derive(alpha, &initial)?
        }
    };
    Ok(if out.is_zero() { FracResult::Zero } else { FracResult::Transform(out) })
}
