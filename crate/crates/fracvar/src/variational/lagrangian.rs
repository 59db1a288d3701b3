//! Lagrangian backends: symbolic (expression AST) and finite-difference.

use std::collections::HashMap;

use crate::error::Result;
use crate::expr::{differentiate, eval_ast, parse, Ast, Bindings, Var};

/// A Lagrangian L(t, u, v, w) with first and second partial derivatives in
/// the three state slots (u = y^sigma, v = left fractional difference,
/// w = right fractional difference).
pub trait Lagrangian {
    fn l(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_u(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_v(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_w(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_uu(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_uv(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_uw(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_vv(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_vw(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
    fn l_ww(&self, t: f64, u: f64, v: f64, w: f64) -> f64;
}

/// Lagrangian backed by a parsed expression; all partials are produced by
/// symbolic differentiation at construction time.
#[derive(Debug, Clone)]
pub struct ExprLagrangian {
    source: String,
    params: HashMap<String, f64>,
    l: Ast,
    lu: Ast,
    lv: Ast,
    lw: Ast,
    luu: Ast,
    luv: Ast,
    luw: Ast,
    lvv: Ast,
    lvw: Ast,
    lww: Ast,
}

impl ExprLagrangian {
    pub fn parse(source: &str, params: HashMap<String, f64>) -> Result<Self> {
        let l = parse(source)?;
        let lu = differentiate(&l, Var::U);
        let lv = differentiate(&l, Var::V);
        let lw = differentiate(&l, Var::W);
        // probe once so unbound parameters surface at construction
        let probe = Bindings::new(0.0, 0.0, 0.0, 0.0, &params);
        eval_ast(&l, &probe).or_else(|_| eval_ast(&l, &Bindings::new(0.5, 0.5, 0.5, 0.5, &params)))?;
        Ok(ExprLagrangian {
            source: source.to_string(),
            luu: differentiate(&lu, Var::U),
            luv: differentiate(&lu, Var::V),
            luw: differentiate(&lu, Var::W),
            lvv: differentiate(&lv, Var::V),
            lvw: differentiate(&lv, Var::W),
            lww: differentiate(&lw, Var::W),
            l,
            lu,
            lv,
            lw,
            params,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn params(&self) -> &HashMap<String, f64> {
        &self.params
    }

    fn eval(&self, ast: &Ast, t: f64, u: f64, v: f64, w: f64) -> f64 {
        // the Lagrangians admitted here are total on the solver's domain;
        // NaN propagates an eval failure to the caller's residual checks
        eval_ast(ast, &Bindings::new(t, u, v, w, &self.params)).unwrap_or(f64::NAN)
    }
}

macro_rules! expr_partial {
    ($name:ident, $field:ident) => {
        fn $name(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
            self.eval(&self.$field, t, u, v, w)
        }
    };
}

impl Lagrangian for ExprLagrangian {
    expr_partial!(l, l);
    expr_partial!(l_u, lu);
    expr_partial!(l_v, lv);
    expr_partial!(l_w, lw);
    expr_partial!(l_uu, luu);
    expr_partial!(l_uv, luv);
    expr_partial!(l_uw, luw);
    expr_partial!(l_vv, lvv);
    expr_partial!(l_vw, lvw);
    expr_partial!(l_ww, lww);
}

/// Lagrangian backed by a plain closure; partial derivatives come from
/// central finite differences.
#[derive(Debug, Clone)]
pub struct FdLagrangian<F> {
    f: F,
}

impl<F: Fn(f64, f64, f64, f64) -> f64> FdLagrangian<F> {
    pub fn new(f: F) -> Self {
        FdLagrangian { f }
    }

    fn step1(x: f64) -> f64 {
        // cbrt(eps) scaling balances truncation against rounding
        6.0e-6 * x.abs().max(1.0)
    }

    fn step2(x: f64) -> f64 {
        1.2e-4 * x.abs().max(1.0)
    }
}

const U: usize = 0;
const V: usize = 1;
const W: usize = 2;

impl<F: Fn(f64, f64, f64, f64) -> f64> FdLagrangian<F> {
    fn at(&self, t: f64, s: [f64; 3]) -> f64 {
        (self.f)(t, s[U], s[V], s[W])
    }

    fn d1(&self, slot: usize, t: f64, u: f64, v: f64, w: f64) -> f64 {
        let mut s = [u, v, w];
        let h = Self::step1(s[slot]);
        s[slot] += h;
        let hi = self.at(t, s);
        s[slot] -= 2.0 * h;
        let lo = self.at(t, s);
        (hi - lo) / (2.0 * h)
    }

    fn d2(&self, s1: usize, s2: usize, t: f64, u: f64, v: f64, w: f64) -> f64 {
        let base = [u, v, w];
        if s1 == s2 {
            let h = Self::step2(base[s1]);
            let mut s = base;
            s[s1] += h;
            let hi = self.at(t, s);
            s[s1] -= 2.0 * h;
            let lo = self.at(t, s);
            (hi - 2.0 * self.at(t, base) + lo) / (h * h)
        } else {
            let h1 = Self::step2(base[s1]);
            let h2 = Self::step2(base[s2]);
            let mut s = base;
            let mut acc = 0.0;
            s[s1] += h1;
            s[s2] += h2;
            acc += self.at(t, s);
            s[s2] -= 2.0 * h2;
            acc -= self.at(t, s);
            s[s1] -= 2.0 * h1;
            acc += self.at(t, s);
            s[s2] += 2.0 * h2;
            acc -= self.at(t, s);
            acc / (4.0 * h1 * h2)
        }
    }
}

impl<F: Fn(f64, f64, f64, f64) -> f64> Lagrangian for FdLagrangian<F> {
    fn l(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        (self.f)(t, u, v, w)
    }
    fn l_u(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d1(U, t, u, v, w)
    }
    fn l_v(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d1(V, t, u, v, w)
    }
    fn l_w(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d1(W, t, u, v, w)
    }
    fn l_uu(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(U, U, t, u, v, w)
    }
    fn l_uv(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(U, V, t, u, v, w)
    }
    fn l_uw(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(U, W, t, u, v, w)
    }
    fn l_vv(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(V, V, t, u, v, w)
    }
    fn l_vw(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(V, W, t, u, v, w)
    }
    fn l_ww(&self, t: f64, u: f64, v: f64, w: f64) -> f64 {
        self.d2(W, W, t, u, v, w)
    }
}
