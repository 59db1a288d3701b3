//! Discrete fractional calculus of variations on the time scales Z and
//! (hZ)_a.
//!
//! The crate provides, bottom up:
//!
//! * [`special`] -- log-gamma with sign tracking and the generalized
//!   factorial/binomial functions, with the pole conventions every operator
//!   relies on;
//! * [`timescale`] -- the grid model for (hZ)_a, delta derivative,
//!   h-integral, generalized polynomials, and the time-scale exponential;
//! * [`fracops`] -- left/right fractional sums and differences, the nabla
//!   and diamond fractional sums on Z, the Leibniz series, and the
//!   structural identities between them as residual checks;
//! * [`variational`] -- fractional variational problems: Euler-Lagrange and
//!   natural-boundary residuals, the Legendre necessary condition, the
//!   functional, closed-form references, and a multi-start Newton solver
//!   for extremal candidates;
//! * [`laplace`] -- the generalized Laplace transform on (hZ)_0 and the
//!   fractional integral/derivative on the span of generalized monomials;
//! * [`expr`] -- a small expression language for Lagrangians L(t, u, v, w)
//!   with symbolic differentiation.
//!
//! The `fracvar` binary exposes the `reproduce` and `solve` subcommands for
//! batch computations; see the crate examples for library usage.

// negated comparisons like !(h > 0.0) are deliberate: they reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod expr;
pub mod fracops;
pub mod laplace;
pub mod special;
pub mod timescale;
pub mod variational;

pub use error::{Error, Result};
pub use fracops::Side;
pub use timescale::{Grid, GridFunction};
pub use variational::{
    Boundary, ExtremalCandidate, Lagrangian, SolverConfig, VariationalProblem,
};
