//! Multi-start screening of a cubic fractional problem: the Euler-Lagrange
//! system has many roots and the Legendre necessary condition eliminates
//! most of them.

use std::collections::HashMap;

use fracvar::timescale::Grid;
use fracvar::variational::{
    solve_extremals, Boundary, ExprLagrangian, SolverConfig, VariationalProblem,
};

fn main() {
    // integral of v^3 + theta w^2 on [0, 1], h = 1/4, alpha = 0.8, beta = 0.5
    let grid = Grid::new(0.0, 0.25, 5).unwrap();
    let params: HashMap<String, f64> = [("theta".to_string(), 1.0)].into();
    let lag = ExprLagrangian::parse("v^3+theta*w^2", params).unwrap();
    let p = VariationalProblem::new(
        grid,
        lag,
        0.8,
        0.5,
        Boundary::Fixed(0.0),
        Boundary::Fixed(1.0),
    )
    .unwrap();

    let candidates = solve_extremals(&p, &SolverConfig::default()).unwrap();
    println!("{} Euler-Lagrange candidates (sorted by functional value):\n", candidates.len());
    println!(
        "{:>2} {:>12} {:>12} {:>12} {:>14} {:>10} Legendre",
        "#", "y(1/4)", "y(1/2)", "y(3/4)", "J", "residual"
    );
    for (i, c) in candidates.iter().enumerate() {
        println!(
            "{:>2} {:>12.7} {:>12.7} {:>12.7} {:>14.7} {:>10.1e} {}",
            i + 1,
            c.y.value(1),
            c.y.value(2),
            c.y.value(3),
            c.functional_value,
            c.el_residual_inf,
            if c.legendre_verified { "verified" } else { "not verified" }
        );
    }
    println!("\nper-point Legendre values of the best verified candidate:");
    if let Some(best) = candidates.iter().find(|c| c.legendre_verified) {
        for (i, v) in best.legendre_values.iter().enumerate() {
            println!("  t = {}: {v:+.6}", grid.point(i));
        }
    }
}
