//! Free-endpoint problems: the natural boundary condition replaces the
//! missing fixed value, and the solver appends the endpoint to the unknowns.

use fracvar::fracops::Side;
use fracvar::timescale::Grid;
use fracvar::variational::{
    solve_extremals, Boundary, FdLagrangian, SolverConfig, VariationalProblem,
};

fn main() {
    let grid = Grid::new(0.0, 0.25, 5).unwrap();
    let lag = FdLagrangian::new(|_t, u: f64, v: f64, w: f64| {
        v * v + 0.5 * w * w + 0.3 * u * u
    });
    let p = VariationalProblem::new(
        grid,
        lag,
        0.6,
        0.35,
        Boundary::Free,
        Boundary::Fixed(0.5),
    )
    .unwrap();

    let cfg = SolverConfig { n_starts: 64, radius: 2.0, ..SolverConfig::default() };
    let best = &solve_extremals(&p, &cfg).unwrap()[0];
    println!("free left endpoint, y(b) = 0.5 fixed:");
    for (i, t) in grid.points().enumerate() {
        println!("  y({t}) = {:+.10}", best.y.value(i));
    }
    println!("functional value J = {:.12}", best.functional_value);
    println!(
        "natural boundary residual at the free end: {:.3e}",
        p.natural_bc_residual(&best.y, Side::Left).unwrap()
    );
    println!(
        "worst Euler-Lagrange residual:             {:.3e}",
        best.el_residual_inf
    );
}
