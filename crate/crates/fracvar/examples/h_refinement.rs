//! Grid refinement: the order-3/4 quadratic problem on [0, 1] approaches
//! the continuous Riemann-Liouville extremal as h shrinks.

use std::collections::HashMap;

use fracvar::timescale::Grid;
use fracvar::variational::{
    reference_solution, solve_extremals, Boundary, ExprLagrangian, ReferenceSolution,
    SolverConfig, VariationalProblem,
};

fn main() {
    let cfg = SolverConfig { n_starts: 8, radius: 2.0, newton_tol: 1e-13, ..SolverConfig::default() };
    println!("minimize integral (1/2)(left diff order 3/4 of y)^2, y(0)=0, y(1)=1\n");
    println!("{:>10} {:>16} {:>22}", "h", "y(1/2)", "|y(1/2) - continuous|");
    let reference = reference_solution(ReferenceSolution::Hz2Continuous { t: 0.5 }).unwrap();
    for h in [0.5, 0.125, 0.0625, 1.0 / 30.0] {
        let grid = Grid::from_interval(0.0, 1.0, h).unwrap();
        let lag = ExprLagrangian::parse("(1/2)*v^2", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            grid,
            lag,
            0.75,
            0.75,
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )
        .unwrap();
        let c = &solve_extremals(&p, &cfg).unwrap()[0];
        let at_half = c.y.value(grid.index_of(0.5).unwrap());
        println!("{h:>10.6} {:>16.10} {:>22.10}", at_half, (at_half - reference).abs());
    }
    println!("\ncontinuous reference y(1/2) = {reference:.10}");
    println!("(y(t) = 1/2 integral_0^t ((1-x)(t-x))^(-1/4) dx by tanh-sinh quadrature)");
}
