//! Solve the integer-grid fractional variational problems and print the
//! extremal tables: the quadratic problem on [0, 4], its two-term variant
//! on [0, 2], and the linear-potential problem on [0, 2].

use std::collections::HashMap;

use fracvar::timescale::Grid;
use fracvar::variational::{
    reference_solution, solve_extremals, Boundary, ExprLagrangian, ReferenceSolution,
    SolverConfig, VariationalProblem,
};

fn cfg() -> SolverConfig {
    SolverConfig { n_starts: 16, radius: 2.0, newton_tol: 1e-13, ..SolverConfig::default() }
}

fn main() {
    let alphas = [0.25, 0.5, 0.75, 1.0];

    println!("L = v^2 on [0, 4], y(0) = 0, y(4) = 1:");
    println!("{:>6} {:>18} {:>18} {:>18} {:>18}", "alpha", "y(1)", "y(2)", "y(3)", "J");
    let grid = Grid::new(0.0, 1.0, 5).unwrap();
    for alpha in alphas {
        let lag = ExprLagrangian::parse("v^2", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            grid,
            lag,
            alpha,
            alpha,
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )
        .unwrap();
        let c = &solve_extremals(&p, &cfg()).unwrap()[0];
        println!(
            "{alpha:>6} {:>18.14} {:>18.14} {:>18.14} {:>18.14}",
            c.y.value(1),
            c.y.value(2),
            c.y.value(3),
            c.functional_value
        );
    }

    println!("\nL = v^2 + w^2 on [0, 2], y(0) = 0, y(2) = 1, beta = alpha:");
    println!("{:>6} {:>18} {:>18}", "alpha", "y(1)", "J");
    let grid2 = Grid::new(0.0, 1.0, 3).unwrap();
    for alpha in alphas {
        let lag = ExprLagrangian::parse("v^2+w^2", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            grid2,
            lag,
            alpha,
            alpha,
            Boundary::Fixed(0.0),
            Boundary::Fixed(1.0),
        )
        .unwrap();
        let c = &solve_extremals(&p, &cfg()).unwrap()[0];
        println!("{alpha:>6} {:>18.14} {:>18.14}", c.y.value(1), c.functional_value);
    }

    println!("\nL = (1/2)v^2 - u on [0, 2], zero boundary values:");
    println!("{:>6} {:>18} {:>18} {:>18}", "alpha", "y(1)", "J", "1/(alpha^2+1)");
    for alpha in alphas {
        let lag = ExprLagrangian::parse("(1/2)*v^2-u", HashMap::new()).unwrap();
        let p = VariationalProblem::new(
            grid2,
            lag,
            alpha,
            alpha,
            Boundary::Fixed(0.0),
            Boundary::Fixed(0.0),
        )
        .unwrap();
        let c = &solve_extremals(&p, &cfg()).unwrap()[0];
        let closed = reference_solution(ReferenceSolution::Z3 { alpha }).unwrap();
        println!(
            "{alpha:>6} {:>18.14} {:>18.14} {:>18.14}",
            c.y.value(1),
            c.functional_value,
            closed
        );
    }
}
