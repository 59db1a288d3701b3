//! Left and right fractional sums and differences on the grid, including
//! the identity limit as the order vanishes and the shifted-domain
//! presentation.

use fracvar::fracops::{frac_diff, frac_sum, frac_sum_shifted, Side};
use fracvar::timescale::{Grid, GridFunction};

fn main() {
    let grid = Grid::new(0.0, 0.5, 7).unwrap();
    let f = GridFunction::from_fn(grid, |t| t * (3.0 - t));

    println!("left fractional sums of order nu at t = 1.5:");
    let i = grid.index_of(1.5).unwrap();
    for nu in [0.0, 0.25, 0.5, 1.0, 2.0] {
        println!("  nu = {nu:<5}: {:.10}", frac_sum(&f, Side::Left, nu, i).unwrap());
    }
    println!("(nu = 0 is the identity; nu = 1 is the running h-integral)");

    println!("\nidentity limit: |sum(nu) - f(t)| as nu -> 0:");
    for nu in [0.1, 0.01, 0.001] {
        let gap = (frac_sum(&f, Side::Left, nu, i).unwrap() - f.value(i)).abs();
        println!("  nu = {nu:<6}: {gap:.3e}");
    }

    println!("\nfractional differences of order alpha at t = 1.5:");
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let left = frac_diff(&f, Side::Left, alpha, i).unwrap();
        let right = frac_diff(&f, Side::Right, alpha, i).unwrap();
        println!("  alpha = {alpha}: left {left:+.8}   right {right:+.8}");
    }
    let fwd = (f.value(i + 1) - f.value(i)) / grid.h();
    println!("  (alpha = 1 reduces to the plain forward difference {fwd:+.8})");

    println!("\nshifted-domain presentation of the order-0.5 left sum:");
    let shifted = frac_sum_shifted(&f, Side::Left, 0.5).unwrap();
    for j in [0, 3, 6] {
        println!(
            "  value {:+.8} attached to t = {} (grid point {} + shift {})",
            shifted.value(j),
            shifted.position(j),
            shifted.grid().point(j),
            shifted.shift()
        );
    }
}
