//! The theorem-backed identities exposed as residual checks: the
//! sum/difference interchange (shift) identities and fractional summation
//! by parts. Residuals stay at rounding level for arbitrary data.

use fracvar::fracops::{shift_identity_residual, summation_by_parts_residual, Side};
use fracvar::timescale::{Grid, GridFunction};

fn main() {
    let grid = Grid::new(0.0, 0.25, 9).unwrap();
    let f = GridFunction::from_fn(grid, |t| (2.1 * t).sin() + 0.3 * t * t);

    println!("shift identity residuals (must vanish for every f):");
    for side in [Side::Left, Side::Right] {
        for nu in [0.0, 0.5, 1.7] {
            let worst = (0..grid.len() - 1)
                .map(|i| shift_identity_residual(&f, side, nu, i).unwrap().abs())
                .fold(0.0_f64, f64::max);
            println!("  {side:?} nu = {nu:<4}: worst |residual| = {worst:.3e}");
        }
    }

    println!("\nfractional summation by parts residuals:");
    let f_kappa = GridFunction::from_fn(grid.kappa(), |t| (1.3 * t).cos());
    let g = GridFunction::from_fn(grid, |t| t * t - 0.4 * t + 0.1);
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let r = summation_by_parts_residual(&f_kappa, &g, alpha).unwrap();
        println!("  alpha = {alpha}: residual = {r:.3e}");
    }
    println!("(alpha = 1 is the classical summation-by-parts formula)");
}
