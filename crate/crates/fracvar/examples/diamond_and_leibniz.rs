//! The nabla and diamond fractional sums on N_a, their composition law,
//! and the Leibniz product series in its terminating cases.

use fracvar::error::Result;
use fracvar::fracops::{diamond_sum, frac_sum, leibniz_series, nabla_frac_sum, Side};
use fracvar::timescale::{Grid, GridFunction};

fn main() -> Result<()> {
    let grid = Grid::new(0.0, 1.0, 9)?;
    let f = GridFunction::from_fn(grid, |t| 1.0 / (1.0 + t));

    println!("delta and nabla fractional sums agree through the shift:");
    for i in [2, 5, 8] {
        let delta = frac_sum(&f, Side::Left, 0.5, i)?;
        let nabla = nabla_frac_sum(&f, 0.5, i)?;
        println!("  t = {i}: delta {delta:.10}  nabla {nabla:.10}  gap {:.1e}", (delta - nabla).abs());
    }

    println!("\ndiamond sums interpolate between the two branches:");
    for gamma in [0.0, 0.25, 0.5, 0.75, 1.0] {
        println!(
            "  gamma = {gamma:<4}: {:.10}",
            diamond_sum(&f, 0.7, 0.4, gamma, 6)?
        );
    }

    println!("\ncomposition law residual at gamma = 0.5:");
    let (a1, b1, a2, b2, gm) = (0.3, 0.7, 0.7, 0.3, 0.5);
    let inner: Result<Vec<f64>> = (0..f.len()).map(|i| diamond_sum(&f, a2, b2, gm, i)).collect();
    let inner = GridFunction::new(grid, inner?)?;
    let mut worst: f64 = 0.0;
    for i in 0..f.len() {
        let lhs = diamond_sum(&inner, a1, b1, gm, i)?;
        let rhs = gm * diamond_sum(&f, a1 + a2, b1 + a2, gm, i)?
            + (1.0 - gm) * diamond_sum(&f, a1 + b2, b1 + b2, gm, i)?;
        worst = worst.max((lhs - rhs).abs());
    }
    println!("  worst |lhs - rhs| = {worst:.3e}");

    println!("\nLeibniz series for g(t) = t (terminates at k = 1):");
    let g = GridFunction::from_fn(grid, |t| t);
    let prod = GridFunction::new(
        grid,
        f.values().iter().zip(g.values()).map(|(a, b)| a * b).collect(),
    )?;
    for i in [3, 6, 8] {
        let direct = diamond_sum(&prod, 0.45, 0.8, 1.0, i)?;
        let series = leibniz_series(&f, &g, 0.45, 0.8, 1.0, i, 1)?;
        println!("  t = {i}: direct {direct:.10}  series {series:.10}");
    }
    Ok(())
}
