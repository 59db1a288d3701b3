//! The (hZ)_a grid model: delta derivative, h-integral, generalized
//! polynomials h_k, and the time-scale exponential.

use fracvar::timescale::{
    delta_derivative, exp_ts, generalized_polynomial, h_integral, polynomial_q,
    polynomial_real, Grid, GridFunction,
};

fn main() {
    let grid = Grid::new(0.0, 0.25, 9).unwrap();
    println!("grid: a = {}, h = {}, b = {}, {} points", grid.a(), grid.h(), grid.b(), grid.len());

    let f = GridFunction::from_fn(grid, |t| t * t);
    println!("\ndelta derivative of t^2 (equals 2t + h):");
    for i in 0..4 {
        println!(
            "  f^Delta({}) = {}",
            grid.point(i),
            delta_derivative(&f, i).unwrap()
        );
    }

    println!("\nh-integral of t^2 over [0, 2]: {}", h_integral(&f, 0, 8).unwrap());
    println!("reversed limits negate:        {}", h_integral(&f, 8, 0).unwrap());

    println!("\ngeneralized polynomials h_k(t, 0) on the grid:");
    for k in 0..=3 {
        let row: Vec<String> = (0..5)
            .map(|t| format!("{:+.5}", generalized_polynomial(k, t, 0, &grid).unwrap()))
            .collect();
        println!("  k = {k}: {}", row.join("  "));
    }
    println!(
        "continuous counterpart (t-s)^k/k! at t=1, s=0, k=3: {}",
        polynomial_real(3, 1.0, 0.0)
    );
    println!(
        "quantum-scale counterpart h_2(9, 1) on q^Z, q=3:   {}",
        polynomial_q(2, 9.0, 1.0, 3.0)
    );

    println!("\ntime-scale exponential e_z(t, 0) = (1 + h z)^(t/h), z = 0.8:");
    for i in [0, 2, 4, 8] {
        println!("  e(t = {}) = {:.8}", grid.point(i), exp_ts(0.8, i, 0, &grid).unwrap());
    }
}
