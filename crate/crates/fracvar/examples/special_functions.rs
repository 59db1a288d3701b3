//! Gamma machinery: signed log-gamma, generalized factorials, binomials,
//! and the pole conventions the fractional operators rely on.

use fracvar::special::{
    binomial_real, h_falling_factorial, log_gamma_signed, rising_factorial,
};

fn main() {
    println!("signed log-gamma:");
    for x in [1.0, 5.0, 0.5, -0.5, -2.5, 170.0] {
        let g = log_gamma_signed(x).unwrap();
        println!(
            "  Gamma({x:>6}) = {:+.12e}   (log|Gamma| = {:.12}, sign {})",
            g.value(),
            g.log_abs,
            g.sign
        );
    }
    println!("  Gamma at a pole: {:?}", log_gamma_signed(-3.0).unwrap_err());

    println!("\nfalling factorials x_h^(y) = h^y Gamma(x/h+1)/Gamma(x/h+1-y):");
    println!("  5^(2)            = {}", h_falling_factorial(5.0, 2.0, 1.0).unwrap());
    println!("  2.5^(0.5)        = {:.12}", h_falling_factorial(2.5, 0.5, 1.0).unwrap());
    println!(
        "  (0.75)_0.25^(1.5) = {:.12}",
        h_falling_factorial(0.75, 1.5, 0.25).unwrap()
    );
    println!(
        "  denominator pole gives exactly zero: 0.5^(1.5) = {}",
        h_falling_factorial(0.5, 1.5, 1.0).unwrap()
    );
    println!(
        "  double pole takes the limit: (-1)^(2) = {}",
        h_falling_factorial(-1.0, 2.0, 1.0).unwrap()
    );

    println!("\nrising factorials t^(overline y) = Gamma(t+y)/Gamma(t):");
    println!("  3^(overline 2)   = {}", rising_factorial(3.0, 2.0).unwrap());
    println!("  2^(overline 0.5) = {:.12}", rising_factorial(2.0, 0.5).unwrap());

    println!("\ngeneralized binomial coefficients:");
    println!("  C(4, 2)    = {}", binomial_real(4.0, 2.0).unwrap());
    println!("  C(1/2, 2)  = {}", binomial_real(0.5, 2.0).unwrap());
    println!("  C(-0.3, 3) = {:.12}", binomial_real(-0.3, 3.0).unwrap());
}
