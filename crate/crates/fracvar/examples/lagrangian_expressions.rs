//! The Lagrangian expression language: parsing, printing, evaluation, and
//! symbolic differentiation down to the second partials.

use std::collections::HashMap;

use fracvar::expr::{differentiate, eval_ast, parse, Bindings, Var};

fn main() {
    let params: HashMap<String, f64> = [("theta".to_string(), 2.0)].into();
    for source in ["v^2", "(1/2)*v^2-u", "v^3+theta*w^2", "-v^2+t*u"] {
        let ast = parse(source).unwrap();
        let env = Bindings::new(1.0, 0.5, 2.0, -1.0, &params);
        println!("{source}");
        println!("  value at (t,u,v,w) = (1, 0.5, 2, -1):  {}", eval_ast(&ast, &env).unwrap());
        for var in [Var::U, Var::V, Var::W] {
            let d = differentiate(&ast, var);
            println!("  d/d{var:?}: {d}");
        }
        let dvv = differentiate(&differentiate(&ast, Var::V), Var::V);
        println!("  d2/dv2: {dvv}");
        println!();
    }

    println!("parse errors carry byte offsets:");
    for bad in ["v^w", "(1+u", "theta*"] {
        println!("  {bad:?}: {}", parse(bad).unwrap_err());
    }
}
