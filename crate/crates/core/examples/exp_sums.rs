//! Exponential sums: arithmetic, derivatives and the closed-form Wronskian.
//!
//! Run with `cargo run --example exp_sums`.

use darboux::exp_algebra::{wronskian, wronskian_closed_form};
use darboux::oracle::numerical_wronskian;
use darboux::{ExpSum, Hyperbolic, TransformationFunction};

fn main() -> darboux::Result<()> {
    let c = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0)?;
    let s = ExpSum::from_hyperbolic(Hyperbolic::Sinh, 2.0, 0.0)?;

    // cosh(x)·sinh(2x) collapses to four exponentials
    let product = &c * &s;
    println!("cosh(x) sinh(2x) = {product:?}");
    println!("d/dx at x = 0.5: {:.12}", product.derivative(1).eval(0.5));

    let funcs = TransformationFunction::alternating(&[1.0, 2.0, 3.0], &[0.0; 3])?;
    let closed = wronskian_closed_form(&funcs)?;
    let generic = wronskian(&funcs.iter().map(|f| f.exp_sum().clone()).collect::<Vec<_>>());
    println!("\nN = 3 Wronskian has {} terms", closed.len());
    println!("{:>6} {:>22} {:>22} {:>22}", "x", "closed form", "expanded", "numeric det");
    for x in [-2.0, 0.0, 0.7, 3.0] {
        let rows: Vec<Vec<f64>> = funcs.iter().map(|f| f.exp_sum().derivatives(x, 2)).collect();
        println!(
            "{x:>6.2} {:>22.12e} {:>22.12e} {:>22.12e}",
            closed.eval(x),
            generic.eval(x),
            numerical_wronskian(&rows)
        );
    }
    Ok(())
}
