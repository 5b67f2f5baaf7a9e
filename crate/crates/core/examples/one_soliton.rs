//! The one-step chain `cosh(ax)` and its sech² potential.

use darboux::build_model;
use num_complex::Complex64;

fn main() -> darboux::Result<()> {
    let a = 1.5;
    let model = build_model(&[a], &[0.0])?;

    println!("{:>6} {:>20} {:>20}", "x", "V(x)", "-2a²sech²(ax)");
    for i in 0..=8 {
        let x = 0.5 * i as f64;
        let exact = -2.0 * a * a / (a * x).cosh().powi(2);
        println!("{x:>6.2} {:>20.14} {exact:>20.14}", model.potential(x)?);
    }

    // no Dirichlet level; the Jost function is k/(k + ia)
    println!("\nlevels: {:?}", model.levels());
    for k in [0.5, 1.5, 6.0] {
        let f = model.jost_function(Complex64::new(k, 0.0))?;
        let p = model.phase_shift(k)?;
        println!("k = {k}: F = {f:.6}, |F| = {:.6}, delta = {:.6}", p.modulus, p.phase);
    }
    Ok(())
}
