//! Scattering phase of a four-step chain, from the rational Jost function
//! and from a fit of the regular solution far from the origin.

use darboux::build_model;
use darboux::oracle::fit_sinusoid;

fn main() -> darboux::Result<()> {
    let a = [1.0, 2.0, 3.0, 4.0];
    let model = build_model(&a, &[0.0; 4])?;
    println!("zeros {:?}", model.jost().zeros());
    println!("poles {:?}\n", model.jost().poles());

    println!("{:>6} {:>12} {:>12} {:>12}", "k", "|F|", "delta", "fitted");
    for k in [0.05, 0.3, 1.0, 3.0, 10.0, 100.0] {
        let p = model.phase_shift(k)?;
        let reg = model.regular(k)?;
        let xs: Vec<f64> = (0..400).map(|i| 30.0 + 0.025 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| reg.eval(x)).collect::<Result<_, _>>()?;
        let (_, fitted) = fit_sinusoid(k, &xs, &ys)?;
        // the fit only knows delta modulo π
        let fitted = fitted + std::f64::consts::PI * ((p.phase - fitted) / std::f64::consts::PI).round();
        println!("{k:>6} {:>12.8} {:>12.8} {fitted:>12.8}", p.modulus, p.phase);
    }
    println!("\ndelta(0+) should be 2π: {:.8}", model.jost().phase(1e-9));
    Ok(())
}
