//! The closed-form regular solution against direct Numerov integration.

use darboux::build_model;
use darboux::oracle::integrate_schrodinger;

fn main() -> darboux::Result<()> {
    let model = build_model(&[1.0, 2.0, 3.0], &[0.0; 3])?;
    let k = 1.7;
    let reg = model.regular(k)?;
    let chain = model.chain();
    let numeric = integrate_schrodinger(|x| chain.potential(x).unwrap(), k * k, 0.0, 1.0, 0.0, 10.0, 1e-3)?;

    println!("{:>6} {:>18} {:>18} {:>10}", "x", "closed form", "numerov", "diff");
    let mut worst: f64 = 0.0;
    for (i, &y) in numeric.values.iter().enumerate() {
        let x = numeric.x(i);
        let exact = reg.eval(x)?;
        worst = worst.max((exact - y).abs());
        if i % 1000 == 0 {
            println!("{x:>6.2} {exact:>18.12} {y:>18.12} {:>10.2e}", (exact - y).abs());
        }
    }
    println!("max deviation {worst:.2e}");
    Ok(())
}
