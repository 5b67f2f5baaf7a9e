//! Dirichlet levels of a six-step chain against a finite-difference solve.
//!
//! `DARBOUX_ORACLE_GRID` sets the coarse grid size.

use darboux::build_model;
use darboux::oracle::{extrapolated_levels, oracle_grid_size};

fn main() -> darboux::Result<()> {
    let a = [0.8, 1.1, 1.9, 2.4, 3.0, 3.7];
    let model = build_model(&a, &[0.0; 6])?;
    let chain = model.chain();
    let length = 40.0 / a[0];
    let oracle = extrapolated_levels(|x| chain.potential(x).unwrap(), 0.0, length, oracle_grid_size())?;

    println!("{:>5} {:>8} {:>14} {:>18} {:>10}", "level", "index", "exact", "finite diff", "diff");
    for (j, (l, e)) in model.levels().iter().zip(&oracle).enumerate() {
        println!(
            "{j:>5} {:>8} {:>14.8} {e:>18.10} {:>10.2e}",
            l.index,
            l.energy,
            (l.energy - e).abs()
        );
    }

    // eigenfunctions near the origin, each normalized on [0, ∞)
    println!("\n{:>6} {:>14} {:>14} {:>14}", "x", "phi_0", "phi_1", "phi_2");
    for i in 0..=6 {
        let x = 0.5 * i as f64;
        let phi: Vec<f64> = (0..3).map(|j| model.eigenfunction(j, x)).collect::<Result<_, _>>()?;
        println!("{x:>6.2} {:>14.8} {:>14.8} {:>14.8}", phi[0], phi[1], phi[2]);
    }
    Ok(())
}
