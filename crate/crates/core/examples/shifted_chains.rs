//! Shifting the transformation functions: what moves and what does not.
//!
//! A shift of the first cosh only translates the one-step potential. In a
//! two-step chain it leaves the Dirichlet level alone, while a shift of the
//! sinh function moves it. The whole-line levels never move.

use darboux::oracle::{extrapolated_levels, oracle_grid_size};
use darboux::spectral::translation_check;
use darboux::{build_model, DarbouxChain};

fn main() -> darboux::Result<()> {
    let t = translation_check(1.3, 0.9)?;
    println!("one step: displacement {:.6}, max deviation {:.2e}\n", t.displacement, t.max_deviation);

    let n = oracle_grid_size();
    println!("{:>12} {:>24} {:>24} {:>10}", "b", "half line", "whole line", "model");
    for b in [[0.0, 0.0], [0.7, 0.0], [0.0, -0.3], [0.7, -0.3]] {
        let chain = DarbouxChain::alternating(&[1.0, 2.0], &b)?;
        let v = |x: f64| chain.potential(x).unwrap();
        let half = extrapolated_levels(v, 0.0, 40.0, n)?;
        let whole = extrapolated_levels(v, -40.0, 40.0, 2 * n)?;
        let status = match build_model(&[1.0, 2.0], &b) {
            Ok(_) => "ok".to_string(),
            Err(e) => format!("{e}").chars().take(20).collect(),
        };
        println!("{:>12} {:>24} {:>24} {status:>10}", format!("{b:?}"), format!("{half:.6?}"), format!("{whole:.6?}"));
    }
    Ok(())
}
