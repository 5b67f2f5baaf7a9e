//! The independent partner of each `1/φ_i`-type solution, built by quadrature.

use darboux::darboux::second_solution_with_derivative;
use darboux::DarbouxChain;

fn main() -> darboux::Result<()> {
    let chain = DarbouxChain::alternating(&[1.0, 2.0, 3.0], &[0.0; 3])?;
    for i in 0..chain.len() {
        println!("function {i}");
        for x in [0.5, 1.0, 2.0] {
            let (v, dv) = second_solution_with_derivative(&chain, i, x)?;
            let (t, dt) = chain.tilde_v_with_derivative(i, x)?;
            println!("  x = {x}: v = {v:>14.8e}, W(v, v~) = {:.12}", v * dt - dv * t);
        }
    }
    Ok(())
}
