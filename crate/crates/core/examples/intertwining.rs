//! Checks that `L` maps free solutions onto solutions of the transformed
//! equation, and that `L⁺L` reduces to a polynomial in the energy.

use darboux::darboux::{factorization_multiplier, verify_factorization, verify_intertwining, PlaneWave};
use darboux::oracle::UniformGrid;
use darboux::DarbouxChain;
use num_complex::Complex64;

fn main() -> darboux::Result<()> {
    let a = [0.5, 1.0, 1.5];
    let chain = DarbouxChain::alternating(&a, &[0.0; 3])?;
    let grid = UniformGrid::new(0.0, 1e-3, 2001)?;

    for e in [-4.0, -0.25, 1.0, 9.0] {
        let wave = PlaneWave::with_energy(e);
        // Jost normalization keeps L e^{ikx} of order one
        let norm: Complex64 = a.iter().map(|&aj| wave.k * Complex64::i() - aj).product();
        let wave = wave.with_amplitude(norm.inv());
        let r = verify_intertwining(&chain, &wave, &grid)?;
        println!("E = {e:>5}: intertwining residual {r:.2e}");
    }
    for e in [1.0, 4.0] {
        let wave = PlaneWave::with_energy(e);
        let r = verify_factorization(&chain, &wave, &grid)?;
        let m = factorization_multiplier(&chain, Complex64::new(e, 0.0));
        println!("E = {e}: factorization residual {r:.2e} (multiplier {:.4})", m.re);
    }
    Ok(())
}
