use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oracle::{GridFunction, UniformGrid, MIN_GRID_LEN};

use super::chain::DarbouxChain;
use super::first_order::adjoint_compose_apply;
use super::solution::AnalyticSolution;

/// Max over the interior of `grid` of `|−φ'' + V_N φ − Eφ|` for `φ = L^{(N)}ψ`,
/// with `φ''` from the five-point stencil on the samples.
pub fn verify_intertwining(
    chain: &DarbouxChain,
    psi: &dyn AnalyticSolution,
    grid: &UniformGrid,
) -> Result<f64> {
    if grid.len < MIN_GRID_LEN {
        return Err(Error::InvalidParameter(format!(
            "intertwining check needs at least {MIN_GRID_LEN} grid points"
        )));
    }
    let values = grid
        .points()
        .map(|x| chain.crum_apply(psi, x))
        .collect::<Result<Vec<Complex64>>>()?;
    let phi = GridFunction::new(grid.start, grid.step, values)?;
    let energy = psi.energy();
    let mut worst: f64 = 0.0;
    for i in 2..phi.len() - 2 {
        let x = phi.x(i);
        let v = chain.potential(x)?;
        let r = -phi.second_derivative(i) + phi.values[i] * v - phi.values[i] * energy;
        worst = worst.max(r.norm());
    }
    Ok(worst)
}

/// `∏ (E − C_i)`: the factorization polynomial `P(h_0)` on an eigensolution.
pub fn factorization_multiplier(chain: &DarbouxChain, energy: Complex64) -> Complex64 {
    chain
        .funcs()
        .iter()
        .map(|f| energy - f.eigenvalue())
        .product()
}

/// Max over `grid` of `|L^{(N)+}L^{(N)}ψ − ∏(E − C_i)ψ|`.
pub fn verify_factorization(
    chain: &DarbouxChain,
    psi: &dyn AnalyticSolution,
    grid: &UniformGrid,
) -> Result<f64> {
    let multiplier = factorization_multiplier(chain, psi.energy());
    let mut worst: f64 = 0.0;
    for x in grid.points() {
        let lhs = adjoint_compose_apply(chain, psi, x)?;
        worst = worst.max((lhs - psi.value(x) * multiplier).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::solution::{ExpSumSolution, PlaneWave, SineWave};

    fn grid() -> UniformGrid {
        UniformGrid::new(0.0, 1e-3, 2001).unwrap()
    }

    #[test]
    fn empty_chain() {
        let c = DarbouxChain::empty();
        let r = verify_intertwining(&c, &PlaneWave::real(2.0), &grid()).unwrap();
        assert!(r < 1e-8, "{r}");
    }

    #[test]
    fn one_step_regular_wave() {
        let c = DarbouxChain::alternating(&[1.0], &[0.0]).unwrap();
        let r = verify_intertwining(&c, &SineWave::new(1.0).unwrap(), &grid()).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn two_step_plane_wave() {
        let c = DarbouxChain::alternating(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        let r = verify_intertwining(&c, &PlaneWave::real(2.0), &grid()).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn factorization_cases() {
        let g = UniformGrid::spanning(0.0, 3.0, 31).unwrap();
        let c1 = DarbouxChain::alternating(&[1.0], &[0.0]).unwrap();
        assert_eq!(factorization_multiplier(&c1, Complex64::new(1.0, 0.0)).re, 2.0);
        assert!(verify_factorization(&c1, &PlaneWave::real(1.0), &g).unwrap() < 1e-6);

        let c2 = DarbouxChain::alternating(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(factorization_multiplier(&c2, Complex64::new(4.0, 0.0)).re, 40.0);
        assert!(verify_factorization(&c2, &PlaneWave::real(2.0), &g).unwrap() < 1e-5);

        let u1 = ExpSumSolution::new(c2.funcs()[0].exp_sum().clone(), -1.0).unwrap();
        assert!(verify_factorization(&c2, &u1, &g).unwrap() < 1e-10);
    }
}
