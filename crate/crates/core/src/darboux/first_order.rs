use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exp_algebra::ExpSum;

use super::chain::DarbouxChain;
use super::jet::Jet;
use super::solution::AnalyticSolution;

/// `(Lψ)(x)` for the first-order operator `L = −u'/u + d/dx`, whose kernel is `span{u}`.
pub fn first_order_apply(
    u: &impl AsRef<ExpSum>,
    psi: &dyn AnalyticSolution,
    x: f64,
) -> Result<Complex64> {
    let u = u.as_ref();
    let (val, _) = u.eval_scaled(x);
    if val == 0.0 || !val.is_finite() {
        return Err(Error::Pole { x });
    }
    let log_slope = u.derivative(1).ratio_at(u, x);
    let d = psi.derivatives(x, 1);
    Ok(d[1] - d[0] * log_slope)
}

/// One Darboux step on jets: `g ↦ g' − ℓ g` with `ℓ = u'/u` the log-derivative of the kernel.
fn step(log_slope: &Jet, g: &Jet) -> Jet {
    let lower = g.order() - 1;
    &g.derivative() - &(&log_slope.truncate(lower) * &g.truncate(lower))
}

fn log_slope(kernel: &Jet, x: f64) -> Result<Jet> {
    if kernel.value().norm() == 0.0 || !kernel.value().is_finite() {
        return Err(Error::Pole { x });
    }
    Ok(kernel.derivative().div(kernel))
}

/// Runs the chain `L_N ⋯ L_1` pointwise on jets of order `order`.
///
/// Returns the transformed jet of `ψ` (order `order − N`) and the
/// log-derivative jets of the intermediate kernels `v_k = L_{k−1}⋯L_1 u_k`.
fn forward(
    chain: &DarbouxChain,
    psi: &dyn AnalyticSolution,
    x: f64,
    order: usize,
) -> Result<(Jet, Vec<Jet>)> {
    let n = chain.len();
    if psi.max_order() < order {
        return Err(Error::Contract(format!(
            "solution supplies derivatives up to order {}, composition needs {order}",
            psi.max_order()
        )));
    }
    // Each kernel may carry an arbitrary constant factor; scaling keeps large x finite.
    let mut kernels: Vec<Jet> = chain
        .funcs()
        .iter()
        .map(|f| Jet::from_real(&f.exp_sum().derivatives_scaled(x, order).0))
        .collect();
    let mut target = Jet::new(psi.derivatives(x, order));
    let mut slopes = Vec::with_capacity(n);
    for s in 0..n {
        let ell = log_slope(&kernels[s], x)?;
        for k in kernels.iter_mut().skip(s + 1) {
            *k = step(&ell, k);
        }
        target = step(&ell, &target);
        slopes.push(ell);
    }
    Ok((target, slopes))
}

/// `L_N(⋯(L_1 ψ))` evaluated step by step, each `L_k = −v_k'/v_k + d/dx`
/// built from the transformed kernel `v_k`. Independent of the determinant
/// formula used by [`DarbouxChain::crum_apply`].
pub fn compose_apply(chain: &DarbouxChain, psi: &dyn AnalyticSolution, x: f64) -> Result<Complex64> {
    let (target, _) = forward(chain, psi, x, chain.len())?;
    Ok(target.value())
}

/// `(L^{(N)+} L^{(N)} ψ)(x)`.
///
/// The adjoint of `L_k` is `−(ℓ_k + d/dx)`, i.e. minus the first-order
/// operator whose kernel is the transformed-side function `1/v_k`; the
/// adjoint chain runs in reverse order.
pub fn adjoint_compose_apply(
    chain: &DarbouxChain,
    psi: &dyn AnalyticSolution,
    x: f64,
) -> Result<Complex64> {
    let n = chain.len();
    let (mut g, slopes) = forward(chain, psi, x, 2 * n)?;
    for ell in slopes.iter().rev() {
        let inverse_kernel_slope = -ell;
        g = -&step(&inverse_kernel_slope, &g);
    }
    Ok(g.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::function::TransformationFunction;
    use crate::darboux::solution::{ExpSumSolution, PlaneWave};
    use crate::exp_algebra::Hyperbolic;

    #[test]
    fn kernel_and_partner() {
        let u = TransformationFunction::new(Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        let self_sol = ExpSumSolution::new(u.exp_sum().clone(), -1.0).unwrap();
        let partner = ExpSumSolution::new(u.partner(), -1.0).unwrap();
        for &x in &[-1.0, 0.0, 0.5, 3.0] {
            assert!(first_order_apply(&u, &self_sol, x).unwrap().norm() < 1e-14);
            let v = first_order_apply(&u, &partner, x).unwrap();
            assert!((v.re - 1.0 / x.cosh()).abs() < 1e-14);
        }
    }

    #[test]
    fn plane_wave_sign_convention() {
        // with D = +d/dx, L e^{ix} at 0 is −tanh(0)·1 + i = i
        let u = TransformationFunction::new(Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        let v = first_order_apply(&u, &PlaneWave::real(1.0), 0.0).unwrap();
        assert!((v - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn pole_at_zero_of_kernel() {
        let u = TransformationFunction::new(Hyperbolic::Sinh, 1.0, 0.0).unwrap();
        assert_eq!(
            first_order_apply(&u, &PlaneWave::real(1.0), 0.0),
            Err(Error::Pole { x: 0.0 })
        );
    }

    #[test]
    fn single_step_composition_matches_first_order() {
        let chain = DarbouxChain::alternating(&[1.3], &[0.4]).unwrap();
        let psi = PlaneWave::real(0.9);
        for &x in &[0.0, 0.8, 5.0] {
            let a = compose_apply(&chain, &psi, x).unwrap();
            let b = first_order_apply(&chain.funcs()[0], &psi, x).unwrap();
            let c = chain.crum_apply(&psi, x).unwrap();
            assert!((a - b).norm() < 1e-13);
            assert!((a - c).norm() < 1e-13);
        }
    }

    #[test]
    fn one_step_factorization() {
        // L⁺L = h_0 − C, so on e^{ikx}: k² + a²
        let chain = DarbouxChain::alternating(&[1.0], &[0.0]).unwrap();
        let psi = PlaneWave::real(1.0);
        for &x in &[0.0, 1.0, 2.5] {
            let lhs = adjoint_compose_apply(&chain, &psi, x).unwrap();
            assert!((lhs - psi.value(x) * 2.0).norm() < 1e-12);
        }
    }
}
