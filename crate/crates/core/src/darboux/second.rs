use crate::error::{Error, Result};
use crate::oracle::quadrature;

use super::chain::{zeros_of, DarbouxChain};

const QUAD_TOL: f64 = 1e-13;

/// Zeros of `ṽ_i` on a window covering `[min(0, x), max(40/a_1, x)]`.
fn zeros_near(chain: &DarbouxChain, i: usize, x: f64) -> Result<Vec<f64>> {
    let minor = chain.minor(i)?;
    let a1 = chain.funcs().first().map_or(1.0, |f| f.rate());
    let lo = x.min(0.0) - 1.0 / a1;
    let hi = x.max(40.0 / a1) + 1.0 / a1;
    Ok(zeros_of(minor, lo, hi, 8000))
}

/// A base point for the reduction-of-order integral lying in the same
/// zero-free interval of `ṽ_i` as `x`.
fn anchor(chain: &DarbouxChain, i: usize, x: f64) -> Result<f64> {
    let a1 = chain.funcs().first().map_or(1.0, |f| f.rate());
    let zeros = zeros_near(chain, i, x)?;
    let left = zeros.iter().cloned().filter(|&z| z < x).fold(None, |m: Option<f64>, z| {
        Some(m.map_or(z, |m| m.max(z)))
    });
    let right = zeros.iter().cloned().find(|&z| z > x);
    if zeros.contains(&x) {
        return Err(Error::IntegrationPath { from: x, to: x, zero: x });
    }
    Ok(match (left, right) {
        (Some(l), Some(r)) => 0.5 * (l + r),
        (Some(l), None) => l + 1.0 / a1,
        (None, Some(r)) => r - 1.0 / a1,
        (None, None) => 0.0,
    })
}

/// `(v_i(x), v_i'(x))` for the second solution at energy `−a_i²` with
/// `W(v_i, ṽ_i) = 1`, from `v_i = −ṽ_i ∫_{x0}^{x} ṽ_i^{−2}`.
///
/// Fails when `ṽ_i` vanishes between `x0` and `x`.
pub fn second_solution_from(chain: &DarbouxChain, i: usize, x0: f64, x: f64) -> Result<(f64, f64)> {
    let (lo, hi) = if x0 <= x { (x0, x) } else { (x, x0) };
    if let Some(&zero) = zeros_near(chain, i, x)?
        .iter()
        .find(|&&z| z >= lo && z <= hi)
    {
        return Err(Error::IntegrationPath { from: x0, to: x, zero });
    }
    let (tv, dtv) = chain.tilde_v_with_derivative(i, x)?;
    let integrand = |t: f64| chain.tilde_v(i, t).map_or(f64::NAN, |v| 1.0 / (v * v));
    let scale = integrand(x).abs().max(integrand(x0).abs()).max(1.0);
    let integral = quadrature(integrand, x0, x, QUAD_TOL * scale * (hi - lo).max(1.0))?;
    Ok((-tv * integral, -dtv * integral - 1.0 / tv))
}

/// `v_i(x)` with an automatically chosen base point (see [`second_solution_from`]).
pub fn second_solution(chain: &DarbouxChain, i: usize, x: f64) -> Result<f64> {
    second_solution_with_derivative(chain, i, x).map(|(v, _)| v)
}

pub fn second_solution_with_derivative(chain: &DarbouxChain, i: usize, x: f64) -> Result<(f64, f64)> {
    let x0 = anchor(chain, i, x)?;
    second_solution_from(chain, i, x0, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_wronskian_and_equation() {
        let chain = DarbouxChain::alternating(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        for &x in &[0.3, 1.0, 2.2, 4.0] {
            let (v, dv) = second_solution_with_derivative(&chain, 0, x).unwrap();
            let (tv, dtv) = chain.tilde_v_with_derivative(0, x).unwrap();
            assert!((v * dtv - dv * tv - 1.0).abs() < 1e-9, "x={x}");
        }
        // −v'' + V v = −a² v by finite differences
        let h = 1e-3;
        let x0 = 0.5;
        let x = 1.7;
        let v = |t| second_solution_from(&chain, 0, x0, t).unwrap().0;
        let d2 = (-v(x - 2.0 * h) + 16.0 * v(x - h) - 30.0 * v(x) + 16.0 * v(x + h) - v(x + 2.0 * h))
            / (12.0 * h * h);
        let r = -d2 + chain.potential(x).unwrap() * v(x) + v(x);
        assert!(r.abs() < 1e-6, "{r}");
    }

    #[test]
    fn crossing_a_zero_is_rejected() {
        let chain = DarbouxChain::alternating(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        // ṽ_1 = sinh(2x)/W vanishes at the origin
        let r = second_solution_from(&chain, 0, -0.5, 0.5);
        assert!(matches!(r, Err(Error::IntegrationPath { .. })));
    }
}
