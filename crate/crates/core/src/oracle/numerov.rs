use crate::error::{Error, Result};

use super::grid::GridFunction;

/// Integrates `−y'' + V(x) y = E y` from `x_start` to `x_end` with the Numerov scheme.
///
/// The step is adjusted so that an integer number of steps lands exactly on
/// `x_end`. The second starting value comes from one RK4 sweep over the first
/// step with 32 substeps, which is far more accurate than the scheme itself.
pub fn integrate_schrodinger(
    v: impl Fn(f64) -> f64,
    energy: f64,
    y0: f64,
    y0p: f64,
    x_start: f64,
    x_end: f64,
    h: f64,
) -> Result<GridFunction<f64>> {
    if !(h > 0.0) || !(x_end > x_start) {
        return Err(Error::InvalidParameter(format!(
            "need h > 0 and x_end > x_start, got h={h}, range [{x_start}, {x_end}]"
        )));
    }
    let steps = ((x_end - x_start) / h).round().max(4.0) as usize;
    let h = (x_end - x_start) / steps as f64;
    let g = |x: f64| -> Result<f64> {
        let vx = v(x);
        if !vx.is_finite() {
            return Err(Error::Integration(format!("potential is not finite at x = {x}")));
        }
        Ok(vx - energy)
    };

    let mut gs = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        gs.push(g(x_start + h * i as f64)?);
    }

    let y1 = rk4_first_step(&g, x_start, y0, y0p, h)?;
    let mut y = Vec::with_capacity(steps + 1);
    y.push(y0);
    y.push(y1);
    let c = h * h / 12.0;
    for n in 1..steps {
        let next = (2.0 * y[n] * (1.0 + 5.0 * c * gs[n]) - y[n - 1] * (1.0 - c * gs[n - 1]))
            / (1.0 - c * gs[n + 1]);
        y.push(next);
    }
    GridFunction::new(x_start, h, y)
}

fn rk4_first_step(
    g: &impl Fn(f64) -> Result<f64>,
    x0: f64,
    y0: f64,
    y0p: f64,
    h: f64,
) -> Result<f64> {
    const SUBSTEPS: usize = 32;
    let dh = h / SUBSTEPS as f64;
    let (mut x, mut y, mut p) = (x0, y0, y0p);
    for _ in 0..SUBSTEPS {
        let k1 = (p, g(x)? * y);
        let k2 = (p + 0.5 * dh * k1.1, g(x + 0.5 * dh)? * (y + 0.5 * dh * k1.0));
        let k3 = (p + 0.5 * dh * k2.1, g(x + 0.5 * dh)? * (y + 0.5 * dh * k2.0));
        let k4 = (p + dh * k3.1, g(x + dh)? * (y + dh * k3.0));
        y += dh / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        p += dh / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        x += dh;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_sine() {
        let sol = integrate_schrodinger(|_| 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1e-3).unwrap();
        assert!((sol.values.last().unwrap() - 1f64.sin()).abs() < 1e-8);
    }

    #[test]
    fn free_exponential() {
        let sol = integrate_schrodinger(|_| 0.0, -1.0, 1.0, 1.0, 0.0, 2.0, 1e-3).unwrap();
        for (i, y) in sol.values.iter().enumerate().step_by(250) {
            let x = sol.x(i);
            assert!((y - x.exp()).abs() < 1e-9 * x.exp());
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let max_err = |h: f64| {
            let sol = integrate_schrodinger(|_| 0.0, 1.0, 0.0, 1.0, 0.0, 10.0, h).unwrap();
            sol.values
                .iter()
                .enumerate()
                .map(|(i, y)| (y - sol.x(i).sin()).abs())
                .fold(0.0, f64::max)
        };
        let ratio = max_err(0.1) / max_err(0.05);
        assert!(ratio >= 14.0, "halving h only reduced the error by {ratio}");
    }

    #[test]
    fn non_finite_potential() {
        let r = integrate_schrodinger(|x| 1.0 / (x - 0.5), 0.0, 0.0, 1.0, 0.0, 1.0, 0.25);
        assert!(matches!(r, Err(Error::Integration(_))));
    }
}
