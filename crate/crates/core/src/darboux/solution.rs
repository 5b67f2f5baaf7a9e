use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exp_algebra::ExpSum;

/// A solution of the free equation `−ψ'' = Eψ` that reports exact derivatives.
pub trait AnalyticSolution {
    fn energy(&self) -> Complex64;

    /// Highest derivative order the solution can supply.
    fn max_order(&self) -> usize {
        usize::MAX
    }

    /// `(ψ(x), ψ'(x), …, ψ^{(order)}(x))`.
    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64>;

    fn value(&self, x: f64) -> Complex64 {
        self.derivatives(x, 0)[0]
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

fn powers(base: Complex64, order: usize) -> impl Iterator<Item = Complex64> {
    std::iter::successors(Some(Complex64::new(1.0, 0.0)), move |p| Some(p * base)).take(order + 1)
}

/// `A·e^{ikx}` with `E = k²`; `k` may be complex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub k: Complex64,
    pub amplitude: Complex64,
}

impl PlaneWave {
    pub fn new(k: Complex64) -> Self {
        PlaneWave {
            k,
            amplitude: Complex64::new(1.0, 0.0),
        }
    }

    pub fn real(k: f64) -> Self {
        Self::new(Complex64::new(k, 0.0))
    }

    /// The plane wave of energy `e`, taking `k = √E` on the branch with `Im k ≥ 0`.
    pub fn with_energy(e: f64) -> Self {
        let k = if e >= 0.0 {
            Complex64::new(e.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-e).sqrt())
        };
        Self::new(k)
    }

    pub fn with_amplitude(mut self, amplitude: Complex64) -> Self {
        self.amplitude = amplitude;
        self
    }
}

impl AnalyticSolution for PlaneWave {
    fn energy(&self) -> Complex64 {
        self.k * self.k
    }

    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64> {
        let base = self.amplitude * (I * self.k * x).exp();
        powers(I * self.k, order).map(|p| p * base).collect()
    }
}

/// The free regular solution `sin(kx)/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineWave {
    pub k: Complex64,
}

impl SineWave {
    pub fn new(k: f64) -> Result<Self> {
        if k == 0.0 || !k.is_finite() {
            return Err(Error::InvalidK(format!("sin(kx)/k needs finite k != 0, got {k}")));
        }
        Ok(SineWave {
            k: Complex64::new(k, 0.0),
        })
    }
}

impl AnalyticSolution for SineWave {
    fn energy(&self) -> Complex64 {
        self.k * self.k
    }

    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64> {
        let ik = I * self.k;
        let (ep, em) = ((ik * x).exp(), (-ik * x).exp());
        powers(ik, order)
            .zip(powers(-ik, order))
            .map(|(p, q)| (p * ep - q * em) / (2.0 * ik))
            .collect()
    }
}

/// The free solution `cos(kx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineWave {
    pub k: Complex64,
}

impl CosineWave {
    pub fn new(k: f64) -> Self {
        CosineWave {
            k: Complex64::new(k, 0.0),
        }
    }
}

impl AnalyticSolution for CosineWave {
    fn energy(&self) -> Complex64 {
        self.k * self.k
    }

    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64> {
        let ik = I * self.k;
        let (ep, em) = ((ik * x).exp(), (-ik * x).exp());
        powers(ik, order)
            .zip(powers(-ik, order))
            .map(|(p, q)| (p * ep + q * em) * 0.5)
            .collect()
    }
}

/// A real exponential sum solving the free equation at energy `E`
/// (every rate satisfies `λ² = −E`).
#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumSolution {
    sum: ExpSum,
    energy: f64,
}

impl ExpSumSolution {
    pub fn new(sum: ExpSum, energy: f64) -> Result<Self> {
        for t in sum.terms() {
            if (t.rate * t.rate + energy).abs() > 1e-12 * energy.abs().max(1.0) {
                return Err(Error::Contract(format!(
                    "rate {} does not solve -psi'' = {energy} psi",
                    t.rate
                )));
            }
        }
        Ok(ExpSumSolution { sum, energy })
    }

    pub fn sum(&self) -> &ExpSum {
        &self.sum
    }
}

impl AnalyticSolution for ExpSumSolution {
    fn energy(&self) -> Complex64 {
        Complex64::new(self.energy, 0.0)
    }

    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64> {
        self.sum
            .derivatives(x, order)
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect()
    }
}

/// Wraps a solution so that it only reports derivatives up to `max_order`.
#[derive(Debug, Clone)]
pub struct Truncated<S> {
    pub inner: S,
    pub max_order: usize,
}

impl<S: AnalyticSolution> AnalyticSolution for Truncated<S> {
    fn energy(&self) -> Complex64 {
        self.inner.energy()
    }

    fn max_order(&self) -> usize {
        self.max_order.min(self.inner.max_order())
    }

    fn derivatives(&self, x: f64, order: usize) -> Vec<Complex64> {
        assert!(order <= self.max_order, "derivative order {order} not available");
        self.inner.derivatives(x, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_residual(s: &dyn AnalyticSolution, x: f64) -> f64 {
        let d = s.derivatives(x, 2);
        (-d[2] - s.energy() * d[0]).norm()
    }

    #[test]
    fn solutions_solve_free_equation() {
        let sols: Vec<Box<dyn AnalyticSolution>> = vec![
            Box::new(PlaneWave::real(1.3)),
            Box::new(PlaneWave::with_energy(-4.0)),
            Box::new(SineWave::new(0.7).unwrap()),
            Box::new(CosineWave::new(2.0)),
            Box::new(
                ExpSumSolution::new(
                    ExpSum::from_hyperbolic(crate::exp_algebra::Hyperbolic::Cosh, 1.5, 0.2).unwrap(),
                    -2.25,
                )
                .unwrap(),
            ),
        ];
        for s in &sols {
            for &x in &[0.0, 0.4, 1.7] {
                assert!(free_residual(s.as_ref(), x) < 1e-10);
            }
        }
    }

    #[test]
    fn sine_wave_values() {
        let s = SineWave::new(2.0).unwrap();
        let d = s.derivatives(0.3, 2);
        assert!((d[0].re - (0.6f64).sin() / 2.0).abs() < 1e-15);
        assert!((d[1].re - (0.6f64).cos()).abs() < 1e-15);
        assert!(d[0].im.abs() < 1e-15);
        assert!(SineWave::new(0.0).is_err());
    }

    #[test]
    fn exp_sum_solution_checks_energy() {
        let c = ExpSum::from_hyperbolic(crate::exp_algebra::Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        assert!(ExpSumSolution::new(c.clone(), -1.0).is_ok());
        assert!(matches!(ExpSumSolution::new(c, 1.0), Err(Error::Contract(_))));
    }
}
