use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `F(k) = k^s ∏_{a ∈ zeros} (k − ia) / ∏_{a ∈ poles} (k + ia)`, `s ∈ {0, 1}`.
///
/// Zeros sit at `ia` on the positive imaginary axis (one per bound level, plus
/// the origin for odd chains); poles sit at `−ia` in the lower half plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalJost {
    pub zero_rates: Vec<f64>,
    pub pole_rates: Vec<f64>,
    pub origin_zero: bool,
}

impl RationalJost {
    /// The free Jost function `F ≡ 1`.
    pub fn one() -> Self {
        RationalJost {
            zero_rates: Vec::new(),
            pole_rates: Vec::new(),
            origin_zero: false,
        }
    }

    pub fn eval(&self, k: Complex64) -> Result<Complex64> {
        let mut den = Complex64::new(1.0, 0.0);
        for &a in &self.pole_rates {
            let f = k + I * a;
            if f == Complex64::new(0.0, 0.0) {
                return Err(Error::InvalidK(format!("k = {k} is a pole of the Jost function")));
            }
            den *= f;
        }
        let mut num = if self.origin_zero { k } else { Complex64::new(1.0, 0.0) };
        for &a in &self.zero_rates {
            num *= k - I * a;
        }
        Ok(num / den)
    }

    pub fn zeros(&self) -> Vec<Complex64> {
        let origin = self.origin_zero.then_some(Complex64::new(0.0, 0.0));
        origin
            .into_iter()
            .chain(self.zero_rates.iter().map(|&a| I * a))
            .collect()
    }

    pub fn poles(&self) -> Vec<Complex64> {
        self.pole_rates.iter().map(|&a| -I * a).collect()
    }

    /// `δ(k) = −arg F(k)` for real `k > 0` on the branch continuous in `k`
    /// with `δ → 0` as `k → ∞`: every factor contributes `arctan(a/k)`.
    pub fn phase(&self, k: f64) -> f64 {
        self.zero_rates
            .iter()
            .chain(&self.pole_rates)
            .map(|&a| (a / k).atan())
            .sum()
    }
}

/// Modulus and phase of the Jost function at a real wavenumber, so that the
/// regular solution behaves as `(F_1/k) sin(kx + δ)` for large `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringPoint {
    pub k: f64,
    pub modulus: f64,
    pub phase: f64,
}
