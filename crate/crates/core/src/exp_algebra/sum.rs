use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance under which two rates are treated as the same rate.
pub const RATE_MERGE_TOL: f64 = 1e-12;

/// A single term `c·e^{λx}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpTerm {
    pub coefficient: f64,
    pub rate: f64,
}

impl ExpTerm {
    /// Builds `c·e^{λx + μ}`, folding the shift into the coefficient.
    pub fn new(coefficient: f64, rate: f64, shift: f64) -> Self {
        ExpTerm {
            coefficient: coefficient * shift.exp(),
            rate,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficient * (self.rate * x).exp()
    }
}

/// Which hyperbolic function a two-term sum encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hyperbolic {
    Cosh,
    Sinh,
}

/// A finite sum of real exponentials `Σ c_i e^{λ_i x}`.
///
/// Terms are kept sorted by strictly increasing rate; terms whose rates agree
/// to [`RATE_MERGE_TOL`] are merged and exact zeros are dropped, so equality
/// of two sums is term-wise.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExpSum {
    terms: Vec<ExpTerm>,
}

fn same_rate(a: f64, b: f64) -> bool {
    (a - b).abs() < RATE_MERGE_TOL * a.abs().max(1.0)
}

impl ExpSum {
    pub fn zero() -> Self {
        ExpSum { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_terms([ExpTerm { coefficient: c, rate: 0.0 }])
    }

    pub fn exponential(coefficient: f64, rate: f64) -> Self {
        Self::from_terms([ExpTerm { coefficient, rate }])
    }

    /// Canonicalizes an arbitrary collection of terms.
    pub fn from_terms<I: IntoIterator<Item = ExpTerm>>(terms: I) -> Self {
        let mut raw: Vec<ExpTerm> = terms.into_iter().collect();
        raw.sort_by(|a, b| a.rate.total_cmp(&b.rate));
        let mut merged: Vec<ExpTerm> = Vec::with_capacity(raw.len());
        for t in raw {
            match merged.last_mut() {
                Some(last) if same_rate(last.rate, t.rate) => last.coefficient += t.coefficient,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coefficient != 0.0);
        ExpSum { terms: merged }
    }

    /// `cosh(ax + b)` or `sinh(ax + b)` as `½e^{b}e^{ax} ± ½e^{-b}e^{-ax}`.
    pub fn from_hyperbolic(kind: Hyperbolic, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "hyperbolic rate must be positive and finite, got {a}"
            )));
        }
        if !b.is_finite() {
            return Err(Error::InvalidParameter(format!("shift must be finite, got {b}")));
        }
        let sign = match kind {
            Hyperbolic::Cosh => 1.0,
            Hyperbolic::Sinh => -1.0,
        };
        Ok(Self::from_terms([
            ExpTerm::new(0.5, a, b),
            ExpTerm::new(0.5 * sign, -a, -b),
        ]))
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute coefficients; the size of `self` at `x = 0` before cancellation.
    pub fn l1_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.coefficient.abs()).sum()
    }

    /// Term-wise `order`-th derivative. The rate is applied one factor at a
    /// time so that repeated first derivatives agree bit for bit.
    pub fn derivative(&self, order: u32) -> ExpSum {
        Self::from_terms(self.terms.iter().map(|t| ExpTerm {
            coefficient: (0..order).fold(t.coefficient, |c, _| c * t.rate),
            rate: t.rate,
        }))
    }

    pub fn scale(&self, factor: f64) -> ExpSum {
        Self::from_terms(self.terms.iter().map(|t| ExpTerm {
            coefficient: t.coefficient * factor,
            rate: t.rate,
        }))
    }

    /// Largest exponent `λ_i x` over the terms, used as the common scale.
    fn dominant_exponent(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.rate * x)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Evaluates as `(mantissa, exponent)` with value `mantissa·e^{exponent}`.
    ///
    /// The exponent is the dominant `λx`, so the mantissa stays bounded by the
    /// l1 norm of the coefficients and never overflows.
    pub fn eval_scaled(&self, x: f64) -> (f64, f64) {
        if self.terms.is_empty() {
            return (0.0, 0.0);
        }
        let m = self.dominant_exponent(x);
        let mantissa = self
            .terms
            .iter()
            .map(|t| t.coefficient * (t.rate * x - m).exp())
            .sum();
        (mantissa, m)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (mantissa, m) = self.eval_scaled(x);
        if mantissa == 0.0 {
            0.0
        } else {
            mantissa * m.exp()
        }
    }

    /// Derivatives of orders `0..=order` at `x`, all scaled by the same
    /// factor `e^{-exponent}`; returns `(scaled derivatives, exponent)`.
    pub fn derivatives_scaled(&self, x: f64, order: usize) -> (Vec<f64>, f64) {
        let mut out = vec![0.0; order + 1];
        if self.terms.is_empty() {
            return (out, 0.0);
        }
        let m = self.dominant_exponent(x);
        for t in &self.terms {
            let mut v = t.coefficient * (t.rate * x - m).exp();
            for slot in out.iter_mut() {
                *slot += v;
                v *= t.rate;
            }
        }
        (out, m)
    }

    pub fn derivatives(&self, x: f64, order: usize) -> Vec<f64> {
        let (mut d, m) = self.derivatives_scaled(x, order);
        let s = m.exp();
        for v in d.iter_mut() {
            *v *= s;
        }
        d
    }

    /// `self(x) / other(x)` evaluated without forming either value.
    pub fn ratio_at(&self, other: &ExpSum, x: f64) -> f64 {
        let (n, mn) = self.eval_scaled(x);
        let (d, md) = other.eval_scaled(x);
        if n == 0.0 {
            return if d == 0.0 { f64::NAN } else { 0.0 };
        }
        n / d * (mn - md).exp()
    }

    /// `s s'' − s'^2`, assembled pairwise as `Σ_{i<j} c_i c_j (λ_i − λ_j)^2 e^{(λ_i+λ_j)x}`.
    ///
    /// This is the same function as the naive product form, but the leading
    /// `e^{2λ_max x}` terms cancel structurally instead of numerically.
    pub fn log_curvature_numerator(&self) -> ExpSum {
        let n = self.terms.len();
        let mut acc = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let (ti, tj) = (self.terms[i], self.terms[j]);
                let d = ti.rate - tj.rate;
                acc.push(ExpTerm {
                    coefficient: ti.coefficient * tj.coefficient * d * d,
                    rate: ti.rate + tj.rate,
                });
            }
        }
        Self::from_terms(acc)
    }
}

/// `[ln s]''(x) = (s''s − s'^2)/s^2`.
pub fn log_second_derivative(s: &ExpSum, x: f64) -> Result<f64> {
    let (den, m) = s.eval_scaled(x);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Pole { x });
    }
    let (num, mn) = s.log_curvature_numerator().eval_scaled(x);
    Ok(num / (den * den) * (mn - 2.0 * m).exp())
}

impl fmt::Display for ExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·e^({}x)", t.coefficient, t.rate)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a ExpSum> for &'a ExpSum {
    type Output = ExpSum;
    fn add(self, rhs: &'a ExpSum) -> ExpSum {
        ExpSum::from_terms(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Add for ExpSum {
    type Output = ExpSum;
    fn add(self, rhs: ExpSum) -> ExpSum {
        &self + &rhs
    }
}

impl Neg for &ExpSum {
    type Output = ExpSum;
    fn neg(self) -> ExpSum {
        self.scale(-1.0)
    }
}

impl Neg for ExpSum {
    type Output = ExpSum;
    fn neg(self) -> ExpSum {
        self.scale(-1.0)
    }
}

impl<'a> Sub<&'a ExpSum> for &'a ExpSum {
    type Output = ExpSum;
    fn sub(self, rhs: &'a ExpSum) -> ExpSum {
        self + &(-rhs)
    }
}

impl Sub for ExpSum {
    type Output = ExpSum;
    fn sub(self, rhs: ExpSum) -> ExpSum {
        &self - &rhs
    }
}

impl<'a> Mul<&'a ExpSum> for &'a ExpSum {
    type Output = ExpSum;
    fn mul(self, rhs: &'a ExpSum) -> ExpSum {
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                acc.push(ExpTerm {
                    coefficient: a.coefficient * b.coefficient,
                    rate: a.rate + b.rate,
                });
            }
        }
        ExpSum::from_terms(acc)
    }
}

impl Mul for ExpSum {
    type Output = ExpSum;
    fn mul(self, rhs: ExpSum) -> ExpSum {
        &self * &rhs
    }
}

impl Mul<f64> for &ExpSum {
    type Output = ExpSum;
    fn mul(self, rhs: f64) -> ExpSum {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Taylor series of e^y, independent of `f64::exp`.
    fn taylor_exp(y: f64) -> f64 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 1..60 {
            term *= y / n as f64;
            sum += term;
        }
        sum
    }

    #[test]
    fn hyperbolic_encodings() {
        let c = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.terms()[0], ExpTerm { coefficient: 0.5, rate: -1.0 });
        assert_eq!(c.terms()[1], ExpTerm { coefficient: 0.5, rate: 1.0 });
        assert_eq!(c.eval(0.0), 1.0);

        let s = ExpSum::from_hyperbolic(Hyperbolic::Sinh, 2.0, 0.0).unwrap();
        assert_eq!(s.terms()[0], ExpTerm { coefficient: -0.5, rate: -2.0 });
        assert_eq!(s.eval(0.0), 0.0);

        let shifted = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.5).unwrap();
        let oracle = 0.5 * (taylor_exp(0.5) + taylor_exp(-0.5));
        assert!((shifted.eval(0.0) - oracle).abs() < 1e-15);
        assert!((oracle - 1.127_625_965_206_380_7).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_rate() {
        assert!(matches!(
            ExpSum::from_hyperbolic(Hyperbolic::Cosh, 0.0, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(ExpSum::from_hyperbolic(Hyperbolic::Sinh, -1.0, 0.0).is_err());
    }

    #[test]
    fn derivative_cases() {
        let c = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        let s = ExpSum::from_hyperbolic(Hyperbolic::Sinh, 1.0, 0.0).unwrap();
        assert_eq!(c.derivative(1), s);
        assert_eq!(c.derivative(0), c);

        let s2 = ExpSum::from_hyperbolic(Hyperbolic::Sinh, 2.0, 0.0).unwrap();
        let d2 = s2.derivative(2);
        assert_eq!(d2.terms()[0].coefficient, -2.0);
        assert_eq!(d2.terms()[1].coefficient, 2.0);
        // central second difference of the samples
        let h = 1e-5;
        for &x in &[-0.7, 0.0, 0.3, 1.1] {
            let fd = (s2.derivative(1).eval(x + h) - s2.derivative(1).eval(x - h)) / (2.0 * h);
            assert!((fd - d2.eval(x)).abs() < 1e-8, "x={x}");
        }
    }

    #[test]
    fn merges_close_rates_and_drops_zeros() {
        let s = ExpSum::from_terms([
            ExpTerm { coefficient: 1.0, rate: 1.0 },
            ExpTerm { coefficient: 2.0, rate: 1.0 + 1e-14 },
            ExpTerm { coefficient: 3.0, rate: -1.0 },
            ExpTerm { coefficient: -3.0, rate: -1.0 },
        ]);
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].coefficient, 3.0);
    }

    #[test]
    fn log_second_derivative_cases() {
        let c = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0).unwrap();
        assert!((log_second_derivative(&c, 0.0).unwrap() - 1.0).abs() < 1e-15);
        let e = ExpSum::exponential(3.0, 1.0);
        assert_eq!(log_second_derivative(&e, 2.5).unwrap(), 0.0);

        // ½[cosh 3x + 3 cosh x]
        let w = &ExpSum::from_hyperbolic(Hyperbolic::Cosh, 3.0, 0.0).unwrap().scale(0.5)
            + &ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0).unwrap().scale(1.5);
        assert_eq!(w.eval(0.0), 2.0);
        assert!((log_second_derivative(&w, 0.0).unwrap() - 3.0).abs() < 1e-14);
        let h = 1e-4;
        let ln = |x: f64| w.eval(x).ln();
        for &x in &[0.0, 0.4, 1.3] {
            let fd = (ln(x + h) - 2.0 * ln(x) + ln(x - h)) / (h * h);
            assert!((fd - log_second_derivative(&w, x).unwrap()).abs() < 1e-6);
        }
    }

    #[test]
    fn log_second_derivative_pole() {
        let s = ExpSum::from_hyperbolic(Hyperbolic::Sinh, 1.0, 0.0).unwrap();
        assert_eq!(log_second_derivative(&s, 0.0), Err(Error::Pole { x: 0.0 }));
    }

    #[test]
    fn large_argument_evaluation() {
        let c = ExpSum::from_hyperbolic(Hyperbolic::Cosh, 2.0, 0.0).unwrap();
        // sech^2 at x = 400 underflows only in the result, not in the pieces
        let v = log_second_derivative(&c, 400.0).unwrap();
        assert!((0.0..1e-300).contains(&v));
        let v = log_second_derivative(&c, 30.0).unwrap();
        let exact = 4.0 / (60.0f64).cosh().powi(2);
        assert!(((v - exact) / exact).abs() < 1e-12);
    }
}
