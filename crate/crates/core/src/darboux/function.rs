use crate::error::{Error, Result};
use crate::exp_algebra::{ExpSum, Hyperbolic};

/// One link of a Darboux chain: `u(x) = cosh(ax + b)` or `sinh(ax + b)`,
/// a solution of `−u'' = C u` with `C = −a²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformationFunction {
    kind: Hyperbolic,
    a: f64,
    b: f64,
    sum: ExpSum,
}

impl TransformationFunction {
    pub fn new(kind: Hyperbolic, a: f64, b: f64) -> Result<Self> {
        let sum = ExpSum::from_hyperbolic(kind, a, b)?;
        Ok(TransformationFunction { kind, a, b, sum })
    }

    /// The `cosh, sinh, cosh, …` family with the given rates and shifts.
    pub fn alternating(a: &[f64], b: &[f64]) -> Result<Vec<Self>> {
        if a.len() != b.len() {
            return Err(Error::InvalidParameter(format!(
                "{} rates but {} shifts",
                a.len(),
                b.len()
            )));
        }
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(i, (&a, &b))| {
                let kind = if i % 2 == 0 { Hyperbolic::Cosh } else { Hyperbolic::Sinh };
                Self::new(kind, a, b)
            })
            .collect()
    }

    pub fn kind(&self) -> Hyperbolic {
        self.kind
    }

    pub fn rate(&self) -> f64 {
        self.a
    }

    pub fn shift(&self) -> f64 {
        self.b
    }

    /// Factorization constant `C = −a²`.
    pub fn eigenvalue(&self) -> f64 {
        -self.a * self.a
    }

    pub fn exp_sum(&self) -> &ExpSum {
        &self.sum
    }

    /// The second solution `ũ` at the same energy with `W(u, ũ) = 1`.
    pub fn partner(&self) -> ExpSum {
        match self.kind {
            Hyperbolic::Cosh => ExpSum::from_hyperbolic(Hyperbolic::Sinh, self.a, self.b)
                .expect("rate already validated")
                .scale(1.0 / self.a),
            Hyperbolic::Sinh => ExpSum::from_hyperbolic(Hyperbolic::Cosh, self.a, self.b)
                .expect("rate already validated")
                .scale(-1.0 / self.a),
        }
    }
}

impl AsRef<ExpSum> for TransformationFunction {
    fn as_ref(&self) -> &ExpSum {
        &self.sum
    }
}
