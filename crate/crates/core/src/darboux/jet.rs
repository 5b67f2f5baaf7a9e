use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Value and derivatives `(f, f', …, f^{(n)})` of a function at one point.
///
/// Products and quotients follow the Leibniz rule, so first-order Darboux
/// steps can be chained pointwise with exact derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    d: Vec<Complex64>,
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for k in 1..n {
        row[k] = row[k - 1] * (n - k + 1) as f64 / k as f64;
    }
    row
}

impl Jet {
    pub fn new(d: Vec<Complex64>) -> Self {
        assert!(!d.is_empty(), "a jet carries at least the value");
        Jet { d }
    }

    pub fn from_real(d: &[f64]) -> Self {
        Jet::new(d.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn order(&self) -> usize {
        self.d.len() - 1
    }

    pub fn value(&self) -> Complex64 {
        self.d[0]
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.d
    }

    pub fn truncate(&self, order: usize) -> Jet {
        Jet::new(self.d[..=order.min(self.order())].to_vec())
    }

    /// Jet of `f'`, one order shorter.
    pub fn derivative(&self) -> Jet {
        assert!(self.order() >= 1, "cannot differentiate an order-0 jet");
        Jet::new(self.d[1..].to_vec())
    }

    pub fn scale(&self, c: Complex64) -> Jet {
        Jet::new(self.d.iter().map(|v| v * c).collect())
    }

    /// `self / other`, truncated to the smaller order. `other.value()` must be nonzero.
    pub fn div(&self, other: &Jet) -> Jet {
        let n = self.order().min(other.order());
        let g0 = other.d[0];
        let mut h: Vec<Complex64> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let binom = binomial_row(m);
            let mut acc = self.d[m];
            for j in 1..=m {
                acc -= other.d[j] * h[m - j] * binom[j];
            }
            h.push(acc / g0);
        }
        Jet::new(h)
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.order().min(rhs.order());
        let d = (0..=n)
            .map(|m| {
                let binom = binomial_row(m);
                (0..=m).map(|j| self.d[j] * rhs.d[m - j] * binom[j]).sum()
            })
            .collect();
        Jet::new(d)
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.order().min(rhs.order());
        Jet::new((0..=n).map(|m| self.d[m] + rhs.d[m]).collect())
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let n = self.order().min(rhs.order());
        Jet::new((0..=n).map(|m| self.d[m] - rhs.d[m]).collect())
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet::new(self.d.iter().map(|v| -v).collect())
    }
}
