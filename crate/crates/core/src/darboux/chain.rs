use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exp_algebra::{
    check_alternating, check_increasing, derivative_determinant, wronskian, wronskian_closed_form,
    wronskian_minor, ExpSum,
};

use super::function::TransformationFunction;
use super::solution::AnalyticSolution;

/// Where prefix Wronskians are sampled when a chain is built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleScan {
    pub points: usize,
    /// The scan covers `[0, extent / a_1]`.
    pub extent: f64,
}

impl Default for PoleScan {
    fn default() -> Self {
        PoleScan {
            points: 2000,
            extent: 40.0,
        }
    }
}

#[derive(Debug, Clone)]
struct Prefix {
    wronskian: ExpSum,
    curvature: ExpSum,
    square: ExpSum,
}

impl Prefix {
    fn new(wronskian: ExpSum) -> Self {
        Prefix {
            curvature: wronskian.log_curvature_numerator(),
            square: &wronskian * &wronskian,
            wronskian,
        }
    }
}

/// An ordered chain of first-order Darboux transformations acting on the
/// free Hamiltonian `−d²/dx²` on `[0, ∞)`.
///
/// Everything the chain needs repeatedly is precomputed as exact
/// exponential sums: the Wronskian of every prefix, the minors `W^{(i)}`
/// and the coefficients of the Crum operator
/// `L^{(N)} = Σ_r p_r(x) d^r/dx^r`, `p_r = c_r / W`.
#[derive(Debug, Clone)]
pub struct DarbouxChain {
    funcs: Vec<TransformationFunction>,
    alternating: bool,
    prefixes: Vec<Prefix>,
    minors: Vec<ExpSum>,
    crum: Vec<ExpSum>,
    crum_slopes: Vec<ExpSum>,
}

impl DarbouxChain {
    /// The identity transformation (`V_0 ≡ 0`).
    pub fn empty() -> Self {
        Self::with_scan(Vec::new(), PoleScan::default()).expect("empty chain is valid")
    }

    pub fn new(funcs: Vec<TransformationFunction>) -> Result<Self> {
        Self::with_scan(funcs, PoleScan::default())
    }

    /// The `cosh, sinh, cosh, …` chain with rates `a` and shifts `b`.
    pub fn alternating(a: &[f64], b: &[f64]) -> Result<Self> {
        Self::new(TransformationFunction::alternating(a, b)?)
    }

    pub fn with_scan(funcs: Vec<TransformationFunction>, scan: PoleScan) -> Result<Self> {
        check_increasing(&funcs)?;
        let alternating = !funcs.is_empty() && check_alternating(&funcs).is_ok();
        let sums: Vec<ExpSum> = funcs.iter().map(|f| f.exp_sum().clone()).collect();

        let mut prefixes = vec![Prefix::new(ExpSum::constant(1.0))];
        for k in 1..=funcs.len() {
            let w = if alternating {
                wronskian_closed_form(&funcs[..k])?
            } else {
                wronskian(&sums[..k])
            };
            prefixes.push(Prefix::new(w));
        }

        let chain_scan = |prefixes: &[Prefix]| -> Result<()> {
            let Some(first) = funcs.first() else { return Ok(()) };
            let end = scan.extent / first.rate();
            for (k, p) in prefixes.iter().enumerate().skip(1) {
                scan_for_zero(&p.wronskian, 0.0, end, scan.points.max(2))
                    .map_or(Ok(()), |x| Err(Error::SingularChain { prefix: k, x }))?;
            }
            Ok(())
        };
        chain_scan(&prefixes)?;

        let n = funcs.len();
        let minors = (0..n)
            .map(|i| wronskian_minor(&funcs, i))
            .collect::<Result<Vec<_>>>()?;
        let mut crum = Vec::with_capacity(n + 1);
        for r in 0..n {
            let rows: Vec<usize> = (0..=n).filter(|&j| j != r).collect();
            let det = derivative_determinant(&sums, &rows);
            crum.push(if (r + n) % 2 == 1 { -det } else { det });
        }
        crum.push(prefixes[n].wronskian.clone());
        let crum_slopes = crum.iter().map(|c| c.derivative(1)).collect();

        Ok(DarbouxChain {
            funcs,
            alternating,
            prefixes,
            minors,
            crum,
            crum_slopes,
        })
    }

    pub fn len(&self) -> usize {
        self.funcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.funcs.is_empty()
    }

    pub fn funcs(&self) -> &[TransformationFunction] {
        &self.funcs
    }

    pub fn rates(&self) -> Vec<f64> {
        self.funcs.iter().map(|f| f.rate()).collect()
    }

    pub fn shifts(&self) -> Vec<f64> {
        self.funcs.iter().map(|f| f.shift()).collect()
    }

    /// True for the `cosh, sinh, cosh, …` family.
    pub fn is_alternating(&self) -> bool {
        self.alternating
    }

    /// The chain built from the first `k` transformation functions.
    pub fn prefix(&self, k: usize) -> Result<DarbouxChain> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            });
        }
        DarbouxChain::new(self.funcs[..k].to_vec())
    }

    /// `W(u_1, …, u_N)`.
    pub fn wronskian(&self) -> &ExpSum {
        &self.prefixes[self.len()].wronskian
    }

    /// `W(u_1, …, u_k)`; `k = 0` gives the constant 1.
    pub fn prefix_wronskian(&self, k: usize) -> Result<&ExpSum> {
        self.prefixes
            .get(k)
            .map(|p| &p.wronskian)
            .ok_or(Error::IndexOutOfRange {
                index: k,
                len: self.len(),
            })
    }

    /// `W^{(i)}`: the Wronskian of all functions but `u_i` (zero-based).
    pub fn minor(&self, i: usize) -> Result<&ExpSum> {
        self.minors.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.len(),
        })
    }

    /// Signed cofactors `c_r` of the bordered Wronskian, `r = 0..=N`.
    pub fn crum_cofactors(&self) -> &[ExpSum] {
        &self.crum
    }

    /// `V_k(x) = −2 [ln W(u_1, …, u_k)]''` for the `k`-step prefix.
    pub fn transformed_potential(&self, k: usize, x: f64) -> Result<f64> {
        let p = self.prefixes.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            len: self.len(),
        })?;
        if k == 0 {
            return Ok(0.0);
        }
        let (w, _) = p.wronskian.eval_scaled(x);
        if w == 0.0 || !w.is_finite() {
            return Err(Error::Pole { x });
        }
        Ok(-2.0 * p.curvature.ratio_at(&p.square, x))
    }

    /// `V_N(x)` of the full chain.
    pub fn potential(&self, x: f64) -> Result<f64> {
        self.transformed_potential(self.len(), x)
    }

    fn check_regular(&self, x: f64) -> Result<()> {
        let (w, _) = self.wronskian().eval_scaled(x);
        if w == 0.0 || !w.is_finite() {
            Err(Error::Pole { x })
        } else {
            Ok(())
        }
    }

    /// Coefficients `p_r(x)` with `L^{(N)} = Σ_r p_r d^r/dx^r`; `p_N = 1`.
    pub fn crum_coefficients(&self, x: f64) -> Result<Vec<f64>> {
        self.check_regular(x)?;
        let w = self.wronskian();
        Ok(self.crum.iter().map(|c| c.ratio_at(w, x)).collect())
    }

    fn check_order(&self, psi: &dyn AnalyticSolution, needed: usize) -> Result<()> {
        if psi.max_order() < needed {
            return Err(Error::Contract(format!(
                "solution supplies derivatives up to order {}, chain needs {}",
                psi.max_order(),
                needed
            )));
        }
        Ok(())
    }

    /// `(L^{(N)}ψ)(x)`: the bordered Wronskian `W(u_1, …, u_N, ψ)` divided by
    /// `W(u_1, …, u_N)`, expanded along the `ψ` column.
    pub fn crum_apply(&self, psi: &dyn AnalyticSolution, x: f64) -> Result<Complex64> {
        let n = self.len();
        self.check_order(psi, n)?;
        let p = self.crum_coefficients(x)?;
        let d = psi.derivatives(x, n);
        Ok(p.iter().zip(&d).map(|(p, d)| d * p).sum())
    }

    /// `(L^{(N)}ψ)(x)` together with its first derivative.
    pub fn crum_apply_with_derivative(
        &self,
        psi: &dyn AnalyticSolution,
        x: f64,
    ) -> Result<(Complex64, Complex64)> {
        let n = self.len();
        self.check_order(psi, n + 1)?;
        let p = self.crum_coefficients(x)?;
        let w = self.wronskian();
        let log_slope = w.derivative(1).ratio_at(w, x);
        let d = psi.derivatives(x, n + 1);
        let mut value = Complex64::new(0.0, 0.0);
        let mut slope = Complex64::new(0.0, 0.0);
        for r in 0..=n {
            let dp = self.crum_slopes[r].ratio_at(w, x) - p[r] * log_slope;
            value += d[r] * p[r];
            slope += d[r] * dp + d[r + 1] * p[r];
        }
        Ok((value, slope))
    }

    /// `ṽ_i(x) = W^{(i)}(x) / W(x)`, the image of the partner of `u_i`.
    pub fn tilde_v(&self, i: usize, x: f64) -> Result<f64> {
        let m = self.minor(i)?;
        self.check_regular(x)?;
        Ok(m.ratio_at(self.wronskian(), x))
    }

    /// `ṽ_i` and `ṽ_i'` at `x`.
    pub fn tilde_v_with_derivative(&self, i: usize, x: f64) -> Result<(f64, f64)> {
        let m = self.minor(i)?;
        self.check_regular(x)?;
        let w = self.wronskian();
        let v = m.ratio_at(w, x);
        let dv = m.derivative(1).ratio_at(w, x) - v * w.derivative(1).ratio_at(w, x);
        Ok((v, dv))
    }
}

/// First point of `[start, end]` where `s` vanishes or changes sign, refined
/// by bisection. Uses the scaled evaluation so the sign is reliable at any x.
pub(crate) fn scan_for_zero(s: &ExpSum, start: f64, end: f64, points: usize) -> Option<f64> {
    let sign_at = |x: f64| s.eval_scaled(x).0;
    let step = (end - start) / (points - 1) as f64;
    let mut prev_x = start;
    let mut prev = sign_at(start);
    if prev == 0.0 {
        return Some(start);
    }
    for i in 1..points {
        let x = start + step * i as f64;
        let cur = sign_at(x);
        if cur == 0.0 {
            return Some(x);
        }
        if cur.signum() != prev.signum() {
            let (mut lo, mut hi) = (prev_x, x);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let v = sign_at(mid);
                if v == 0.0 {
                    return Some(mid);
                }
                if v.signum() == prev.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        prev = cur;
        prev_x = x;
    }
    None
}

/// All sign changes of `s` on `[start, end]`, each refined by bisection.
pub(crate) fn zeros_of(s: &ExpSum, start: f64, end: f64, points: usize) -> Vec<f64> {
    let mut zeros = Vec::new();
    let mut lo = start;
    while let Some(z) = scan_for_zero(s, lo, end, points) {
        zeros.push(z);
        let next = z + (end - start) / (points - 1) as f64 * 1e-3;
        if next >= end {
            break;
        }
        lo = next;
    }
    zeros
}
