use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::darboux::{AnalyticSolution, CosineWave, DarbouxChain, PlaneWave, SineWave};
use crate::error::{Error, Result};
use crate::exp_algebra::ExpSum;

use super::jost::{RationalJost, ScatteringPoint};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Relative size below which `W^{(i)}(0)` counts as zero.
const ORIGIN_ZERO_TOL: f64 = 1e-12;

/// Relative agreement required between the rational Jost function and the
/// Jost solution evaluated at the origin.
const JOST_CONSISTENCY_TOL: f64 = 1e-7;

/// A bound state `φ = norm · ṽ_index` at energy `−rate²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    /// Zero-based position of the defining function in the chain.
    pub index: usize,
    pub rate: f64,
    pub energy: f64,
    pub norm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// Closed-form spectral data of `−d²/dx² + V_N` on `[0, ∞)` with a Dirichlet
/// condition at the origin.
#[derive(Debug, Clone)]
pub struct SpectralModel {
    chain: DarbouxChain,
    levels: Vec<Level>,
    jost: RationalJost,
    parity_table: Vec<Parity>,
}

/// Builds the model of the alternating chain with rates `a` and shifts `b`.
pub fn build_model(a: &[f64], b: &[f64]) -> Result<SpectralModel> {
    SpectralModel::new(DarbouxChain::alternating(a, b)?)
}

/// `[a_i ∏_{j≠i} |a_i² − a_j²|]^{1/2}`.
fn normalization(rates: &[f64], i: usize) -> f64 {
    let ai = rates[i];
    let prod: f64 = rates
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, aj)| (ai * ai - aj * aj).abs())
        .product();
    (ai * prod).sqrt()
}

fn parity_of(s: &ExpSum) -> Parity {
    let terms = s.terms();
    let scale = s.l1_norm().max(f64::MIN_POSITIVE);
    let mirror = |sign: f64| {
        terms.iter().all(|t| {
            let partner = terms
                .iter()
                .find(|u| (u.rate + t.rate).abs() <= 1e-12 * t.rate.abs().max(1.0))
                .map_or(0.0, |u| u.coefficient);
            (partner - sign * t.coefficient).abs() <= 1e-12 * scale
        })
    };
    if mirror(1.0) {
        Parity::Even
    } else if mirror(-1.0) {
        Parity::Odd
    } else {
        Parity::Neither
    }
}

fn combine(p: Parity, q: Parity) -> Parity {
    match (p, q) {
        (Parity::Neither, _) | (_, Parity::Neither) => Parity::Neither,
        (x, y) if x == y => Parity::Even,
        _ => Parity::Odd,
    }
}

impl SpectralModel {
    /// Selects the bound states of an alternating (or empty) chain by the
    /// boundary criterion `ṽ_i(0) = 0` and checks the result against the
    /// level-count law and the Jost solution at the origin.
    pub fn new(chain: DarbouxChain) -> Result<Self> {
        if !chain.is_empty() && !chain.is_alternating() {
            return Err(Error::InvalidChain(
                "spectral model needs the alternating cosh/sinh chain".into(),
            ));
        }
        let n = chain.len();
        let rates = chain.rates();
        let w_parity = parity_of(chain.wronskian());

        let mut selected = Vec::new();
        let mut parity_table = Vec::with_capacity(n);
        for i in 0..n {
            let minor = chain.minor(i)?;
            parity_table.push(combine(parity_of(minor), w_parity));
            if minor.eval(0.0).abs() <= ORIGIN_ZERO_TOL * minor.l1_norm() {
                selected.push(i);
            }
        }
        if selected.len() != n / 2 {
            return Err(Error::ModelInconsistency(format!(
                "{} transformation functions give eigenfunctions vanishing at the origin, \
                 expected {} for N = {n}",
                selected.len(),
                n / 2
            )));
        }

        let mut levels: Vec<Level> = selected
            .iter()
            .map(|&i| Level {
                index: i,
                rate: rates[i],
                energy: -rates[i] * rates[i],
                norm: normalization(&rates, i),
            })
            .collect();
        levels.sort_by(|p, q| p.energy.total_cmp(&q.energy));

        let jost = RationalJost {
            zero_rates: selected.iter().map(|&i| rates[i]).collect(),
            pole_rates: (0..n)
                .filter(|i| !selected.contains(i))
                .map(|i| rates[i])
                .collect(),
            origin_zero: n % 2 == 1,
        };

        let model = SpectralModel {
            chain,
            levels,
            jost,
            parity_table,
        };
        model.check_jost_consistency()?;
        Ok(model)
    }

    /// The rational form must coincide with `f(k, 0)`; shifted chains whose
    /// Jost function leaves this family are rejected.
    fn check_jost_consistency(&self) -> Result<()> {
        let a1 = self.chain.rates().first().copied().unwrap_or(1.0);
        for &t in &[0.5, 2.0] {
            let k = Complex64::new(t * a1, 0.0);
            let rational = self.jost.eval(k)?;
            let direct = self.jost_solution(k, 0.0)?;
            let err = (rational - direct).norm();
            if err > JOST_CONSISTENCY_TOL * rational.norm().max(1e-3) {
                return Err(Error::ModelInconsistency(format!(
                    "rational Jost function {rational} disagrees with f(k, 0) = {direct} at k = {}",
                    k.re
                )));
            }
        }
        Ok(())
    }

    pub fn chain(&self) -> &DarbouxChain {
        &self.chain
    }

    /// Levels in ascending energy.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn jost(&self) -> &RationalJost {
        &self.jost
    }

    /// Parity of `ṽ_i` for every chain position `i`.
    pub fn parity_table(&self) -> &[Parity] {
        &self.parity_table
    }

    pub fn potential(&self, x: f64) -> Result<f64> {
        self.chain.potential(x)
    }

    fn level(&self, level: usize) -> Result<&Level> {
        self.levels.get(level).ok_or(Error::IndexOutOfRange {
            index: level,
            len: self.levels.len(),
        })
    }

    /// Normalized eigenfunction of the `level`-th state (ascending energy).
    pub fn eigenfunction(&self, level: usize, x: f64) -> Result<f64> {
        let l = self.level(level)?;
        Ok(l.norm * self.chain.tilde_v(l.index, x)?)
    }

    /// `F(k)` from the rational form.
    pub fn jost_function(&self, k: Complex64) -> Result<Complex64> {
        self.jost.eval(k)
    }

    /// `f(k, x) = L^{(N)} e^{ikx} / ∏ (ik − a_j)`, the solution that behaves
    /// as `e^{ikx}` for large `x`.
    pub fn jost_solution(&self, k: Complex64, x: f64) -> Result<Complex64> {
        if k.im < 0.0 {
            return Err(Error::InvalidK(format!(
                "Jost solution needs Im k >= 0, got k = {k}"
            )));
        }
        let mut prefactor = Complex64::new(1.0, 0.0);
        for a in self.chain.rates() {
            let f = I * k - a;
            if f == Complex64::new(0.0, 0.0) {
                return Err(Error::InvalidK(format!("k = {k} is a pole of the prefactor")));
            }
            prefactor *= f;
        }
        let psi = PlaneWave::new(k);
        Ok(self.chain.crum_apply(&psi, x)? / prefactor)
    }

    /// The solution regular at the origin, `ψ(0) = 0`, `ψ'(0) = 1`.
    pub fn regular(&self, k: f64) -> Result<RegularSolution<'_>> {
        RegularSolution::new(&self.chain, k)
    }

    pub fn regular_solution(&self, k: f64, x: f64) -> Result<f64> {
        self.regular(k)?.eval(x)
    }

    /// `|F(k)|` and `δ(k) = −arg F(k)` on the branch with `δ(∞) = 0`.
    pub fn phase_shift(&self, k: f64) -> Result<ScatteringPoint> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidK(format!("phase shift needs real k > 0, got {k}")));
        }
        Ok(ScatteringPoint {
            k,
            modulus: self.jost.eval(Complex64::new(k, 0.0))?.norm(),
            phase: self.jost.phase(k),
        })
    }
}

/// `ψ = α·L^{(N)}[sin(kx)/k] + β·L^{(N)}[cos(kx)]` with `α, β` fixed by
/// `ψ(0) = 0`, `ψ'(0) = 1`.
#[derive(Debug, Clone)]
pub struct RegularSolution<'a> {
    chain: &'a DarbouxChain,
    sine: SineWave,
    cosine: CosineWave,
    alpha: f64,
    beta: f64,
}

impl<'a> RegularSolution<'a> {
    fn new(chain: &'a DarbouxChain, k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidK(format!("regular solution needs real k > 0, got {k}")));
        }
        let sine = SineWave::new(k)?;
        let cosine = CosineWave::new(k);
        let (s, ds) = chain.crum_apply_with_derivative(&sine, 0.0)?;
        let (c, dc) = chain.crum_apply_with_derivative(&cosine, 0.0)?;
        let det = s.re * dc.re - c.re * ds.re;
        if det == 0.0 {
            return Err(Error::ModelInconsistency(format!(
                "transformed sine and cosine are dependent at k = {k}"
            )));
        }
        Ok(RegularSolution {
            chain,
            sine,
            cosine,
            alpha: -c.re / det,
            beta: s.re / det,
        })
    }

    fn combine(&self, s: Complex64, c: Complex64) -> f64 {
        self.alpha * s.re + self.beta * c.re
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let s = self.chain.crum_apply(&self.sine, x)?;
        let c = self.chain.crum_apply(&self.cosine, x)?;
        Ok(self.combine(s, c))
    }

    pub fn eval_with_derivative(&self, x: f64) -> Result<(f64, f64)> {
        let (s, ds) = self.chain.crum_apply_with_derivative(&self.sine, x)?;
        let (c, dc) = self.chain.crum_apply_with_derivative(&self.cosine, x)?;
        Ok((self.combine(s, c), self.combine(ds, dc)))
    }

    pub fn energy(&self) -> f64 {
        self.sine.energy().re
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_counts_from_worked_examples() {
        assert!(build_model(&[1.0], &[0.0]).unwrap().levels().is_empty());
        let m2 = build_model(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(m2.levels().len(), 1);
        assert_eq!(m2.levels()[0].energy, -1.0);
        assert_eq!(m2.levels()[0].index, 0);
        let m5 = build_model(&[1.0, 2.0, 3.0, 4.0, 5.0], &[0.0; 5]).unwrap();
        assert_eq!(m5.levels().len(), 2);
    }

    #[test]
    fn empty_chain_model() {
        let m = SpectralModel::new(DarbouxChain::empty()).unwrap();
        assert!(m.levels().is_empty());
        let k = Complex64::new(1.3, 0.0);
        assert_eq!(m.jost_function(k).unwrap(), Complex64::new(1.0, 0.0));
        let f = m.jost_solution(k, 0.7).unwrap();
        assert!((f - (I * k * 0.7).exp()).norm() < 1e-15);
        let psi = m.regular_solution(1.3, 0.7).unwrap();
        assert!((psi - (1.3f64 * 0.7).sin() / 1.3).abs() < 1e-15);
    }

    #[test]
    fn two_soliton_eigenfunction_closed_form() {
        let m = build_model(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        let (a1, a2) = (1.0f64, 2.0f64);
        for &x in &[0.0, 0.4, 1.0, 3.0, 12.0] {
            let exact = 2.0 * (a1 * (a2 * a2 - a1 * a1)).sqrt() * (a2 * x).sinh()
                / ((a2 + a1) * ((a2 - a1) * x).cosh() + (a2 - a1) * ((a2 + a1) * x).cosh());
            assert!((m.eigenfunction(0, x).unwrap() - exact).abs() < 1e-12);
        }
        assert!(m.eigenfunction(1, 0.0).is_err());
    }

    #[test]
    fn parity_table_at_zero_shift() {
        let m = build_model(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(m.parity_table(), &[Parity::Odd, Parity::Even]);
        let shifted = build_model(&[1.0, 2.0], &[0.7, 0.0]).unwrap();
        assert_eq!(shifted.parity_table()[1], Parity::Neither);
    }

    #[test]
    fn one_soliton_jost_solution() {
        let m = build_model(&[1.0], &[0.0]).unwrap();
        let k = Complex64::new(0.8, 0.0);
        for &x in &[0.0, 0.5, 4.0] {
            let exact = (Complex64::from(f64::tanh(x)) - I * k) / (1.0 - I * k) * (I * k * x).exp();
            assert!((m.jost_solution(k, x).unwrap() - exact).norm() < 1e-13);
        }
        assert!(matches!(
            m.jost_solution(Complex64::new(0.0, -1.0), 0.0),
            Err(Error::InvalidK(_))
        ));
    }

    #[test]
    fn regular_solution_normalization() {
        for n in 0..=5 {
            let a: Vec<f64> = (1..=n).map(|i| i as f64 * 0.7).collect();
            let m = build_model(&a, &vec![0.0; n]).unwrap();
            let r = m.regular(1.1).unwrap();
            let (v, d) = r.eval_with_derivative(0.0).unwrap();
            assert!(v.abs() < 1e-12, "N={n}: {v}");
            assert!((d - 1.0).abs() < 1e-12, "N={n}: {d}");
        }
    }

    #[test]
    fn shifted_one_soliton_is_rejected() {
        assert!(matches!(
            build_model(&[1.0], &[0.5]),
            Err(Error::ModelInconsistency(_))
        ));
        assert!(matches!(
            build_model(&[1.0, 2.0], &[0.0, -0.3]),
            Err(Error::ModelInconsistency(_))
        ));
    }

    #[test]
    fn non_alternating_chain_rejected() {
        use crate::darboux::TransformationFunction;
        use crate::exp_algebra::Hyperbolic;
        let funcs = vec![TransformationFunction::new(Hyperbolic::Cosh, 1.0, 0.0).unwrap(),
            TransformationFunction::new(Hyperbolic::Cosh, 2.0, 0.5).unwrap()];
        if let Ok(chain) = DarbouxChain::new(funcs) {
            assert!(matches!(SpectralModel::new(chain), Err(Error::InvalidChain(_))));
        }
    }
}
