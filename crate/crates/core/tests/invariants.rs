//! Randomized properties over admissible chains.

use num_complex::Complex64;
use proptest::prelude::*;

use darboux::darboux::{compose_apply, PlaneWave};
use darboux::exp_algebra::{wronskian_closed_form, ExpTerm};
use darboux::oracle::{extrapolated_levels, numerical_wronskian};
use darboux::spectral::build_model;
use darboux::{DarbouxChain, ExpSum, TransformationFunction};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Strictly increasing rates with gaps of at least 0.25.
fn rates(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.25f64..1.0, 1..=max_len).prop_map(|gaps| {
        gaps.iter()
            .scan(0.0, |acc, g| {
                *acc += g;
                Some(*acc)
            })
            .collect()
    })
}

fn exp_sum() -> impl Strategy<Value = ExpSum> {
    prop::collection::vec((-3.0f64..3.0, -4.0f64..4.0), 0..6).prop_map(|t| {
        ExpSum::from_terms(t.into_iter().map(|(c, r)| ExpTerm {
            coefficient: c,
            rate: r,
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_composes(s in exp_sum(), p in 0u32..4, q in 0u32..4) {
        prop_assert_eq!(s.derivative(p).derivative(q), s.derivative(p + q));
    }

    #[test]
    fn canonical_terms(s in exp_sum(), t in exp_sum()) {
        for sum in [&s, &(&s * &t), &(s.clone() + t.clone())] {
            let terms = sum.terms();
            prop_assert!(terms.windows(2).all(|w| w[0].rate < w[1].rate));
            prop_assert!(terms.iter().all(|t| t.coefficient != 0.0));
        }
        prop_assert!((&s * &t).len() <= s.len() * t.len());
    }

    #[test]
    fn product_evaluates_pointwise(s in exp_sum(), t in exp_sum(), x in -2.0f64..2.0) {
        let lhs = (&s * &t).eval(x);
        let rhs = s.eval(x) * t.eval(x);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + s.l1_norm() * t.l1_norm() * 1e4));
    }

    #[test]
    fn closed_form_matches_determinant(a in rates(6), x in -5.0f64..5.0) {
        let n = a.len();
        let funcs = TransformationFunction::alternating(&a, &vec![0.0; n]).unwrap();
        let w = wronskian_closed_form(&funcs).unwrap();
        prop_assert!(w.len() <= 1 << n);
        let d: Vec<Vec<f64>> = funcs.iter().map(|f| f.exp_sum().derivatives(x, n - 1)).collect();
        let numeric = numerical_wronskian(&d);
        prop_assert!((w.eval(x) - numeric).abs() / (1.0 + numeric.abs()) < 1e-9);
    }

    #[test]
    fn crum_equals_composition(a in rates(5), k in 0.2f64..4.0, x in 0.0f64..8.0) {
        let n = a.len();
        let chain = DarbouxChain::alternating(&a, &vec![0.0; n]).unwrap();
        let psi = PlaneWave::real(k);
        let crum = chain.crum_apply(&psi, x).unwrap();
        let comp = compose_apply(&chain, &psi, x).unwrap();
        prop_assert!((crum - comp).norm() <= 1e-9 * crum.norm().max(1.0));
    }

    #[test]
    fn level_count_law(a in rates(8)) {
        let n = a.len();
        let model = build_model(&a, &vec![0.0; n]).unwrap();
        prop_assert_eq!(model.levels().len(), n / 2);
        for l in model.levels() {
            prop_assert!(a.contains(&l.rate));
            prop_assert_eq!(l.energy, -l.rate * l.rate);
            prop_assert_eq!(model.jost_function(I * l.rate).unwrap(), Complex64::new(0.0, 0.0));
        }
        prop_assert!(model.levels().windows(2).all(|w| w[0].energy < w[1].energy));
        let zeros = model.jost().zeros();
        prop_assert_eq!(zeros.len(), n / 2 + n % 2);
        prop_assert!(model.jost().poles().iter().all(|p| p.re == 0.0 && p.im < 0.0));
    }

    #[test]
    fn jost_function_is_jost_solution_at_origin(a in rates(6), k in 0.1f64..10.0) {
        let n = a.len();
        let model = build_model(&a, &vec![0.0; n]).unwrap();
        let kc = Complex64::new(k, 0.0);
        let rational = model.jost_function(kc).unwrap();
        let direct = model.jost_solution(kc, 0.0).unwrap();
        prop_assert!((rational - direct).norm() <= 1e-8 * rational.norm().max(1e-3));
        // δ is −arg F up to whole turns
        let d = model.phase_shift(k).unwrap().phase + rational.arg();
        let turns = d / std::f64::consts::TAU;
        prop_assert!((turns - turns.round()).abs() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn oracle_confirms_levels(a in rates(5)) {
        let n = a.len();
        let model = build_model(&a, &vec![0.0; n]).unwrap();
        let chain = model.chain();
        let length = 40.0 / a[0];
        let oracle = extrapolated_levels(|x| chain.potential(x).unwrap(), 0.0, length, 8000).unwrap();
        prop_assert_eq!(oracle.len(), model.levels().len());
        for (l, e) in model.levels().iter().zip(&oracle) {
            prop_assert!((l.energy - e).abs() < 1e-6, "{} vs {}", l.energy, e);
        }
    }
}
