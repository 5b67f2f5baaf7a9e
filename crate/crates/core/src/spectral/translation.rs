use serde::{Deserialize, Serialize};

use crate::darboux::DarbouxChain;
use crate::error::{Error, Result};

/// Outcome of comparing `V_1(x; b_1)` with `V_1(x − Δ; 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TranslationCheck {
    /// `Δ = −b_1/a_1`.
    pub displacement: f64,
    pub max_deviation: f64,
}

/// Checks that shifting `cosh(a_1x + b_1)` translates the one-soliton
/// potential by `Δ = −b_1/a_1`, sampling 1001 points of `[0, 10]`.
pub fn translation_check(a1: f64, b1: f64) -> Result<TranslationCheck> {
    if !(a1 > 0.0) || !a1.is_finite() || !b1.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "translation check needs a1 > 0 and finite b1, got a1={a1} b1={b1}"
        )));
    }
    let shifted = DarbouxChain::alternating(&[a1], &[b1])?;
    let base = DarbouxChain::alternating(&[a1], &[0.0])?;
    let displacement = -b1 / a1;
    let mut max_deviation: f64 = 0.0;
    for i in 0..=1000 {
        let x = 0.01 * i as f64;
        let d = shifted.potential(x)? - base.potential(x - displacement)?;
        max_deviation = max_deviation.max(d.abs());
    }
    Ok(TranslationCheck {
        displacement,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displacements() {
        let t = translation_check(1.0, 0.0).unwrap();
        assert_eq!(t.displacement, 0.0);
        assert_eq!(t.max_deviation, 0.0);
        let t = translation_check(1.0, 1.0).unwrap();
        assert_eq!(t.displacement, -1.0);
        assert!(t.max_deviation < 1e-12);
        assert_eq!(translation_check(2.0, -1.0).unwrap().displacement, 0.5);
        assert!(translation_check(0.0, 1.0).is_err());
    }
}
