// the tabulated nodes keep their published digits
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// Gauss–Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 10_000;

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let pair = f(center - half * x) + f(center + half * x);
        kron += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        a,
        b,
        value: kron * half,
        error: ((kron - gauss) * half).abs(),
    }
}

/// `∫_a^b f` by globally adaptive Gauss–Kronrod 7/15, to estimated absolute error `tol`.
pub fn quadrature(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return quadrature(f, b, a, tol).map(|v| -v);
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod(&f, a, b);
    let (mut total, mut error) = (first.value, first.error);
    heap.push(first);
    while error > tol {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Accuracy { tol, estimate: error });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::Accuracy { tol, estimate: error });
        }
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to drop the drift of the running updates
    let total_fresh: f64 = heap.iter().map(|s| s.value).sum();
    if !total_fresh.is_finite() {
        return Err(Error::Integration(format!("integrand not finite on [{a}, {b}] (sum {total})")));
    }
    Ok(total_fresh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sech_squared() {
        let v = quadrature(|x| 1.0 / x.cosh().powi(2), 0.0, 40.0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_integrand() {
        assert_eq!(quadrature(|_| 0.0, 0.0, 1.0, 1e-10).unwrap(), 0.0);
        assert_eq!(quadrature(|x| x, 2.0, 2.0, 1e-10).unwrap(), 0.0);
    }

    #[test]
    fn reversed_limits_and_peaks() {
        let v = quadrature(|x| x * x, 1.0, 0.0, 1e-14).unwrap();
        assert!((v + 1.0 / 3.0).abs() < 1e-14);
        let g = quadrature(|x| (-1e4 * (x - 0.3).powi(2)).exp(), 0.0, 1.0, 1e-12).unwrap();
        assert!((g - (std::f64::consts::PI / 1e4).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn non_convergence_reported() {
        let r = quadrature(|x| 1.0 / x, 0.0, 1.0, 1e-10);
        assert!(matches!(r, Err(Error::Accuracy { .. }) | Err(Error::Integration(_))));
    }
}
