use crate::error::{Error, Result};

/// Least-squares fit of samples to `(A/k)·sin(kx + δ)`; returns `(A, δ)` with
/// `A ≥ 0` and `δ ∈ (−π, π]`.
pub fn fit_sinusoid(k: f64, xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidParameter(
            "sinusoid fit needs at least two paired samples".into(),
        ));
    }
    // y = s·sin(kx) + c·cos(kx)
    let (mut ss, mut sc, mut cc, mut ys_, mut yc) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (s, c) = (k * x).sin_cos();
        ss += s * s;
        sc += s * c;
        cc += c * c;
        ys_ += y * s;
        yc += y * c;
    }
    let det = ss * cc - sc * sc;
    if det.abs() <= 1e-12 * ss.max(cc).powi(2) {
        return Err(Error::InvalidParameter(
            "samples do not resolve sine and cosine components".into(),
        ));
    }
    let s = (ys_ * cc - yc * sc) / det;
    let c = (yc * ss - ys_ * sc) / det;
    Ok((k * s.hypot(c), c.atan2(s)))
}
