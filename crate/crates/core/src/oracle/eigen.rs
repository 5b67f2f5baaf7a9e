use crate::error::{Error, Result};

use super::grid::GridFunction;

/// Negative eigenvalues of the Dirichlet finite-difference Hamiltonian.
#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Sampled on the full grid including the two boundary zeros, normalized
    /// so that `Σ v_i² h = 1`.
    pub eigenvectors: Vec<GridFunction<f64>>,
    pub x_min: f64,
    pub length: f64,
    pub step: f64,
}

/// Symmetric tridiagonal matrix with constant off-diagonal entry.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    /// Number of eigenvalues strictly below `lambda` (Sturm sequence).
    fn count_below(&self, lambda: f64) -> usize {
        let off2 = self.off * self.off;
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - off2 / q };
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `j`-th smallest eigenvalue by bisection inside `[lo, hi]`.
    fn bisect(&self, j: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn mul(&self, v: &[f64]) -> Vec<f64> {
        let n = v.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Solves `(T − shift) y = b` by LU with partial pivoting.
    fn shifted_solve(&self, shift: f64, b: &mut [f64]) {
        let n = self.diag.len();
        let tiny = f64::EPSILON * self.off.abs();
        let mut d: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut dl = vec![self.off; n.saturating_sub(1)];
        let mut du = vec![self.off; n.saturating_sub(1)];
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        for i in 0..n.saturating_sub(1) {
            if swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl[i] * b[i];
            } else {
                b[i + 1] -= dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }

    fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.diag.len();
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * ((i as f64) * 0.618).sin()).collect();
        for _ in 0..4 {
            self.shifted_solve(lambda, &mut v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }
}

/// Negative part of the spectrum of `−d²/dx² + V` on `[x_min, x_max]` with
/// Dirichlet conditions, discretized by central differences on `n` intervals.
pub fn eigen_interval(
    v: impl Fn(f64) -> f64,
    x_min: f64,
    x_max: f64,
    n: usize,
) -> Result<EigenResult> {
    if !(x_max > x_min) {
        return Err(Error::InvalidParameter(format!(
            "empty interval [{x_min}, {x_max}]"
        )));
    }
    if n < 100 {
        return Err(Error::InvalidParameter(format!("need at least 100 intervals, got {n}")));
    }
    let h = (x_max - x_min) / n as f64;
    let diag: Vec<f64> = (1..n).map(|i| 2.0 / (h * h) + v(x_min + h * i as f64)).collect();
    if let Some(i) = diag.iter().position(|d| !d.is_finite()) {
        return Err(Error::Integration(format!(
            "potential is not finite at x = {}",
            x_min + h * (i + 1) as f64
        )));
    }
    let t = Tridiagonal {
        diag,
        off: -1.0 / (h * h),
    };
    let negative = t.count_below(0.0);
    let lower = t.diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * t.off.abs();

    let mut eigenvalues = Vec::with_capacity(negative);
    let mut eigenvectors = Vec::with_capacity(negative);
    for j in 0..negative {
        let lambda = t.bisect(j, lower, 0.0);
        let interior = t.eigenvector(lambda);
        let scale = 1.0 / h.sqrt();
        let sign = interior
            .iter()
            .find(|x| x.abs() > 1e-8)
            .map_or(1.0, |x| x.signum());
        let mut values = Vec::with_capacity(n + 1);
        values.push(0.0);
        values.extend(interior.iter().map(|x| x * scale * sign));
        values.push(0.0);
        eigenvalues.push(lambda);
        eigenvectors.push(GridFunction::new(x_min, h, values)?);
    }
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        x_min,
        length: x_max - x_min,
        step: h,
    })
}

/// [`eigen_interval`] on `[0, length]`.
pub fn eigen_semiaxis(v: impl Fn(f64) -> f64, length: f64, n: usize) -> Result<EigenResult> {
    if !(length > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "domain length must be positive, got {length}"
        )));
    }
    eigen_interval(v, 0.0, length, n)
}

/// Richardson-extrapolated negative eigenvalues from grids of `n` and `2n`
/// intervals, cancelling the `O(h²)` discretization error.
pub fn extrapolated_levels(
    v: impl Fn(f64) -> f64,
    x_min: f64,
    x_max: f64,
    n: usize,
) -> Result<Vec<f64>> {
    let coarse = eigen_interval(&v, x_min, x_max, n)?.eigenvalues;
    let fine = eigen_interval(&v, x_min, x_max, 2 * n)?.eigenvalues;
    // a level just below zero on one grid may be missing on the other
    let m = coarse.len().min(fine.len());
    Ok((0..m).map(|j| (4.0 * fine[j] - coarse[j]) / 3.0).collect())
}

/// `‖Hv − Ev‖ / ‖v‖` of a computed pair, in the discrete operator.
pub fn discrete_residual(v: impl Fn(f64) -> f64, result: &EigenResult, level: usize) -> f64 {
    let vec = &result.eigenvectors[level];
    let h = result.step;
    let n = vec.len() - 1;
    let t = Tridiagonal {
        diag: (1..n).map(|i| 2.0 / (h * h) + v(vec.x(i))).collect(),
        off: -1.0 / (h * h),
    };
    let interior = &vec.values[1..n];
    let hv = t.mul(interior);
    let e = result.eigenvalues[level];
    let num: f64 = hv
        .iter()
        .zip(interior)
        .map(|(a, b)| (a - e * b).powi(2))
        .sum::<f64>()
        .sqrt();
    let den: f64 = interior.iter().map(|b| b * b).sum::<f64>().sqrt();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_particle_has_no_negative_levels() {
        let r = eigen_semiaxis(|_| 0.0, 10.0, 500).unwrap();
        assert!(r.eigenvalues.is_empty());
    }

    #[test]
    fn square_well_levels_converge_quadratically() {
        // −2 inside a box of length π: E_j = (j+1)² − 2 for j = 0
        let e = |n| eigen_semiaxis(|_| -2.0, std::f64::consts::PI, n).unwrap().eigenvalues;
        let (e1, e2, e3) = (e(200)[0], e(400)[0], e(800)[0]);
        assert!((e3 + 1.0).abs() < 1e-4);
        let ratio = (e1 - e2) / (e2 - e3);
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
        let r = eigen_semiaxis(|_| -2.0, std::f64::consts::PI, 800).unwrap();
        assert!(discrete_residual(|_| -2.0, &r, 0) < 1e-8);
        let norm: f64 = r.eigenvectors[0].values.iter().map(|v| v * v).sum::<f64>() * r.step;
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn harmonic_like_well() {
        // x² − 10 shifted into [0, 10]: interior levels near 2j+1 − 10 around x = 5
        let r = eigen_interval(|x| (x - 5.0).powi(2) - 10.0, 0.0, 10.0, 2000).unwrap();
        let expected = [-9.0, -7.0, -5.0, -3.0, -1.0];
        assert_eq!(r.eigenvalues.len(), 5);
        for (e, x) in r.eigenvalues.iter().zip(expected) {
            assert!((e - x).abs() < 1e-3, "{e} vs {x}");
        }
        for j in 0..5 {
            assert!(discrete_residual(|x| (x - 5.0).powi(2) - 10.0, &r, j) < 1e-8);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(eigen_semiaxis(|_| 0.0, 0.0, 500).is_err());
        assert!(eigen_semiaxis(|_| 0.0, 1.0, 50).is_err());
    }
}
