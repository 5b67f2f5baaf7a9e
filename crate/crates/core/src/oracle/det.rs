/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("nonempty range");
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            let (pivot, rest) = m.split_at_mut(row);
            for (r, p) in rest[0][col..].iter_mut().zip(&pivot[col][col..]) {
                *r -= factor * p;
            }
        }
    }
    det
}

/// Wronskian from sampled derivatives: `derivs[i][r]` is `f_i^{(r)}(x)`,
/// `r = 0..N−1`.
pub fn numerical_wronskian(derivs: &[Vec<f64>]) -> f64 {
    let n = derivs.len();
    let matrix = (0..n)
        .map(|r| derivs.iter().map(|f| f[r]).collect())
        .collect();
    determinant(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(numerical_wronskian(&[vec![3.5]]), 3.5);
        // cosh x, sinh 2x at 0
        let w = numerical_wronskian(&[vec![1.0, 0.0], vec![0.0, 2.0]]);
        assert_eq!(w, 2.0);
        assert_eq!(determinant(vec![]), 1.0);
    }

    #[test]
    fn pivoting() {
        let m = vec![
            vec![0.0, 2.0, 1.0],
            vec![1.0, 1.0, 0.0],
            vec![3.0, 0.0, 1.0],
        ];
        // 0·(1) − 2·(1 − 0) + 1·(0 − 3) = −5
        assert!((determinant(m) + 5.0).abs() < 1e-14);
    }
}
