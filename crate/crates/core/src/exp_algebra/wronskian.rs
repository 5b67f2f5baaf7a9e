use crate::darboux::TransformationFunction;
use crate::error::{Error, Result};

use super::sum::{ExpSum, ExpTerm, Hyperbolic};

/// A sign assignment `(ε_1, …, ε_N)` with `ε_1 = +1`; `(ε)` and `(−ε)` are
/// the same cosh term, so only half of all assignments are enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    entries: Vec<i8>,
}

impl SignVector {
    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i] as f64
    }

    /// All `2^{N-1}` sign vectors of length `n` (empty for `n = 0`).
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        let count: u64 = if n == 0 { 0 } else { 1 << (n - 1) };
        (0..count).map(move |bits| {
            let mut entries = Vec::with_capacity(n);
            entries.push(1);
            for l in 1..n {
                entries.push(if bits >> (l - 1) & 1 == 1 { -1 } else { 1 });
            }
            SignVector { entries }
        })
    }
}

/// Checks the alternating `cosh, sinh, cosh, …` family with increasing rates.
pub fn check_alternating(funcs: &[TransformationFunction]) -> Result<()> {
    if funcs.is_empty() {
        return Err(Error::InvalidChain("empty list of transformation functions".into()));
    }
    for (i, f) in funcs.iter().enumerate() {
        let expected = if i % 2 == 0 { Hyperbolic::Cosh } else { Hyperbolic::Sinh };
        if f.kind() != expected {
            return Err(Error::InvalidChain(format!(
                "function {} must be {:?}, found {:?}",
                i + 1,
                expected,
                f.kind()
            )));
        }
    }
    check_increasing(funcs)
}

pub(crate) fn check_increasing(funcs: &[TransformationFunction]) -> Result<()> {
    for (i, w) in funcs.windows(2).enumerate() {
        if !(w[0].rate() < w[1].rate()) {
            return Err(Error::InvalidChain(format!(
                "rates must be strictly increasing: a_{} = {} >= a_{} = {}",
                i + 1,
                w[0].rate(),
                i + 2,
                w[1].rate()
            )));
        }
    }
    Ok(())
}

/// Closed-form Wronskian of the alternating cosh/sinh family as a sum of
/// hyperbolic cosines:
///
/// `W = 2^{1−N} Σ_(ε) ε_2ε_4⋯ε_p ∏_{j>i}(ε_j a_j − ε_i a_i) cosh[Σ_l ε_l(a_l x + b_l)]`
///
/// with `p = N` for even `N` and `p = N − 1` for odd `N`.
pub fn wronskian_closed_form(funcs: &[TransformationFunction]) -> Result<ExpSum> {
    check_alternating(funcs)?;
    let n = funcs.len();
    let p = if n.is_multiple_of(2) { n } else { n - 1 };
    let global = 2f64.powi(1 - n as i32);
    let mut terms = Vec::with_capacity(1 << n);
    for eps in SignVector::all(n) {
        // ε_2 ε_4 … ε_p, one-based
        let mut coeff = global;
        for q in (2..=p).step_by(2) {
            coeff *= eps.get(q - 1);
        }
        for j in 0..n {
            for i in 0..j {
                coeff *= eps.get(j) * funcs[j].rate() - eps.get(i) * funcs[i].rate();
            }
        }
        let (mut rate, mut shift) = (0.0, 0.0);
        for (l, f) in funcs.iter().enumerate() {
            rate += eps.get(l) * f.rate();
            shift += eps.get(l) * f.shift();
        }
        terms.push(ExpTerm::new(0.5 * coeff, rate, shift));
        terms.push(ExpTerm::new(0.5 * coeff, -rate, -shift));
    }
    Ok(ExpSum::from_terms(terms))
}

/// Determinant of the matrix `M[r][c] = columns[c]^{(rows[r])}` over exponential sums.
///
/// Laplace expansion along the last used row with minors memoized by column
/// subset, so the cost is `O(2^n · n)` sum products instead of `n!`.
pub fn derivative_determinant(columns: &[ExpSum], rows: &[usize]) -> ExpSum {
    let n = columns.len();
    assert_eq!(n, rows.len(), "determinant needs a square matrix");
    assert!(n < 24, "determinant order {n} too large");
    if n == 0 {
        return ExpSum::constant(1.0);
    }
    let max_row = *rows.iter().max().unwrap_or(&0);
    let table: Vec<Vec<ExpSum>> = columns
        .iter()
        .map(|c| (0..=max_row).map(|r| c.derivative(r as u32)).collect())
        .collect();

    let full = (1usize << n) - 1;
    let mut minors: Vec<Option<ExpSum>> = vec![None; full + 1];
    minors[0] = Some(ExpSum::constant(1.0));
    let mut by_size: Vec<usize> = (1..=full).collect();
    by_size.sort_by_key(|m| m.count_ones());
    for mask in by_size {
        let t = mask.count_ones() as usize;
        let row = rows[t - 1];
        let mut acc = ExpSum::zero();
        let mut pos = 0;
        for c in 0..n {
            if mask >> c & 1 == 0 {
                continue;
            }
            let sub = minors[mask & !(1 << c)].as_ref().expect("smaller minors first");
            if !sub.is_empty() {
                let mut prod = &table[c][row] * sub;
                if (t - 1 + pos) % 2 == 1 {
                    prod = -prod;
                }
                acc = &acc + &prod;
            }
            pos += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[full].take().unwrap()
}

/// Wronskian `det[f_c^{(r)}]`, `r = 0..n-1`, of arbitrary exponential sums.
pub fn wronskian(funcs: &[ExpSum]) -> ExpSum {
    let rows: Vec<usize> = (0..funcs.len()).collect();
    derivative_determinant(funcs, &rows)
}

/// The `(N−1)`-order Wronskian of all functions except `funcs[omit]`
/// (zero-based), in their original order.
pub fn wronskian_minor(funcs: &[TransformationFunction], omit: usize) -> Result<ExpSum> {
    if omit >= funcs.len() {
        return Err(Error::IndexOutOfRange {
            index: omit,
            len: funcs.len(),
        });
    }
    let rest: Vec<ExpSum> = funcs
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != omit)
        .map(|(_, f)| f.exp_sum().clone())
        .collect();
    Ok(wronskian(&rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(a: &[f64], b: &[f64]) -> Vec<TransformationFunction> {
        TransformationFunction::alternating(a, b).unwrap()
    }

    #[test]
    fn sign_vectors() {
        for n in 1..=6 {
            let all: Vec<_> = SignVector::all(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|s| s.entries()[0] == 1));
        }
    }

    #[test]
    fn closed_form_small_cases() {
        let w1 = wronskian_closed_form(&chain(&[1.0], &[0.0])).unwrap();
        assert_eq!(w1, ExpSum::from_hyperbolic(Hyperbolic::Cosh, 1.0, 0.0).unwrap());

        let w2 = wronskian_closed_form(&chain(&[1.0, 2.0], &[0.0, 0.0])).unwrap();
        assert!((w2.eval(0.0) - 2.0).abs() < 1e-15);
        // ½[cosh 3x + 3 cosh x]
        for &x in &[-1.3f64, 0.0, 0.5, 2.0] {
            let expected = 0.5 * ((3.0 * x).cosh() + 3.0 * x.cosh());
            assert!((w2.eval(x) - expected).abs() < 1e-12 * expected);
        }
        assert!(w2.len() <= 4);
    }

    #[test]
    fn closed_form_rejects_bad_chains() {
        let mut f = chain(&[1.0, 2.0], &[0.0, 0.0]);
        f.swap(0, 1);
        assert!(matches!(wronskian_closed_form(&f), Err(Error::InvalidChain(_))));
        let same = vec![
            TransformationFunction::new(Hyperbolic::Cosh, 1.0, 0.0).unwrap(),
            TransformationFunction::new(Hyperbolic::Sinh, 1.0, 0.0).unwrap(),
        ];
        assert!(matches!(wronskian_closed_form(&same), Err(Error::InvalidChain(_))));
        assert!(wronskian_closed_form(&[]).is_err());
    }

    #[test]
    fn closed_form_matches_expansion() {
        let a = [0.4, 1.1, 1.7, 2.9, 3.3];
        let b = [0.2, -0.5, 0.1, 0.0, 0.7];
        for n in 1..=5 {
            let f = chain(&a[..n], &b[..n]);
            let closed = wronskian_closed_form(&f).unwrap();
            let sums: Vec<ExpSum> = f.iter().map(|t| t.exp_sum().clone()).collect();
            let expanded = wronskian(&sums);
            for &x in &[-2.0, -0.3, 0.0, 0.8, 3.0] {
                let (c, e) = (closed.eval(x), expanded.eval(x));
                assert!((c - e).abs() < 1e-11 * c.abs().max(1.0), "n={n} x={x}: {c} vs {e}");
            }
        }
    }

    #[test]
    fn minors() {
        let f = chain(&[1.0, 2.0], &[0.3, -0.2]);
        let m1 = wronskian_minor(&f, 0).unwrap();
        assert_eq!(&m1, f[1].exp_sum());
        let m2 = wronskian_minor(&f, 1).unwrap();
        assert_eq!(&m2, f[0].exp_sum());
        assert!(matches!(
            wronskian_minor(&f, 2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));

        // W(cosh x, cosh 3x) at 0 is 0
        let f3 = chain(&[1.0, 2.0, 3.0], &[0.0; 3]);
        let m = wronskian_minor(&f3, 1).unwrap();
        assert!(m.eval(0.0).abs() < 1e-15);
        assert!(m.eval(0.5).abs() > 0.1);
    }

    #[test]
    fn even_chain_is_even() {
        let w = wronskian_closed_form(&chain(&[1.0, 2.0], &[0.0, 0.0])).unwrap();
        for &x in &[0.1, 0.9, 2.4] {
            assert!((w.eval(x) - w.eval(-x)).abs() < 1e-12 * w.eval(x));
        }
    }
}
