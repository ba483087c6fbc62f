//! Truncated power series with integer coefficients, used as dimension oracles.

/// Coefficients `0..=max` of `numerator / ∏ (1 − t^k)` for `k` in `denominator`.
///
/// `numerator` lists coefficients from `t⁰` upward.
pub fn rational_series(numerator: &[i64], denominator: &[u32], max: usize) -> Vec<i64> {
    let mut c = vec![0i64; max + 1];
    for (i, &a) in numerator.iter().enumerate().take(max + 1) {
        c[i] = a;
    }
    for &k in denominator {
        let k = k as usize;
        assert!(k > 0, "denominator factors need positive degree");
        // multiply by 1/(1 − t^k) = running sum with stride k
        for i in k..=max {
            c[i] += c[i - k];
        }
    }
    c
}
