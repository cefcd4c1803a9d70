//! Exact arithmetic: rationals, binomial coefficients and radical comparisons.

mod interval;
mod radical;
mod rational;

pub use interval::Interval;
pub use radical::{
    compare_radical, Comparison, ComparisonBudget, ComparisonMethod, RadicalFactor, RadicalProduct,
    RadicalVerdict, DEFAULT_DIGIT_BUDGET, DEFAULT_FALLBACK_DIGITS,
};
pub use rational::Rational;

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)`, with `C(n, k) = 0` whenever `n < k` (including every negative `n`).
pub fn binomial(n: i64, k: u64) -> BigUint {
    if n < 0 || (n as u64) < k {
        return BigUint::default();
    }
    let n = n as u64;
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        // acc = C(n, j) here; C(n, j+1) = C(n, j) * (n - j) / (j + 1) is exact
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64, k: u64) -> u64 {
        u64::try_from(binomial(n, k)).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(b(2, 2), 1);
        assert_eq!(b(1, 3), 0);
        assert_eq!(b(5, 2), 10);
        assert_eq!(b(0, 0), 1);
        assert_eq!(b(-3, 2), 0);
        assert_eq!(b(4, 3), 4);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..60i64 {
            for k in 1..=(n as u64 + 1) {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn large_argument() {
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }
}
