//! Closed-form counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn pow(b: i64, e: i64) -> BigInt {
    if e < 0 {
        return BigInt::zero();
    }
    num_traits::pow(BigInt::from(b), e as usize)
}

/// `|P_{k,n}| = (1/k) C(n+k-1, k-1) C(n+k-2, k-1)`.
pub fn polyominoes(k: i64, n: i64) -> BigInt {
    binom(n + k - 1, k - 1) * binom(n + k - 2, k - 1) / k
}

/// `k^{n-1} C(n+k-2, k-1)`.
pub fn labelled(k: i64, n: i64) -> BigInt {
    pow(k, n - 1) * binom(n + k - 2, k - 1)
}

pub fn doubly(k: i64, n: i64) -> BigInt {
    pow(k, n) * pow(n - 1, k - 1) + pow(k - 1, n - 1) * pow(n, k) - pow(k - 1, n - 1) * pow(n - 1, k - 1) * (n + k - 1)
}

/// `k^{n-1} n^{k-1}`.
pub fn doubly_star(k: i64, n: i64) -> BigInt {
    pow(k, n - 1) * pow(n, k - 1)
}

/// Coefficient of `x^n` in `(1 - kx)^{-k}`.
pub fn labelled_series_coeff(k: i64, n: i64) -> BigInt {
    binom(n + k - 1, n) * pow(k, n)
}
