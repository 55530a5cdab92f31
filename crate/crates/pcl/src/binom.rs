//! Exact binomial coefficients.
//!
//! Everything downstream works in exact integer arithmetic; out-of-range
//! binomials are 0 by convention, which extends the signed correction
//! terms smoothly past their natural range.

/// `C(n, k)` as an exact `u128`; 0 when `k > n`.
pub(crate) fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn binomial_i128(n: u32, k: u32) -> i128 {
    binomial(n, k) as i128
}
