//! Exact 64-bit binomial arithmetic and canonical k-subset enumeration.
//!
//! The binomial convention throughout the crate is C(p, q) = 0 whenever
//! p < q, which makes every prefix bound below the arc size vanish.

use itertools::Itertools;

use crate::error::{Error, Result};

/// Binomial coefficient C(p, q) with exact 64-bit arithmetic.
///
/// Returns 0 when p < q and fails with `ArithmeticOverflow` when the result
/// does not fit in a `u64`.
pub fn binom(p: u64, q: u64) -> Result<u64> {
    if p < q {
        return Ok(0);
    }
    let r = q.min(p - q);
    let mut acc: u128 = 1;
    for i in 1..=r {
        // acc equals C(p - r + i, i) after each step, so it never exceeds the
        // final coefficient and the u128 product cannot wrap.
        acc = acc * (p - r + i) as u128 / i as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::ArithmeticOverflow { p, q });
        }
    }
    Ok(acc as u64)
}

/// `binom` over `usize` arguments, as used by index arithmetic.
pub(crate) fn binom_us(p: usize, q: usize) -> Result<u64> {
    binom(p as u64, q as u64)
}

/// All k-subsets of {0, .., n-1} in lexicographic order, each sorted ascending.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Lexicographic rank of a sorted k-subset of {0, .., n-1}.
///
/// Inverse of the `k_subsets` enumeration order.
pub fn subset_rank(n: usize, subset: &[usize]) -> Result<usize> {
    let k = subset.len();
    let mut rank: u128 = 0;
    let mut next = 0usize;
    for (i, &v) in subset.iter().enumerate() {
        for skipped in next..v {
            rank += binom_us(n - 1 - skipped, k - 1 - i)? as u128;
        }
        next = v + 1;
    }
    usize::try_from(rank).map_err(|_| Error::ArithmeticOverflow {
        p: n as u64,
        q: k as u64,
    })
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
