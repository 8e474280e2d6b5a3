//! Binomial coefficients and subset enumeration on bitmasks.

use num_bigint::BigInt;
use std::sync::OnceLock;

const MAX_N: usize = 128;

fn pascal() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![0u128; MAX_N + 1]; MAX_N + 1];
        for n in 0..=MAX_N {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// C(n, k) for n ≤ 128; zero outside 0 ≤ k ≤ n. Negative arguments give zero.
pub fn binom_u128(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    assert!(n as usize <= MAX_N, "binomial table covers n ≤ 128");
    pascal()[n as usize][k as usize]
}

pub fn binom(n: i64, k: i64) -> BigInt {
    BigInt::from(binom_u128(n, k))
}

pub fn binom_i64(n: i64, k: i64) -> i64 {
    i64::try_from(binom_u128(n, k)).expect("binomial fits in i64")
}

/// Iterates the k-subsets of {0..n} as bitmasks in colex (= increasing integer) order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u128> {
    assert!(n <= 128);
    let mut cur: Option<u128> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(low_mask(k))
    };
    let limit_bit = n;
    std::iter::from_fn(move || {
        let c = cur?;
        cur = next_same_weight(c, limit_bit);
        Some(c)
    })
}

/// Gosper's hack bounded to masks below 2^n.
fn next_same_weight(c: u128, n: usize) -> Option<u128> {
    if c == 0 {
        return None;
    }
    let u = c & c.wrapping_neg();
    let (v, overflow) = c.overflowing_add(u);
    if overflow || v == 0 {
        return None;
    }
    let next = v | (((v ^ c) >> 2) / u);
    if n < 128 && next >> n != 0 {
        None
    } else {
        Some(next)
    }
}

pub fn low_mask(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(j)
        }
    })
}

/// Colex rank of a k-subset: Σ_i C(b_i, i+1) over its sorted elements b_0 < b_1 < ….
pub fn colex_rank(mask: u128) -> usize {
    bits(mask)
        .enumerate()
        .map(|(i, b)| binom_u128(b as i64, i as i64 + 1) as usize)
        .sum()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}
