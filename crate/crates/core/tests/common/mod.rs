//! Independent brute-force oracles shared by the integration tests. Nothing
//! here calls the enumeration or transform code under test.
#![allow(dead_code)]

use harmonic_codes::gf2::{LinearCode, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_code(rng: &mut impl Rng, n: usize, gens: usize) -> LinearCode {
    let words: Vec<Word> = (0..gens).map(|_| Word::from_bits(rng.gen::<u128>() & mask(n), n).unwrap()).collect();
    LinearCode::span(n, &words).unwrap()
}

pub fn mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Every codeword, by summing each subset of the generators.
pub fn naive_codewords(code: &LinearCode) -> Vec<u128> {
    let g: Vec<u128> = code.generators().iter().map(|w| w.bits()).collect();
    (0u64..1 << g.len())
        .map(|s| g.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0, |a, (_, w)| a ^ w))
        .collect()
}

/// The dual by filtering all 2^n vectors.
pub fn naive_dual_words(code: &LinearCode) -> Vec<u128> {
    let n = code.length();
    let g: Vec<u128> = code.generators().iter().map(|w| w.bits()).collect();
    (0u128..1 << n).filter(|v| g.iter().all(|w| (v & w).count_ones() % 2 == 0)).collect()
}

pub fn weight_counts(n: usize, words: &[u128]) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    for w in words {
        c[w.count_ones() as usize] += 1;
    }
    c
}

pub fn rat(a: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

/// In-place Walsh–Hadamard transform: f̂(v) = Σ_S f(S)(−1)^{|S∩v|}.
pub fn walsh_hadamard(f: &mut [i64]) {
    let mut h = 1;
    while h < f.len() {
        for i in (0..f.len()).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (f[j], f[j + h]);
                f[j] = a + b;
                f[j + h] = a - b;
            }
        }
        h *= 2;
    }
}

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
