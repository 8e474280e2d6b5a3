//! t-designs from families of equal-weight words: λ-counting, the harmonic
//! vanishing criterion, the monomial moment criterion, and reports for the
//! shells of extremal Type II codes.

use crate::combinatorics::{binom, binom_u128, colex_rank, subsets_of_size};
use crate::discrete::specht_basis;
use crate::error::{Error, Result};
use crate::gf2::{min_weight, shell, weight_distribution, CodeType, LinearCode, Word};
use crate::hwe::WordTable;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Largest C(n, t) counting table.
pub const LAMBDA_TABLE_BUDGET: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    n: usize,
    w: usize,
    blocks: Vec<Word>,
}

impl Design {
    pub fn new(n: usize, w: usize, blocks: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for b in &blocks {
            if b.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: b.len() });
            }
            if b.weight() != w {
                return Err(Error::Precondition(format!("block {b} has weight {}, expected {w}", b.weight())));
            }
            if !seen.insert(b.bits()) {
                return Err(Error::Precondition(format!("repeated block {b}")));
            }
        }
        if w > n {
            return Err(Error::Precondition(format!("block weight {w} exceeds length {n}")));
        }
        Ok(Design { n, w, blocks })
    }

    /// The weight-w codewords of a code.
    pub fn from_shell(code: &LinearCode, w: usize) -> Result<Self> {
        Design::new(code.length(), w, shell(code, w)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_weight(&self) -> usize {
        self.w
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    fn table(&self) -> WordTable {
        WordTable::new(self.n, &self.blocks.iter().map(|b| b.bits()).collect::<Vec<_>>())
    }
}

/// λ if every t-subset lies in the same number of blocks. Each block adds one
/// to each of its C(w, t) sub-t-sets in a table indexed by colex rank.
pub fn lambda_of(design: &Design, t: usize) -> Result<Option<u64>> {
    let (n, w) = (design.n, design.w);
    if t > w {
        return Err(Error::Precondition(format!("t = {t} exceeds block weight {w}")));
    }
    if design.blocks.is_empty() {
        return Ok(Some(0));
    }
    let size = binom_u128(n as i64, t as i64);
    if size > LAMBDA_TABLE_BUDGET {
        return Err(Error::SizeBudget { what: "λ table", size, limit: LAMBDA_TABLE_BUDGET });
    }
    let size = size as usize;
    let local_sets: Vec<u128> = subsets_of_size(w, t).collect();
    let table = design
        .blocks
        .par_iter()
        .fold(
            || vec![0u32; size],
            |mut acc, b| {
                let sup = b.support();
                for &m in &local_sets {
                    let s = crate::combinatorics::bits(m).fold(0u128, |a, i| a | 1 << sup[i]);
                    acc[colex_rank(s)] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u32; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let first = table[0];
    Ok(table.iter().all(|&c| c == first).then_some(first as u64))
}

/// Σ_{v ∈ Σ_w} m(S)(v) for |S| = s: Σ_i (−1)^i C(s, i) C(n − s, w − i).
pub fn sphere_monomial_sum(n: usize, s: usize, w: usize) -> BigInt {
    let (n, s, w) = (n as i64, s as i64, w as i64);
    (0..=s.min(w)).fold(BigInt::from(0), |acc, i| {
        let t = binom(s, i) * binom(n - s, w - i);
        if i % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

fn moments_match(design: &Design, table: &WordTable, s: usize) -> bool {
    let (n, w) = (design.n, design.w);
    let size = BigInt::from(design.blocks.len());
    let sphere = binom(n as i64, w as i64);
    let target = &size * sphere_monomial_sum(n, s, w);
    subsets_of_size(n, s).par_bridge().all(|m| {
        let sum: i64 = table.monomial_sums(m).iter().map(|(_, v)| v).sum();
        BigInt::from(sum) * &sphere == target
    })
}

/// Σ_D m(S) = (|D|/|Σ_w|)·Σ_{Σ_w} m(S) for every monomial with |S| ≤ t.
pub fn moment_check(design: &Design, t: usize) -> Result<bool> {
    let table = design.table();
    Ok((0..=t.min(design.n)).all(|s| moments_match(design, &table, s)))
}

/// Σ_{v∈D} q(v) = 0 for every q in a basis of D⁰_d, d = 1..t. Degrees above n/2
/// have no harmonics, so there the monomial moments are compared instead.
pub fn is_design_harmonic(design: &Design, t: usize) -> Result<bool> {
    let n = design.n;
    let table = design.table();
    for d in 1..=t.min(n / 2) {
        let ok = specht_basis(n, d)
            .par_iter()
            .all(|p| table.polytabloid_sums(p).iter().all(|&(_, s)| s == 0));
        if !ok {
            return Ok(false);
        }
    }
    Ok((n / 2 + 1..=t.min(n)).all(|s| moments_match(design, &table, s)))
}

/// Guaranteed design strength for extremal Type II codes of length n ≡ 0 mod 8.
pub fn sigma(n: usize) -> Result<usize> {
    match n % 24 {
        0 => Ok(5),
        8 => Ok(3),
        16 => Ok(1),
        _ => Err(Error::Precondition(format!("σ(n) needs n ≡ 0 mod 8, got {n}"))),
    }
}

pub fn extremal_bound(n: usize) -> usize {
    4 * (n / 24) + 4
}

fn require_type_ii(code: &LinearCode) -> Result<()> {
    if code.classify_type() != CodeType::TypeII {
        return Err(Error::Precondition("expected a Type II code".into()));
    }
    Ok(())
}

pub fn extremal_check(code: &LinearCode) -> Result<bool> {
    require_type_ii(code)?;
    Ok(min_weight(code)? == Some(extremal_bound(code.length())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShellReport {
    pub weight: usize,
    pub shell_size: u64,
    /// Largest t ≤ σ(n)+2 with the shell a t-design (λ-count).
    pub verified_t: usize,
    /// σ(n)+2 when every degree-(σ(n)+2) harmonic sums to zero on the shell.
    pub extra_vanishing_degree: Option<usize>,
}

pub fn assmus_mattson_report(code: &LinearCode) -> Result<Vec<ShellReport>> {
    require_type_ii(code)?;
    let n = code.length();
    let s = sigma(n)?;
    let dist = weight_distribution(code)?;
    let mut out = Vec::new();
    for (w, count) in dist.nonzero() {
        if w == 0 {
            continue;
        }
        let design = Design::from_shell(code, w)?;
        let mut verified_t = 0;
        for t in 1..=(s + 2).min(w) {
            if lambda_of(&design, t)?.is_some() {
                verified_t = t;
            } else {
                break;
            }
        }
        let table = design.table();
        let extra = s + 2;
        let vanishes = specht_basis(n, extra)
            .par_iter()
            .all(|p| table.polytabloid_sums(p).iter().all(|&(_, v)| v == 0));
        out.push(ShellReport {
            weight: w,
            shell_size: count,
            verified_t,
            extra_vanishing_degree: vanishes.then_some(extra),
        });
    }
    Ok(out)
}
