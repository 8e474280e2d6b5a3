//! Codeword enumeration. Message vectors are walked in binary-reflected Gray
//! order so each step XORs a single generator. The high message bits are fixed
//! per work item, and the low bits are walked inside it.

use super::code::LinearCode;
use super::word::Word;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest dimension enumerated exhaustively.
pub const MAX_ENUM_DIM: usize = 28;

const LOW_BITS: usize = 12;

pub(crate) fn check_budget(what: &'static str, k: usize) -> Result<()> {
    if k > MAX_ENUM_DIM {
        Err(Error::Budget { what, needed: k, limit: MAX_ENUM_DIM })
    } else {
        Ok(())
    }
}

/// Folds `visit` over every codeword (as a raw bitmask). Partial states are
/// merged with `merge`; the result does not depend on the number of workers as
/// long as `merge` is commutative.
pub fn fold_codewords<T, I, F, M>(code: &LinearCode, what: &'static str, init: I, visit: F, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, u128) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let k = code.dimension();
    check_budget(what, k)?;
    let rows = code.rows();
    let low = k.min(LOW_BITS);
    let (low_rows, high_rows) = rows.split_at(low);
    let chunks: u64 = 1 << (k - low);
    let walk = |state: &mut T, chunk: u64| {
        let mut word = 0u128;
        for (i, r) in high_rows.iter().enumerate() {
            if chunk >> i & 1 == 1 {
                word ^= r;
            }
        }
        visit(state, word);
        for step in 1u64..(1u64 << low) {
            word ^= low_rows[step.trailing_zeros() as usize];
            visit(state, word);
        }
    };
    let out = (0..chunks)
        .into_par_iter()
        .fold(&init, |mut st, c| {
            walk(&mut st, c);
            st
        })
        .reduce(&init, &merge);
    Ok(out)
}

/// All codewords as bitmasks, in Gray order. Bounded by `MAX_COLLECT_DIM`.
pub fn codewords(code: &LinearCode) -> Result<Vec<u128>> {
    const MAX_COLLECT_DIM: usize = 24;
    if code.dimension() > MAX_COLLECT_DIM {
        return Err(Error::Budget { what: "codeword list", needed: code.dimension(), limit: MAX_COLLECT_DIM });
    }
    let rows = code.rows();
    let mut out = Vec::with_capacity(1 << code.dimension());
    let mut word = 0u128;
    out.push(word);
    for step in 1u64..(1u64 << code.dimension()) {
        word ^= rows[step.trailing_zeros() as usize];
        out.push(word);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub length: usize,
    /// counts[w] = number of codewords of weight w.
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c)).collect()
    }
}

pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    let n = code.length();
    let counts = fold_codewords(
        code,
        "weight distribution",
        || vec![0u64; n + 1],
        |acc, c| acc[c.count_ones() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(WeightDistribution { length: n, counts })
}

/// N[w][j] = #{c : wt(c) = w, wt(c ∩ c̄) = j}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointDistribution {
    pub length: usize,
    pub reference: String,
    pub counts: Vec<Vec<u64>>,
}

impl JointDistribution {
    pub fn get(&self, w: usize, j: usize) -> u64 {
        self.counts.get(w).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn marginal(&self) -> WeightDistribution {
        WeightDistribution { length: self.length, counts: self.counts.iter().map(|r| r.iter().sum()).collect() }
    }
}

pub fn joint_distribution(code: &LinearCode, cfixed: &Word) -> Result<JointDistribution> {
    let n = code.length();
    if cfixed.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: cfixed.len() });
    }
    let cb = cfixed.bits();
    let stride = n + 1;
    let flat = fold_codewords(
        code,
        "joint distribution",
        || vec![0u64; stride * stride],
        |acc, c| acc[c.count_ones() as usize * stride + (c & cb).count_ones() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(JointDistribution {
        length: n,
        reference: cfixed.to_string(),
        counts: flat.chunks(stride).map(|r| r.to_vec()).collect(),
    })
}

pub fn min_weight(code: &LinearCode) -> Result<Option<usize>> {
    let m = fold_codewords(
        code,
        "minimum weight",
        || u32::MAX,
        |m, c| {
            if c != 0 {
                *m = (*m).min(c.count_ones())
            }
        },
        |a, b| a.min(b),
    )?;
    Ok((m != u32::MAX).then_some(m as usize))
}

/// The codewords of weight w, sorted.
pub fn shell(code: &LinearCode, w: usize) -> Result<Vec<Word>> {
    let mut v = fold_codewords(
        code,
        "shell",
        Vec::new,
        |acc, c| {
            if c.count_ones() as usize == w {
                acc.push(c)
            }
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    v.sort_unstable();
    Ok(v.into_iter().map(|b| Word::new_unchecked(b, code.length())).collect())
}

/// Echelon basis with rows kept in increasing pivot (lowest set bit) order.
#[derive(Clone, Default)]
struct XorBasis(Vec<u128>);

impl XorBasis {
    fn insert(&mut self, mut r: u128) {
        for &b in &self.0 {
            if r >> b.trailing_zeros() & 1 == 1 {
                r ^= b;
            }
        }
        if r != 0 {
            let p = r.trailing_zeros();
            let pos = self.0.partition_point(|b| b.trailing_zeros() < p);
            self.0.insert(pos, r);
        }
    }
}

/// ⟨C_w⟩: the span of the weight-w codewords, row-reduced as they stream.
pub fn subcode_generated_by_shell(code: &LinearCode, w: usize) -> Result<LinearCode> {
    let basis = fold_codewords(
        code,
        "shell span",
        XorBasis::default,
        |b, c| {
            if c.count_ones() as usize == w {
                b.insert(c)
            }
        },
        |mut a, b| {
            for r in b.0 {
                a.insert(r);
            }
            a
        },
    )?;
    Ok(LinearCode::from_raw_rows(code.length(), basis.0))
}
