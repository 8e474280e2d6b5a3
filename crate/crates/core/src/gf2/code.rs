use super::word::{check_len, mask_of, Word};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A binary linear code stored as the reduced row echelon form of a generator
/// matrix. The pivot of a row is its lowest coordinate; rows are sorted by pivot
/// and each pivot column is zero in every other row, so equal codes have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearCode {
    n: usize,
    rows: Vec<u128>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CodeType {
    NotSelfDual,
    TypeI,
    TypeII,
}

/// Reduce a list of rows to RREF (pivot = lowest set bit).
pub(crate) fn rref(mut rows: Vec<u128>) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for r in rows.drain(..) {
        let mut r = r;
        for &b in &basis {
            if r >> b.trailing_zeros() & 1 == 1 {
                r ^= b;
            }
        }
        if r == 0 {
            continue;
        }
        let p = r.trailing_zeros();
        for b in basis.iter_mut() {
            if *b >> p & 1 == 1 {
                *b ^= r;
            }
        }
        basis.push(r);
    }
    basis.sort_by_key(|r| r.trailing_zeros());
    basis
}

impl LinearCode {
    /// Span of the given words; dependent generators are dropped.
    pub fn span(n: usize, words: &[Word]) -> Result<Self> {
        check_len(n)?;
        for w in words {
            if w.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: w.len() });
            }
        }
        Ok(LinearCode { n, rows: rref(words.iter().map(|w| w.bits()).collect()) })
    }

    /// Code with the given basis; errors when the words are dependent.
    pub fn from_basis(n: usize, words: &[Word]) -> Result<Self> {
        let c = Self::span(n, words)?;
        if c.dimension() != words.len() {
            return Err(Error::Dependent { rank: c.dimension(), rows: words.len() });
        }
        Ok(c)
    }

    pub(crate) fn from_raw_rows(n: usize, rows: Vec<u128>) -> Self {
        LinearCode { n, rows: rref(rows) }
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(LinearCode { n, rows: Vec::new() })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(LinearCode { n, rows: (0..n).map(|j| 1u128 << j).collect() })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn generators(&self) -> Vec<Word> {
        self.rows.iter().map(|&r| Word::new_unchecked(r, self.n)).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.trailing_zeros() as usize).collect()
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: w.len() });
        }
        Ok(self.reduce(w.bits()) == 0)
    }

    pub(crate) fn reduce(&self, mut bits: u128) -> u128 {
        for &r in &self.rows {
            if bits >> r.trailing_zeros() & 1 == 1 {
                bits ^= r;
            }
        }
        bits
    }

    /// The annihilator under Σ v_j w_j mod 2.
    pub fn dual(&self) -> LinearCode {
        let pivots = self.pivots();
        let pivot_mask: u128 = pivots.iter().fold(0, |m, &p| m | 1 << p);
        let free = mask_of(self.n) & !pivot_mask;
        // For each free column f: e_f + Σ_{rows with bit f} e_pivot(row).
        let rows = crate::combinatorics::bits(free)
            .map(|f| {
                let mut v = 1u128 << f;
                for (&r, &p) in self.rows.iter().zip(&pivots) {
                    if r >> f & 1 == 1 {
                        v |= 1 << p;
                    }
                }
                v
            })
            .collect();
        LinearCode::from_raw_rows(self.n, rows)
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| (a & b).count_ones() % 2 == 0))
    }

    /// Every generator weight ≡ 0 mod 4 and the code is self-orthogonal, which
    /// forces every codeword weight ≡ 0 mod 4.
    pub fn is_doubly_even(&self) -> bool {
        self.is_self_orthogonal() && self.rows.iter().all(|r| r.count_ones() % 4 == 0)
    }

    pub fn classify_type(&self) -> CodeType {
        if !self.is_self_dual() {
            CodeType::NotSelfDual
        } else if self.rows.iter().all(|r| r.count_ones() % 4 == 0) {
            CodeType::TypeII
        } else {
            CodeType::TypeI
        }
    }

    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        let n = self.n + other.n;
        check_len(n)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(LinearCode::from_raw_rows(n, rows))
    }

    pub fn add_generators(&self, words: &[Word]) -> Result<LinearCode> {
        let mut all = self.generators();
        all.extend_from_slice(words);
        LinearCode::span(self.n, &all)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.rows.iter().all(|&r| other.reduce(r) == 0)
    }
}
