use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A binary word of length n ≤ 128. Coordinate j is bit j of `bits`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    bits: u128,
    len: u8,
}

pub const MAX_LEN: usize = 128;

pub(crate) fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEN {
        Err(Error::UnsupportedLength(n))
    } else {
        Ok(())
    }
}

pub(crate) fn mask_of(n: usize) -> u128 {
    crate::combinatorics::low_mask(n)
}

impl Word {
    pub fn zero(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Word { bits: mask_of(len), len: len as u8 })
    }

    pub fn from_bits(bits: u128, len: usize) -> Result<Self> {
        check_len(len)?;
        if bits & !mask_of(len) != 0 {
            return Err(Error::Precondition(format!("bits set beyond length {len}")));
        }
        Ok(Word { bits, len: len as u8 })
    }

    pub(crate) fn new_unchecked(bits: u128, len: usize) -> Self {
        debug_assert!(len >= 1 && len <= MAX_LEN && bits & !mask_of(len) == 0);
        Word { bits, len: len as u8 }
    }

    /// Word with ones exactly at `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        check_len(len)?;
        let mut bits = 0u128;
        for &j in support {
            if j >= len {
                return Err(Error::Precondition(format!("coordinate {j} outside length {len}")));
            }
            bits |= 1 << j;
        }
        Ok(Word { bits, len: len as u8 })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, j: usize) -> bool {
        j < self.len() && (self.bits >> j) & 1 == 1
    }

    pub fn with(&self, j: usize, value: bool) -> Self {
        assert!(j < self.len());
        let bits = if value { self.bits | 1 << j } else { self.bits & !(1 << j) };
        Word { bits, len: self.len }
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn support(&self) -> Vec<usize> {
        crate::combinatorics::bits(self.bits).collect()
    }

    fn same_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            Err(Error::LengthMismatch { expected: self.len(), got: other.len() })
        } else {
            Ok(())
        }
    }

    /// The intersection v ∩ w (coordinatewise AND).
    pub fn meet(&self, other: &Word) -> Result<Word> {
        self.same_len(other)?;
        Ok(Word { bits: self.bits & other.bits, len: self.len })
    }

    pub fn meet_weight(&self, other: &Word) -> Result<usize> {
        self.same_len(other)?;
        Ok((self.bits & other.bits).count_ones() as usize)
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        self.same_len(other)?;
        Ok(Word { bits: self.bits ^ other.bits, len: self.len })
    }

    /// The pairing Σ v_j w_j mod 2.
    pub fn dot(&self, other: &Word) -> Result<bool> {
        Ok(self.meet_weight(other)? % 2 == 1)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let n = self.len() + other.len();
        check_len(n)?;
        Ok(Word { bits: self.bits | other.bits << self.len(), len: n as u8 })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_len(s.len()).map_err(|_| Error::Parse { line: 1, msg: format!("word length {} outside 1..=128", s.len()) })?;
        let mut bits = 0u128;
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << j,
                _ => return Err(Error::Parse { line: 1, msg: format!("unexpected character {ch:?}") }),
            }
        }
        Ok(Word { bits, len: s.len() as u8 })
    }
}
