use crate::combinatorics::bits;
use crate::error::{Error, Result};
use crate::gf2::Word;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A homogeneous multilinear polynomial of degree d in z_j = (−1)^{v_j},
/// j = 0..n−1. The monomial m(S) = Π_{j∈S} z_j is keyed by the bitmask of S.
/// Keys iterate in colex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscretePoly {
    n: usize,
    d: usize,
    terms: BTreeMap<u128, BigRational>,
}

impl DiscretePoly {
    pub fn zero(n: usize, d: usize) -> Self {
        assert!(n <= 128 && d <= n, "need d ≤ n ≤ 128");
        DiscretePoly { n, d, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, set: u128) -> Self {
        let mut p = Self::zero(n, set.count_ones() as usize);
        p.add_term(set, BigRational::one());
        p
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n, 0);
        p.add_term(0, c);
        p
    }

    pub fn from_terms(n: usize, d: usize, terms: impl IntoIterator<Item = (u128, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(n, d);
        for (s, c) in terms {
            if s.count_ones() as usize != d || (n < 128 && s >> n != 0) {
                return Err(Error::Precondition(format!("monomial {s:#x} is not a {d}-subset of 0..{n}")));
            }
            p.add_term(s, c);
        }
        Ok(p)
    }

    /// Adds c·m(S); |S| must equal the degree.
    pub fn add_term(&mut self, set: u128, c: BigRational) {
        debug_assert_eq!(set.count_ones() as usize, self.d);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(set).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<u128, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, set: u128) -> BigRational {
        self.terms.get(&set).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.d != o.d {
            return Err(Error::Precondition(format!(
                "(n, d) = ({}, {}) vs ({}, {})",
                self.n, self.d, o.n, o.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.compatible(o)?;
        let mut p = self.clone();
        for (s, c) in &o.terms {
            p.add_term(*s, c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.d);
        }
        DiscretePoly { n: self.n, d: self.d, terms: self.terms.iter().map(|(s, a)| (*s, a * c)).collect() }
    }

    /// Value at the word with bitmask `v`.
    pub fn evaluate_bits(&self, v: u128) -> BigRational {
        let mut pos = BigInt::zero();
        let mut neg = BigInt::zero();
        let mut any_frac = false;
        for c in self.terms.values() {
            if !c.is_integer() {
                any_frac = true;
                break;
            }
        }
        if any_frac {
            let mut acc = BigRational::zero();
            for (s, c) in &self.terms {
                if (s & v).count_ones() % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            return acc;
        }
        for (s, c) in &self.terms {
            if (s & v).count_ones() % 2 == 0 {
                pos += c.numer();
            } else {
                neg += c.numer();
            }
        }
        BigRational::from_integer(pos - neg)
    }

    pub fn evaluate(&self, v: &Word) -> Result<BigRational> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        Ok(self.evaluate_bits(v.bits()))
    }
}

impl fmt::Display for DiscretePoly {
    /// Terms `c * m(j1,j2,…)` joined by ` + ` (0-based coordinates); `0` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let idx: Vec<String> = bits(*s).map(|j| j.to_string()).collect();
                format!("{c} * m({})", idx.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
