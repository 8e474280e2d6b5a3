//! Zonal harmonics Z_d for a reference word c̄ of weight wc: the harmonic
//! polynomials of degree d invariant under the coordinate permutations that
//! fix c̄. Their values depend on v only through (wt(v), wt(v ∩ c̄)).

use crate::combinatorics::{binom, binom_u128, subsets_of_size};
use crate::discrete::DiscretePoly;
use crate::error::{Error, Result};
use crate::gf2::Word;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Largest C(n, d) expanded by `ZonalHarmonic::as_discrete_poly`.
pub const EXPANSION_BUDGET: u128 = 200_000;

fn check(n: usize, wc: usize, d: usize, k: usize, wv: usize, wj: usize) -> Result<()> {
    let ok = k <= d && d <= wc && wc <= n && n <= 128 && wj <= wv.min(wc) && wv - wj <= n - wc;
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("invalid zonal arguments n={n} wc={wc} d={d} k={k} wv={wv} wj={wj}")))
    }
}

/// Σ_i (−1)^i C(a, i) C(b, k−i): the value of the elementary symmetric sum of
/// degree k over a +1/−1 multiset with a entries −1 and b entries +1.
fn signed_sum(a: i64, b: i64, k: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let t = binom(a, i) * binom(b, k - i);
        if i % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Q_{d,k}(v) from (wt(v), wt(v∩c̄)): the sum over k-subsets of supp(c̄) and
/// (d−k)-subsets of its complement of Π (−1)^{v_j}. Both factors are signed.
pub fn qdk(n: usize, wc: usize, d: usize, k: usize, wv: usize, wj: usize) -> Result<BigInt> {
    check(n, wc, d, k, wv, wj)?;
    let (n, wc, d, k, wv, wj) = (n as i64, wc as i64, d as i64, k as i64, wv as i64, wj as i64);
    Ok(signed_sum(wj, wc - wj, k) * signed_sum(wv - wj, (n - wc) - (wv - wj), d - k))
}

/// Q_{d,k} expanded in the monomial basis for the reference word c̄.
pub fn qdk_poly(cfixed: &Word, d: usize, k: usize) -> Result<DiscretePoly> {
    let n = cfixed.len();
    let wc = cfixed.weight();
    if k > d || d > wc {
        return Err(Error::Precondition(format!("need k ≤ d ≤ wt(c̄), got k={k} d={d} wc={wc}")));
    }
    let size = binom_u128(wc as i64, k as i64) * binom_u128((n - wc) as i64, (d - k) as i64);
    if size > EXPANSION_BUDGET {
        return Err(Error::SizeBudget { what: "Q_{d,k} expansion", size, limit: EXPANSION_BUDGET });
    }
    let one: Vec<usize> = cfixed.support();
    let zero: Vec<usize> = (0..n).filter(|&j| !cfixed.get(j)).collect();
    let spread = |idx: &[usize], m: u128| crate::combinatorics::bits(m).fold(0u128, |acc, i| acc | 1 << idx[i]);
    let mut p = DiscretePoly::zero(n, d);
    for a in subsets_of_size(one.len(), k) {
        let sa = spread(&one, a);
        for b in subsets_of_size(zero.len(), d - k) {
            p.add_term(sa | spread(&zero, b), BigRational::one());
        }
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonalHarmonic {
    n: usize,
    wc: usize,
    d: usize,
    kvec: Vec<BigRational>,
}

impl ZonalHarmonic {
    /// Z_d = Σ_k κ_k Q_{d,k} normalized by κ_0 = 1, with
    /// κ_{k+1} = −((n−wc) − (d−k−1))/(wc−k)·κ_k.
    pub fn new(n: usize, wc: usize, d: usize) -> Result<Self> {
        if d > wc || wc > n || n == 0 || n > 128 {
            return Err(Error::Precondition(format!("zonal harmonic needs d ≤ wc ≤ n ≤ 128, got n={n} wc={wc} d={d}")));
        }
        let mut kvec = vec![BigRational::one()];
        for k in 0..d {
            let num = (n - wc) as i64 - (d as i64 - k as i64 - 1);
            let den = (wc - k) as i64;
            let next = -kvec[k].clone() * BigRational::new(num.into(), den.into());
            kvec.push(next);
        }
        Ok(ZonalHarmonic { n, wc, d, kvec })
    }

    /// κ_k from the product (−1)^k Π_{ℓ<k} ((n−wc)−(d−ℓ−1))/(wc−ℓ).
    pub fn closed_form_kvec(n: usize, wc: usize, d: usize) -> Vec<BigRational> {
        (0..=d)
            .map(|k| {
                let mut c = BigRational::one();
                for l in 0..k {
                    c *= BigRational::new(
                        ((n - wc) as i64 - (d as i64 - l as i64 - 1)).into(),
                        ((wc - l) as i64).into(),
                    );
                }
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn wc(&self) -> usize {
        self.wc
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn kvec(&self) -> &[BigRational] {
        &self.kvec
    }

    pub fn evaluate(&self, wv: usize, wj: usize) -> Result<BigRational> {
        check(self.n, self.wc, self.d, 0, wv, wj)?;
        let mut acc = BigRational::zero();
        for (k, c) in self.kvec.iter().enumerate() {
            if !c.is_zero() {
                acc += c * BigRational::from_integer(qdk(self.n, self.wc, self.d, k, wv, wj)?);
            }
        }
        Ok(acc)
    }

    /// Z_d evaluated at every feasible (wt(v), wt(v∩c̄)); None where infeasible.
    pub fn value_table(&self) -> Vec<Vec<Option<BigRational>>> {
        (0..=self.n)
            .map(|wv| {
                (0..=self.n)
                    .map(|wj| self.evaluate(wv, wj).ok())
                    .collect()
            })
            .collect()
    }

    pub fn as_discrete_poly(&self, cfixed: &Word) -> Result<DiscretePoly> {
        if cfixed.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: cfixed.len() });
        }
        if cfixed.weight() != self.wc {
            return Err(Error::Precondition(format!("reference word has weight {}, expected {}", cfixed.weight(), self.wc)));
        }
        let size = binom_u128(self.n as i64, self.d as i64);
        if size > EXPANSION_BUDGET {
            return Err(Error::SizeBudget { what: "zonal expansion", size, limit: EXPANSION_BUDGET });
        }
        let mut p = DiscretePoly::zero(self.n, self.d);
        for (k, c) in self.kvec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (s, a) in qdk_poly(cfixed, self.d, k)?.terms() {
                p.add_term(*s, a * c);
            }
        }
        Ok(p)
    }
}
