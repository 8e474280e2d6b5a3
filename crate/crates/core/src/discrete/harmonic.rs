//! Harmonic subspaces D⁰_d = ker X̃′ and the decomposition of D_d.

use super::operators::{apply_x_or_zero, apply_y};
use super::poly::DiscretePoly;
use crate::combinatorics::{binom_u128, colex_rank, factorial, subsets_of_size};
use crate::error::{Error, Result};
use crate::linalg::{self, rank_mod_p};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Largest number of matrix entries for exact rational elimination.
pub const EXACT_ENTRY_BUDGET: u128 = 400_000;

pub fn is_harmonic(q: &DiscretePoly) -> bool {
    apply_x_or_zero(q).is_zero()
}

/// C(n,d) − C(n,d−1) for d ≤ n/2, else 0.
pub fn expected_dimension(n: usize, d: usize) -> usize {
    if 2 * d > n {
        0
    } else {
        (binom_u128(n as i64, d as i64) - binom_u128(n as i64, d as i64 - 1)) as usize
    }
}

/// The matrix of X̃′: D_d → D_{d−1} in colex order on both sides.
pub fn x_matrix(n: usize, d: usize) -> Result<linalg::Mat> {
    let rows = binom_u128(n as i64, d as i64 - 1);
    let cols = binom_u128(n as i64, d as i64);
    if rows * cols > EXACT_ENTRY_BUDGET {
        return Err(Error::SizeBudget { what: "X̃′ matrix", size: rows * cols, limit: EXACT_ENTRY_BUDGET });
    }
    let mut m = vec![vec![BigRational::zero(); cols as usize]; rows as usize];
    for (c, s) in subsets_of_size(n, d).enumerate() {
        for j in crate::combinatorics::bits(s) {
            m[colex_rank(s & !(1 << j))][c] = BigRational::one();
        }
    }
    Ok(m)
}

/// Basis of D⁰_d from the exact nullspace of X̃′ (colex column order).
/// Empty for d > n/2.
pub fn harmonic_basis(n: usize, d: usize) -> Result<Vec<DiscretePoly>> {
    if n == 0 || n > 128 {
        return Err(Error::UnsupportedLength(n));
    }
    if 2 * d > n {
        return Ok(Vec::new());
    }
    if d == 0 {
        return Ok(vec![DiscretePoly::constant(n, BigRational::one())]);
    }
    let m = x_matrix(n, d)?;
    let sets: Vec<u128> = subsets_of_size(n, d).collect();
    let ns = linalg::nullspace(&m, sets.len());
    ns.into_iter()
        .map(|v| DiscretePoly::from_terms(n, d, sets.iter().copied().zip(v)))
        .collect()
}

/// rank over Q of X̃′: D_d → D_{d−1}.
///
/// Splitting off the last coordinate, X̃′ has block form [[X, I], [0, X]] with
/// blocks on length n−1, so its rank is C(n−1, d−1) + rank(X_{d−1} X_d), and
/// X_{d−1} X_d = 2·W where W is the inclusion matrix of (d−2)-sets in d-sets.
/// The rank of W is computed modulo a prime; when that already equals the
/// largest possible value it is the rank over Q. Otherwise the rank is
/// recomputed exactly.
pub fn x_rank(n: usize, d: usize) -> Result<usize> {
    if d == 0 || d > n {
        return Ok(0);
    }
    if d == 1 {
        return Ok(1);
    }
    let rows = binom_u128(n as i64, d as i64 - 1) as usize;
    let cols = binom_u128(n as i64, d as i64) as usize;
    let full = rows.min(cols);
    let m = n - 1;
    let w_rows = binom_u128(m as i64, d as i64 - 2);
    let w_cols = binom_u128(m as i64, d as i64);
    if w_rows * w_cols > 64_000_000 {
        return Err(Error::SizeBudget { what: "inclusion matrix", size: w_rows * w_cols, limit: 64_000_000 });
    }
    let mut w = vec![vec![0u32; w_cols as usize]; w_rows as usize];
    for (c, s) in subsets_of_size(m, d).enumerate() {
        let b: Vec<usize> = crate::combinatorics::bits(s).collect();
        for i in 0..d {
            for j in i + 1..d {
                w[colex_rank(s & !(1 << b[i]) & !(1 << b[j]))][c] = 1;
            }
        }
    }
    let r = binom_u128(m as i64, d as i64 - 1) as usize + rank_mod_p(w);
    if r == full {
        return Ok(r);
    }
    Ok(linalg::rank(&x_matrix(n, d)?))
}

/// dim D⁰_d = C(n,d) − rank X̃′.
pub fn harmonic_dimension(n: usize, d: usize) -> Result<usize> {
    Ok(binom_u128(n as i64, d as i64) as usize - x_rank(n, d)?)
}

/// A standard polytabloid Π_i (z_{a_i} − z_{b_i}) of a two-row standard
/// tableau with second row {b_i}. These form a basis of D⁰_d for d ≤ n/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytabloid {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl Polytabloid {
    pub fn degree(&self) -> usize {
        self.pairs.len()
    }

    /// Second-row mask; also the colex-largest monomial of the expansion.
    pub fn lower_row(&self) -> u128 {
        self.pairs.iter().fold(0, |m, &(_, b)| m | 1 << b)
    }

    /// Value at v: 2^d·(−1)^{#{i : v_{a_i} = 1}} when v_{a_i} ≠ v_{b_i} for all i, else 0.
    pub fn evaluate_bits(&self, v: u128) -> i64 {
        let mut neg = false;
        for &(a, b) in &self.pairs {
            let (va, vb) = (v >> a & 1, v >> b & 1);
            if va == vb {
                return 0;
            }
            neg ^= va == 1;
        }
        let mag = 1i64 << self.pairs.len();
        if neg {
            -mag
        } else {
            mag
        }
    }

    pub fn to_poly(&self) -> DiscretePoly {
        let d = self.pairs.len();
        let mut p = DiscretePoly::zero(self.n, d);
        for choice in 0u32..(1 << d) {
            let mut set = 0u128;
            let mut sign = 1i64;
            for (i, &(a, b)) in self.pairs.iter().enumerate() {
                if choice >> i & 1 == 1 {
                    set |= 1 << b;
                    sign = -sign;
                } else {
                    set |= 1 << a;
                }
            }
            p.add_term(set, BigRational::from_integer(sign.into()));
        }
        p
    }
}

/// All standard polytabloids of shape (n−d, d), ordered by second row in colex order.
pub fn specht_basis(n: usize, d: usize) -> Vec<Polytabloid> {
    if 2 * d > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut top = Vec::new();
    let mut pairs = Vec::new();
    fn rec(
        j: usize,
        n: usize,
        d: usize,
        top: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Polytabloid>,
    ) {
        if pairs.len() == d {
            out.push(Polytabloid { n, pairs: pairs.clone() });
            return;
        }
        if j == n || n - j < d - pairs.len() {
            return;
        }
        if top.len() > pairs.len() {
            let a = top[pairs.len()];
            pairs.push((a, j));
            rec(j + 1, n, d, top, pairs, out);
            pairs.pop();
        }
        top.push(j);
        rec(j + 1, n, d, top, pairs, out);
        top.pop();
    }
    rec(0, n, d, &mut top, &mut pairs, &mut out);
    out.sort_by_key(|p| p.lower_row());
    out
}

/// Writes q ∈ D_d as Σ_k Ỹ′^k p_k with p_k ∈ D⁰_{d−k}; entry k of the result is p_k.
///
/// Top-down: with λ = n − 2(d−k), X̃′^k Ỹ′^k p = k!·Π_{i<k}(λ−i)·p for
/// harmonic p of degree d−k, and X̃′^k kills Ỹ′^j p_j for j < k.
pub fn decompose(q: &DiscretePoly) -> Result<Vec<DiscretePoly>> {
    let (n, d) = (q.n(), q.degree());
    if 2 * d > n {
        return Err(Error::Precondition(format!("decomposition needs d ≤ n/2, got n={n} d={d}")));
    }
    let mut parts: Vec<Option<DiscretePoly>> = vec![None; d + 1];
    let mut residual = q.clone();
    for k in (0..=d).rev() {
        let mut t = residual.clone();
        for _ in 0..k {
            t = apply_x_or_zero(&t);
        }
        let lambda = n as i64 - 2 * (d - k) as i64;
        let mut denom = factorial(k as u64);
        for i in 0..k as i64 {
            denom *= lambda - i;
        }
        let p = t.scale(&BigRational::new(BigInt::one(), denom));
        let mut lifted = p.clone();
        for _ in 0..k {
            lifted = apply_y(&lifted)?;
        }
        residual = residual.sub(&lifted)?;
        parts[k] = Some(p);
    }
    if !residual.is_zero() {
        return Err(Error::Residual("decomposition did not reconstruct the input".into()));
    }
    Ok(parts.into_iter().map(|p| p.expect("filled")).collect())
}

/// Σ_k Ỹ′^k p_k.
pub fn recompose(parts: &[DiscretePoly]) -> Result<DiscretePoly> {
    let mut acc: Option<DiscretePoly> = None;
    for (k, p) in parts.iter().enumerate() {
        let mut t = p.clone();
        for _ in 0..k {
            t = apply_y(&t)?;
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t)?,
        });
    }
    acc.ok_or_else(|| Error::Precondition("empty decomposition".into()))
}
