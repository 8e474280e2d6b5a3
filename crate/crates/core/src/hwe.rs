//! Harmonic weight enumerators W_{C,q}(x,y) = Σ_{c∈C} q(c) x^{n−wt(c)} y^{wt(c)},
//! the generalized MacWilliams identity, and the principal-module decomposition.

use crate::discrete::{specht_basis, DiscretePoly, Polytabloid};
use crate::error::{Error, Result};
use crate::gf2::{codewords, fold_codewords, joint_distribution, LinearCode, Word};
use crate::poly::gleason::{self, hadamard};
use crate::poly::{HPoly, RatPoly, Scalar};
use crate::zonal::ZonalHarmonic;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Largest code dimension handled by the bit-sliced table.
pub const TABLE_MAX_DIM: usize = 20;

/// Bit-sliced view of a list of words: one bitset per coordinate over the
/// list, plus one bitset per occurring weight.
pub struct WordTable {
    n: usize,
    lanes: usize,
    cols: Vec<Vec<u64>>,
    classes: Vec<(usize, Vec<u64>)>,
    valid: Vec<u64>,
}

impl WordTable {
    pub fn new(n: usize, words: &[u128]) -> Self {
        let lanes = words.len().div_ceil(64).max(1);
        let mut cols = vec![vec![0u64; lanes]; n];
        let mut by_weight = vec![vec![0u64; lanes]; n + 1];
        let mut valid = vec![0u64; lanes];
        for (i, &w) in words.iter().enumerate() {
            let (lane, bit) = (i / 64, 1u64 << (i % 64));
            valid[lane] |= bit;
            by_weight[w.count_ones() as usize][lane] |= bit;
            for j in crate::combinatorics::bits(w) {
                cols[j][lane] |= bit;
            }
        }
        let classes = by_weight.into_iter().enumerate().filter(|(_, m)| m.iter().any(|&x| x != 0)).collect();
        WordTable { n, lanes, cols, classes, valid }
    }

    pub fn from_code(code: &LinearCode) -> Result<Self> {
        if code.dimension() > TABLE_MAX_DIM {
            return Err(Error::Budget { what: "word table", needed: code.dimension(), limit: TABLE_MAX_DIM });
        }
        Ok(Self::new(code.length(), &codewords(code)?))
    }

    pub fn len(&self) -> usize {
        self.valid.iter().map(|x| x.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn per_weight(&self, nz: &[u64], neg: &[u64], scale: i64) -> Vec<(usize, i64)> {
        self.classes
            .iter()
            .map(|(w, m)| {
                let mut s = 0i64;
                for l in 0..self.lanes {
                    let live = nz[l] & m[l];
                    s += (live & !neg[l]).count_ones() as i64 - (live & neg[l]).count_ones() as i64;
                }
                (*w, s * scale)
            })
            .collect()
    }

    /// Σ over listed words of weight w of a polytabloid, for each occurring w.
    pub fn polytabloid_sums(&self, t: &Polytabloid) -> Vec<(usize, i64)> {
        let mut nz = self.valid.clone();
        let mut neg = vec![0u64; self.lanes];
        for &(a, b) in &t.pairs {
            let (ca, cb) = (&self.cols[a], &self.cols[b]);
            for l in 0..self.lanes {
                nz[l] &= ca[l] ^ cb[l];
                neg[l] ^= ca[l];
            }
        }
        self.per_weight(&nz, &neg, 1i64 << t.pairs.len())
    }

    /// Σ over listed words of weight w of the monomial m(S).
    pub fn monomial_sums(&self, set: u128) -> Vec<(usize, i64)> {
        let mut neg = vec![0u64; self.lanes];
        for j in crate::combinatorics::bits(set) {
            for l in 0..self.lanes {
                neg[l] ^= self.cols[j][l];
            }
        }
        self.per_weight(&self.valid, &neg, 1)
    }

    /// Coefficient vector (by weight) of Σ_c q(c) x^{n−wt} y^{wt}.
    pub fn enumerator(&self, q: &DiscretePoly) -> RatPoly {
        let mut coeffs = vec![BigRational::zero(); self.n + 1];
        for (s, c) in q.terms() {
            for (w, v) in self.monomial_sums(*s) {
                if v != 0 {
                    coeffs[w] += c * BigRational::from_integer(v.into());
                }
            }
        }
        HPoly::new(coeffs)
    }
}

pub fn harmonic_weight_enumerator(code: &LinearCode, q: &DiscretePoly) -> Result<RatPoly> {
    let n = code.length();
    if q.n() != n {
        return Err(Error::LengthMismatch { expected: n, got: q.n() });
    }
    if code.dimension() <= TABLE_MAX_DIM {
        return Ok(WordTable::from_code(code)?.enumerator(q));
    }
    let coeffs = fold_codewords(
        code,
        "harmonic weight enumerator",
        || vec![BigRational::zero(); n + 1],
        |acc, c| {
            let v = q.evaluate_bits(c);
            if !v.is_zero() {
                acc[c.count_ones() as usize] += v;
            }
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(HPoly::new(coeffs))
}

/// W_{C,Z_d} for the zonal harmonic of c̄, folded from the joint distribution.
pub fn zonal_weight_enumerator(code: &LinearCode, cfixed: &Word, d: usize) -> Result<RatPoly> {
    let n = code.length();
    if cfixed.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: cfixed.len() });
    }
    let z = ZonalHarmonic::new(n, cfixed.weight(), d)?;
    let joint = joint_distribution(code, cfixed)?;
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (w, row) in joint.counts.iter().enumerate() {
        for (j, &cnt) in row.iter().enumerate() {
            if cnt > 0 {
                coeffs[w] += z.evaluate(w, j)? * BigRational::from_integer(cnt.into());
            }
        }
    }
    Ok(HPoly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacWilliamsReport {
    pub holds: bool,
    /// (x² − y²)^d · W_{C,q}(x, y).
    pub lhs: RatPoly,
    /// (−xy)^d · (2^d/|C⊥|) · W_{C⊥,q}(x+y, x−y).
    pub rhs: RatPoly,
}

impl MacWilliamsReport {
    /// Exponents w where the sides differ.
    pub fn diff(&self) -> Vec<usize> {
        (0..=self.lhs.degree()).filter(|&w| self.lhs.coeff(w) != self.rhs.coeff(w)).collect()
    }
}

fn x2_minus_y2() -> RatPoly {
    RatPoly::from_ints(&[1, 0, -1])
}

/// Checks (x²−y²)^d W_{C,q}(x,y) = (−xy)^d (2^d/|C⊥|) W_{C⊥,q}(x+y, x−y) for q
/// homogeneous of degree d (the identity holds when q is harmonic).
pub fn generalized_macwilliams_check(code: &LinearCode, q: &DiscretePoly) -> Result<MacWilliamsReport> {
    let d = q.degree();
    let dual = code.dual();
    let w = harmonic_weight_enumerator(code, q)?;
    let wd = harmonic_weight_enumerator(&dual, q)?;
    let lhs = &x2_minus_y2().pow(d) * &w;
    let minus_xy = RatPoly::from_ints(&[0, -1, 0]).pow(d);
    let factor = BigRational::new(BigInt::one() << d, BigInt::one() << dual.dimension());
    let rhs = &minus_xy * &wd.hadamard_substitute().scale(&factor);
    Ok(MacWilliamsReport { holds: lhs == rhs, lhs, rhs })
}

/// The same identity in its original form with the 2^{−1/2} substitution,
/// multiplied through by (x²−y²)^d, in exact a + b√2 arithmetic.
pub fn generalized_macwilliams_direct_check(code: &LinearCode, q: &DiscretePoly) -> Result<bool> {
    let (n, d) = (code.length(), q.degree());
    let dual = code.dual();
    let w = harmonic_weight_enumerator(code, q)?.to_scalar();
    let wd = harmonic_weight_enumerator(&dual, q)?.to_scalar();
    let lhs = &x2_minus_y2().pow(d).to_scalar() * &w;
    let mut c = Scalar::one();
    for _ in 0..n + 2 * d {
        c = c * Scalar::sqrt2();
    }
    let c = c * Scalar::rational(BigRational::new(BigInt::one(), BigInt::one() << dual.dimension()));
    let rhs = (&RatPoly::from_ints(&[0, -1, 0]).pow(d).to_scalar() * &wd.substitute(&hadamard())).scale(&c);
    Ok(lhs == rhs)
}

/// W/(xy)^d; a nonzero coefficient outside y-degrees d..n−d is reported.
pub fn divide_by_xyd(w: &RatPoly, d: usize) -> Result<RatPoly> {
    w.divide_by_xy_power(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BachocDecomposition {
    pub d: usize,
    /// d mod 4, selecting ψ.
    pub psi_index: usize,
    /// a_k with W/(xy)^d = ψ·Σ_k a_k φ^{p−3k} ξ^k; empty for W = 0.
    pub coefficients: Vec<BigRational>,
}

/// Decomposes a harmonic enumerator of degree-d harmonic q for a Type II code.
/// The enumerator is first divided by (xy)^d; the quotient must lie in
/// ψ_{d mod 4}·C[φ, ξ].
pub fn bachoc_decompose(w: &RatPoly, d: usize) -> Result<BachocDecomposition> {
    let coefficients = if w.is_zero() { Vec::new() } else { principal_module_decompose(&divide_by_xyd(w, d)?, d)? };
    Ok(BachocDecomposition { d, psi_index: d % 4, coefficients })
}

/// a_k with v = ψ_{d mod 4}·Σ_k a_k φ^{p−3k} ξ^k.
pub fn principal_module_decompose(v: &RatPoly, d: usize) -> Result<Vec<BigRational>> {
    if v.is_zero() {
        return Ok(Vec::new());
    }
    let psi = gleason::psi(d);
    if v.degree() < psi.degree() || (v.degree() - psi.degree()) % 8 != 0 {
        return Err(Error::Residual(format!(
            "degree {} is not deg ψ = {} plus a multiple of 8",
            v.degree(),
            psi.degree()
        )));
    }
    let f = v.exact_div(&psi).map_err(|_| Error::Residual("outside the principal module: ψ does not divide".into()))?;
    gleason::peel_type_ii(&f).map_err(|_| Error::Residual("outside the principal module".into()))
}

pub fn recompose_principal(coefficients: &[BigRational], d: usize, degree: usize) -> RatPoly {
    let psi = gleason::psi(d);
    let f = gleason::recompose_type_ii(coefficients, degree - psi.degree());
    &psi * &f
}

/// First polytabloid of degree d whose enumerator over the table is nonzero.
pub fn first_nonvanishing_polytabloid(table: &WordTable, n: usize, d: usize) -> Option<Polytabloid> {
    specht_basis(n, d)
        .into_par_iter()
        .find_first(|t| table.polytabloid_sums(t).iter().any(|&(_, s)| s != 0))
}
