//! Dense homogeneous polynomials in x, y. Coefficient w belongs to x^{n−w} y^w.

use super::scalar::Scalar;
use crate::combinatorics::binom;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct HPoly<C> {
    coeffs: Vec<C>,
}

pub type RatPoly = HPoly<BigRational>;

impl<C: Ring> HPoly<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial has n+1 ≥ 1 coefficients");
        HPoly { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        HPoly { coeffs: vec![C::zero(); n + 1] }
    }

    pub fn constant(c: C) -> Self {
        HPoly { coeffs: vec![c] }
    }

    /// c·x^{n−w} y^w.
    pub fn monomial(n: usize, w: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[w] = c;
        p
    }

    pub fn x() -> Self {
        HPoly { coeffs: vec![C::one(), C::zero()] }
    }

    pub fn y() -> Self {
        HPoly { coeffs: vec![C::zero(), C::one()] }
    }

    /// a·x + b·y.
    pub fn linear(a: C, b: C) -> Self {
        HPoly { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, w: usize) -> C {
        self.coeffs.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest w with a nonzero coefficient (the valuation at y).
    pub fn y_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.degree() != o.degree() {
            return Err(Error::Precondition(format!("degree {} + degree {}", self.degree(), o.degree())));
        }
        Ok(HPoly { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    pub fn scale(&self, c: &C) -> Self {
        HPoly { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc: HPoly<C> = HPoly::constant(C::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> HPoly<D> {
        HPoly { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// p(ax + by, cx + dy) for m = [[a, b], [c, d]].
    pub fn substitute(&self, m: &[[C; 2]; 2]) -> Self {
        let n = self.degree();
        let l1 = HPoly::linear(m[0][0].clone(), m[0][1].clone());
        let l2 = HPoly::linear(m[1][0].clone(), m[1][1].clone());
        let mut p1: Vec<HPoly<C>> = vec![HPoly::constant(C::one())];
        let mut p2: Vec<HPoly<C>> = vec![HPoly::constant(C::one())];
        for j in 1..=n {
            p1.push(&p1[j - 1] * &l1);
            p2.push(&p2[j - 1] * &l2);
        }
        let mut out: HPoly<C> = HPoly::zero(n);
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&p1[n - w] * &p2[w]).scale(c);
            for (o, t) in out.coeffs.iter_mut().zip(term.coeffs) {
                *o = o.clone() + t;
            }
        }
        out
    }

    /// Multiplies by (xy)^d.
    pub fn times_xy_power(&self, d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.extend(std::iter::repeat_n(C::zero(), d));
        HPoly { coeffs }
    }

    /// W/(xy)^d; fails when some coefficient with w < d or w > n − d is nonzero.
    pub fn divide_by_xy_power(&self, d: usize) -> Result<Self> {
        let n = self.degree();
        let bad: Vec<usize> = (0..=n).filter(|&w| (w < d || w + d > n) && !self.coeffs[w].is_zero()).collect();
        if n < 2 * d {
            return Err(Error::NotDivisible(format!("degree {n} < 2·{d}")));
        }
        if !bad.is_empty() {
            return Err(Error::NotDivisible(format!("nonzero coefficients at y-degrees {bad:?} outside [{d}, {}]", n - d)));
        }
        Ok(HPoly { coeffs: self.coeffs[d..=n - d].to_vec() })
    }
}

impl<C: Ring + Div<Output = C>> HPoly<C> {
    /// Exact quotient self / q; errors when q does not divide.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        let (n, m) = (self.degree(), q.degree());
        let v = q.y_valuation().ok_or_else(|| Error::NotDivisible("division by zero polynomial".into()))?;
        if m > n {
            return Err(Error::NotDivisible(format!("degree {m} divisor of degree {n} polynomial")));
        }
        let lead = q.coeffs[v].clone();
        let mut r: Vec<C> = Vec::with_capacity(n - m + 1);
        for j in 0..=n - m {
            let mut acc = self.coeff(j + v);
            for i in v + 1..=m {
                if i <= j + v {
                    acc = acc - q.coeffs[i].clone() * r[j + v - i].clone();
                }
            }
            r.push(acc / lead.clone());
        }
        let quot = HPoly { coeffs: r };
        if &(&quot * q) != self {
            return Err(Error::NotDivisible("nonzero remainder".into()));
        }
        Ok(quot)
    }
}

impl<'a, C: Ring> Mul<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn mul(self, o: &HPoly<C>) -> HPoly<C> {
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        HPoly { coeffs: out }
    }
}

impl<'a, C: Ring> Add<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    /// Panics on degree mismatch; use `try_add` for checked addition.
    fn add(self, o: &HPoly<C>) -> HPoly<C> {
        self.try_add(o).expect("addition requires equal degrees")
    }
}

impl<'a, C: Ring> Sub<&'a HPoly<C>> for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn sub(self, o: &HPoly<C>) -> HPoly<C> {
        self.try_add(&-o).expect("subtraction requires equal degrees")
    }
}

impl<'a, C: Ring> Neg for &'a HPoly<C> {
    type Output = HPoly<C>;
    fn neg(self) -> HPoly<C> {
        HPoly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl RatPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        HPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Integer counts as a polynomial, e.g. a weight distribution.
    pub fn from_counts(counts: &[u64]) -> Self {
        HPoly::new(counts.iter().map(|&c| rat(c)).collect())
    }

    pub fn to_scalar(&self) -> HPoly<Scalar> {
        self.map(|c| Scalar::rational(c.clone()))
    }

    /// W(x+y, x−y) via Krawtchouk sums: coefficient j is Σ_w c_w K_j(w),
    /// K_j(w) = Σ_i (−1)^i C(w,i) C(n−w, j−i).
    pub fn hadamard_substitute(&self) -> RatPoly {
        let n = self.degree() as i64;
        let coeffs = (0..=n)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (w, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let w = w as i64;
                    let mut k = BigInt::zero();
                    for i in 0..=j.min(w) {
                        let t = binom(w, i) * binom(n - w, j - i);
                        if i % 2 == 0 {
                            k += t;
                        } else {
                            k -= t;
                        }
                    }
                    acc += c * BigRational::from_integer(k);
                }
                acc
            })
            .collect();
        HPoly::new(coeffs)
    }
}

/// (1/code_size)·W(x+y, x−y): the enumerator of the dual of a code with
/// enumerator W and `code_size` words.
pub fn macwilliams_transform(w: &RatPoly, code_size: &BigInt) -> Result<RatPoly> {
    if code_size <= &BigInt::zero() {
        return Err(Error::Precondition("code size must be positive".into()));
    }
    let inv = BigRational::new(BigInt::one(), code_size.clone());
    Ok(w.hadamard_substitute().scale(&inv))
}

/// JSON form: degree and coefficients as exact rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub degree: usize,
    /// coefficients[w] multiplies x^(degree−w) y^w.
    pub coefficients: Vec<String>,
}

impl From<&RatPoly> for PolyRecord {
    fn from(p: &RatPoly) -> Self {
        PolyRecord { degree: p.degree(), coefficients: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<&PolyRecord> for RatPoly {
    type Error = Error;
    fn try_from(r: &PolyRecord) -> Result<Self> {
        if r.coefficients.len() != r.degree + 1 {
            return Err(Error::Parse { line: 1, msg: "coefficient count must be degree + 1".into() });
        }
        let coeffs = r
            .coefficients
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(|e| Error::Parse { line: 1, msg: format!("{s:?}: {e}") }))
            .collect::<Result<Vec<_>>>()?;
        Ok(HPoly::new(coeffs))
    }
}
