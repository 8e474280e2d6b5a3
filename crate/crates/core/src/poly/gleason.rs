//! Gleason generators for Type I and Type II enumerators, the degree-d
//! covariants ψ_d, and decompositions into the invariant rings.

use super::hpoly::{HPoly, RatPoly};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

fn p(coeffs: &[i64]) -> RatPoly {
    RatPoly::from_ints(coeffs)
}

/// x^a y^b.
fn mono(a: usize, b: usize) -> RatPoly {
    RatPoly::monomial(a + b, b, BigRational::one())
}

/// x^k + s·y^k.
fn binomial_form(k: usize, s: i64) -> RatPoly {
    let mut c = vec![0; k + 1];
    c[0] = 1;
    c[k] = s;
    p(&c)
}

pub fn x2_plus_y2() -> RatPoly {
    binomial_form(2, 1)
}

/// φ = x⁸ + 14x⁴y⁴ + y⁸.
pub fn phi() -> RatPoly {
    p(&[1, 0, 0, 0, 14, 0, 0, 0, 1])
}

/// ξ = x⁴y⁴(x⁴ − y⁴)⁴.
pub fn xi() -> RatPoly {
    &mono(4, 4) * &binomial_form(4, -1).pow(4)
}

/// δ = x²y²(x² − y²)².
pub fn delta_i() -> RatPoly {
    &mono(2, 2) * &binomial_form(2, -1).pow(2)
}

/// x⁸ − 34x⁴y⁴ + y⁸.
fn tail8() -> RatPoly {
    p(&[1, 0, 0, 0, -34, 0, 0, 0, 1])
}

/// ψ_d, depending on d mod 4.
pub fn psi(d: usize) -> RatPoly {
    match d % 4 {
        0 => p(&[1]),
        1 => &(&(&mono(3, 3) * &binomial_form(4, -1).pow(2)) * &binomial_form(8, -1)) * &tail8(),
        2 => &mono(2, 2) * &binomial_form(4, -1).pow(2),
        _ => &(&mono(1, 1) * &binomial_form(8, -1)) * &tail8(),
    }
}

/// Q₁ = (x²+y²)², Q₂ = −4x²y², Q₃ = −(Q₁+Q₂) = −(x²−y²)².
pub fn q_triple() -> [RatPoly; 3] {
    let q1 = x2_plus_y2().pow(2);
    let q2 = p(&[0, 0, -4, 0, 0]);
    let q3 = -&(&q1 + &q2);
    [q1, q2, q3]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonBasis {
    pub phi: RatPoly,
    pub xi: RatPoly,
    pub delta_i: RatPoly,
    pub psi: [RatPoly; 4],
}

pub fn gleason_basis() -> GleasonBasis {
    GleasonBasis { phi: phi(), xi: xi(), delta_i: delta_i(), psi: [psi(0), psi(1), psi(2), psi(3)] }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    /// Generated by diag(1, −1) and 2^{−1/2}(1 1; 1 −1).
    GI,
    /// Generated by diag(1, i) and 2^{−1/2}(1 1; 1 −1).
    GII,
}

pub type Matrix = [[Scalar; 2]; 2];

pub fn hadamard() -> Matrix {
    let h = Scalar::inv_sqrt2();
    [[h.clone(), h.clone()], [h.clone(), -h]]
}

pub fn diag(a: Scalar, b: Scalar) -> Matrix {
    [[a, Scalar::zero()], [Scalar::zero(), b]]
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let e = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn scalar_matrix(c: Scalar) -> Matrix {
    diag(c.clone(), c)
}

pub fn generators(group: Group) -> [Matrix; 2] {
    match group {
        Group::GI => [diag(Scalar::one(), Scalar::int(-1)), hadamard()],
        Group::GII => [diag(Scalar::one(), Scalar::i()), hadamard()],
    }
}

/// ς = e^{−3πi/4}·2^{−1/2}(1 1; 1 −1)·diag(1, i).
pub fn varsigma() -> Matrix {
    let h = mat_mul(&hadamard(), &diag(Scalar::one(), Scalar::i()));
    mat_mul(&scalar_matrix(Scalar::eighth_root(-3)), &h)
}

/// True iff p is fixed by both generators of the group.
pub fn invariance_report(p: &HPoly<Scalar>, group: Group) -> bool {
    generators(group).iter().all(|m| &p.substitute(m) == p)
}

/// Fixed by 2^{−1/2}(1 1; 1 −1): W(x+y, x−y) = 2^{n/2}W, with n even.
fn hadamard_fixed(w: &RatPoly) -> bool {
    let n = w.degree();
    n % 2 == 0 && w.hadamard_substitute() == w.scale(&BigRational::from_integer(BigInt::one() << (n / 2)))
}

/// Rational-coefficient invariance test, equivalent to `invariance_report` on
/// the embedded polynomial but without √2 arithmetic.
pub fn rational_invariance(w: &RatPoly, group: Group) -> bool {
    let period = match group {
        Group::GI => 2,
        Group::GII => 4,
    };
    w.coeffs().iter().enumerate().all(|(k, c)| k % period == 0 || c.is_zero()) && hadamard_fixed(w)
}

/// a_k with W = Σ_k a_k φ^{m−3k} ξ^k, deg W = 8m.
pub fn decompose_type_ii(w: &RatPoly) -> Result<Vec<BigRational>> {
    let n = w.degree();
    if n % 8 != 0 {
        return Err(Error::Precondition(format!("Type II decomposition needs degree ≡ 0 mod 8, got {n}")));
    }
    if !rational_invariance(w, Group::GII) {
        return Err(Error::NotInvariant("G_II"));
    }
    peel_type_ii(w)
}

/// Peeling without the invariance precheck.
pub(crate) fn peel_type_ii(w: &RatPoly) -> Result<Vec<BigRational>> {
    let n = w.degree();
    if n % 8 != 0 {
        return Err(Error::Precondition(format!("degree {n} is not a multiple of 8")));
    }
    let m = n / 8;
    let (ph, x) = (phi(), xi());
    let mut residual = w.clone();
    let mut out = Vec::new();
    for k in 0..=m / 3 {
        let a = residual.coeff(4 * k);
        let b = &ph.pow(m - 3 * k) * &x.pow(k);
        residual = &residual - &b.scale(&a);
        out.push(a);
    }
    if !residual.is_zero() {
        return Err(Error::Residual("not in the invariant ring C[φ, ξ]".into()));
    }
    Ok(out)
}

pub fn recompose_type_ii(a: &[BigRational], n: usize) -> RatPoly {
    let m = n / 8;
    let mut out = RatPoly::zero(n);
    for (k, c) in a.iter().enumerate() {
        out = &out + &(&phi().pow(m - 3 * k) * &xi().pow(k)).scale(c);
    }
    out
}

/// The unique C[φ, ξ] combination of degree n = 8m whose coefficients of
/// y^0, y^4, …, y^{4⌊m/3⌋} are 1, 0, …, 0: the weight enumerator an extremal
/// Type II code of length n would have.
pub fn extremal_type_ii_enumerator(n: usize) -> Result<(Vec<BigRational>, RatPoly)> {
    if n % 8 != 0 || n == 0 {
        return Err(Error::Precondition(format!("extremal enumerators need n ≡ 0 mod 8, got {n}")));
    }
    let m = n / 8;
    let (ph, x) = (phi(), xi());
    let mut w = RatPoly::zero(n);
    let mut a = Vec::new();
    for k in 0..=m / 3 {
        let target = if k == 0 { BigRational::one() } else { BigRational::zero() };
        let c = target - w.coeff(4 * k);
        w = &w + &(&ph.pow(m - 3 * k) * &x.pow(k)).scale(&c);
        a.push(c);
    }
    Ok((a, w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeITerm {
    /// Power of x² + y².
    pub a: usize,
    /// Power of δ.
    pub b: usize,
    pub coefficient: String,
}

/// b_{a,b} with W = Σ b_{a,b}(x²+y²)^a δ^b, 2a + 8b = deg W.
pub fn decompose_type_i(w: &RatPoly) -> Result<Vec<(usize, usize, BigRational)>> {
    let n = w.degree();
    if n % 2 != 0 {
        return Err(Error::Precondition(format!("Type I decomposition needs even degree, got {n}")));
    }
    if !rational_invariance(w, Group::GI) {
        return Err(Error::NotInvariant("G_I"));
    }
    let (s, d) = (x2_plus_y2(), delta_i());
    let mut residual = w.clone();
    let mut out = Vec::new();
    for b in 0..=n / 8 {
        let a = (n - 8 * b) / 2;
        let c = residual.coeff(2 * b);
        residual = &residual - &(&s.pow(a) * &d.pow(b)).scale(&c);
        out.push((a, b, c));
    }
    if !residual.is_zero() {
        return Err(Error::Residual("not in the invariant ring C[x²+y², δ]".into()));
    }
    Ok(out)
}

pub fn recompose_type_i(terms: &[(usize, usize, BigRational)], n: usize) -> RatPoly {
    let mut out = RatPoly::zero(n);
    for (a, b, c) in terms {
        out = &out + &(&x2_plus_y2().pow(*a) * &delta_i().pow(*b)).scale(c);
    }
    out
}
