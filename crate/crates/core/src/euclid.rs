//! Lattice-side arithmetic: q-series, Construction A theta series, the E₄/Δ
//! expansion of extremal theta series, sphere moments and the E₈ shell system.

use crate::error::{Error, Result};
use crate::gf2::{LinearCode, WeightDistribution};
use crate::linalg;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Power series in q with exponents on the grid m/4, truncated after q^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { order, coeffs: vec![BigRational::zero(); 4 * order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// From integer-exponent coefficients c_0, c_1, …; missing ones are 0.
    pub fn from_integral<I: Into<BigInt>>(order: usize, c: impl IntoIterator<Item = I>) -> Self {
        let mut s = Self::zero(order);
        for (k, a) in c.into_iter().enumerate().take(order + 1) {
            s.coeffs[4 * k] = BigRational::from_integer(a.into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of q^{m/4}.
    pub fn coeff_quarter(&self, m: usize) -> &BigRational {
        &self.coeffs[m]
    }

    pub fn set_quarter(&mut self, m: usize, c: BigRational) {
        if m < self.coeffs.len() {
            self.coeffs[m] = c;
        }
    }

    /// Coefficient of q^k.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[4 * k]
    }

    /// Coefficients of q^0, …, q^order; errors if any fractional exponent is present.
    pub fn integral_coefficients(&self) -> Result<Vec<BigRational>> {
        if self.coeffs.iter().enumerate().any(|(m, c)| m % 4 != 0 && !c.is_zero()) {
            return Err(Error::Precondition("series has fractional exponents".into()));
        }
        Ok((0..=self.order).map(|k| self.coeff(k).clone()).collect())
    }

    /// Integer coefficients of q^0..q^order, if they are all integers.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        self.integral_coefficients()?
            .into_iter()
            .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::Precondition(format!("non-integral coefficient {c}"))) })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Smallest quarter exponent with a nonzero coefficient.
    pub fn valuation_quarter(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "q-series truncation orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        QSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        QSeries { order: self.order, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let len = self.coeffs.len();
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..len - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { order: self.order, coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = if m % 4 == 0 { (m / 4).to_string() } else { format!("{m}/4") };
            match m {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

fn divisor_power_sum(k: usize, p: u32) -> BigInt {
    (1..=k).filter(|d| k % d == 0).map(|d| BigInt::from(d).pow(p)).sum()
}

fn eisenstein(order: usize, factor: i64, p: u32) -> QSeries {
    QSeries::from_integral(
        order,
        (0..=order).map(|k| if k == 0 { BigInt::one() } else { BigInt::from(factor) * divisor_power_sum(k, p) }),
    )
}

/// E₄ = 1 + 240 Σ σ₃(k) q^k.
pub fn eisenstein4(order: usize) -> QSeries {
    eisenstein(order, 240, 3)
}

/// E₆ = 1 − 504 Σ σ₅(k) q^k.
pub fn eisenstein6(order: usize) -> QSeries {
    eisenstein(order, -504, 5)
}

/// Δ = q Π (1 − q^k)^24.
pub fn delta_form(order: usize) -> QSeries {
    let mut prod = QSeries::one(order);
    for k in 1..=order {
        let mut f = QSeries::one(order);
        f.set_quarter(4 * k, -BigRational::one());
        prod = prod.mul(&f.pow(24));
    }
    let mut q = QSeries::zero(order);
    if order >= 1 {
        q.set_quarter(4, BigRational::one());
    }
    q.mul(&prod)
}

/// θ₃ = Σ_{m∈Z} q^{m²}.
pub fn theta3(order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    let mut m = 0usize;
    while m * m <= order {
        s.set_quarter(4 * m * m, BigRational::from_integer(if m == 0 { 1 } else { 2 }.into()));
        m += 1;
    }
    s
}

/// θ₂ = Σ_{m∈Z} q^{(m+1/2)²}.
pub fn theta2(order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    let mut m = 0usize;
    while (2 * m + 1) * (2 * m + 1) <= 4 * order {
        s.set_quarter((2 * m + 1) * (2 * m + 1), BigRational::from_integer(2.into()));
        m += 1;
    }
    s
}

/// Σ_w A_w θ₂^w θ₃^{n−w}.
pub fn theta_from_distribution(dist: &WeightDistribution, order: usize) -> QSeries {
    let n = dist.length;
    let (t2, t3) = (theta2(order), theta3(order));
    let mut p2 = vec![QSeries::one(order)];
    let mut p3 = vec![QSeries::one(order)];
    for _ in 0..n {
        p2.push(p2.last().unwrap().mul(&t2));
        p3.push(p3.last().unwrap().mul(&t3));
    }
    let mut out = QSeries::zero(order);
    for (w, &a) in dist.counts.iter().enumerate() {
        if a > 0 {
            out = out.add(&p2[w].mul(&p3[n - w]).scale(&BigRational::from_integer(a.into())));
        }
    }
    out
}

/// Theta series of the Construction A lattice of `code`.
pub fn construction_a_theta(code: &LinearCode, order: usize) -> Result<QSeries> {
    Ok(theta_from_distribution(&crate::gf2::weight_distribution(code)?, order))
}

/// Coefficients a_0, …, a_{⌊m/3⌋} with θ = Σ a_k E₄^{m−3k} Δ^k, n = 8m.
pub fn express_in_e4_delta(theta: &QSeries, n: usize) -> Result<Vec<BigRational>> {
    if n % 8 != 0 {
        return Err(Error::Precondition(format!("need n ≡ 0 mod 8, got {n}")));
    }
    let m = n / 8;
    let order = theta.order();
    if order < m / 3 {
        return Err(Error::Precondition(format!("order {order} is below ⌊m/3⌋ = {}", m / 3)));
    }
    let (e4, delta) = (eisenstein4(order), delta_form(order));
    let mut residual = theta.clone();
    let mut a = Vec::new();
    for k in 0..=m / 3 {
        let b = e4.pow(m - 3 * k).mul(&delta.pow(k));
        let c = residual.coeff(k).clone();
        residual = residual.sub(&b.scale(&c));
        a.push(c);
    }
    if !residual.is_zero() {
        return Err(Error::Residual(residual.to_string()));
    }
    Ok(a)
}

/// E₄^m + Σ_{k≥1} a_k E₄^{m−3k} Δ^k with a_k forced so that q^1..q^{⌊m/3⌋} vanish.
pub fn extremal_theta(n: usize, order: usize) -> Result<QSeries> {
    if n % 8 != 0 || n == 0 {
        return Err(Error::Precondition(format!("need n ≡ 0 mod 8, got {n}")));
    }
    let m = n / 8;
    let (e4, delta) = (eisenstein4(order), delta_form(order));
    let mut out = QSeries::zero(order);
    for k in 0..=m / 3 {
        let b = e4.pow(m - 3 * k).mul(&delta.pow(k));
        let target = if k == 0 { BigRational::one() } else { BigRational::zero() };
        let c = if k <= order { target - out.coeff(k) } else { BigRational::zero() };
        out = out.add(&b.scale(&c));
    }
    Ok(out)
}

/// (νν̄)^{d/2} Π_{odd j<d} j/(n+j−1); odd d gives 0.
pub fn sphere_moment(n: usize, d: usize, nu_product: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if d % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let mut r = num_traits::pow(nu_product.clone(), d / 2);
    for j in (1..d).step_by(2) {
        r *= BigRational::new(BigInt::from(j), BigInt::from(n + j - 1));
    }
    Ok(r)
}

/// (N₋₂, N₋₁, N₀, N₁, N₂) for the 240 roots of E₈ against a fixed root.
pub fn e8_shell_system() -> [BigInt; 5] {
    let r = |x: i64| BigRational::from_integer(x.into());
    let nu = r(8);
    let m2 = sphere_moment(8, 2, &nu).expect("n > 0");
    let m4 = sphere_moment(8, 4, &nu).expect("n > 0");
    // Unknowns N₀, N₁, N₂ with N₋ⱼ = Nⱼ.
    let a = vec![vec![r(1), r(2), r(2)], vec![r(0), r(2), r(8)], vec![r(0), r(2), r(32)]];
    let b = vec![r(240), r(240) * m2, r(240) * m4];
    let x = linalg::solve(&a, &b).expect("the E₈ shell system is nonsingular");
    let n: Vec<BigInt> = x.iter().map(|v| v.to_integer()).collect();
    [n[2].clone(), n[1].clone(), n[0].clone(), n[1].clone(), n[2].clone()]
}
