//! Exact scalars a + b√2 with a, b Gaussian rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::real(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::real(BigRational::one())
    }
}

impl Add for GaussRat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRat { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRat { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for GaussRat {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussRat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "({}+{}i)", self.re, self.im),
        }
    }
}

/// a + b√2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    pub a: GaussRat,
    pub b: GaussRat,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn new(a: GaussRat, b: GaussRat) -> Self {
        Scalar { a, b }
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar { a: GaussRat::real(r), b: GaussRat::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n, 1))
    }

    pub fn i() -> Self {
        Scalar { a: GaussRat::i(), b: GaussRat::zero() }
    }

    pub fn sqrt2() -> Self {
        Scalar { a: GaussRat::zero(), b: GaussRat::one() }
    }

    /// 2^{−1/2} = √2/2.
    pub fn inv_sqrt2() -> Self {
        Scalar { a: GaussRat::zero(), b: GaussRat::real(q(1, 2)) }
    }

    /// e^{kπi/4}.
    pub fn eighth_root(k: i64) -> Self {
        let half = |n: i64| q(n, 2);
        match k.rem_euclid(8) {
            0 => Self::int(1),
            1 => Scalar { a: GaussRat::zero(), b: GaussRat::new(half(1), half(1)) },
            2 => Self::i(),
            3 => Scalar { a: GaussRat::zero(), b: GaussRat::new(half(-1), half(1)) },
            4 => Self::int(-1),
            5 => Scalar { a: GaussRat::zero(), b: GaussRat::new(half(-1), half(-1)) },
            6 => -Self::i(),
            _ => Scalar { a: GaussRat::zero(), b: GaussRat::new(half(1), half(-1)) },
        }
    }

    /// The value as a rational, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.b.is_zero() && self.a.im.is_zero()).then(|| self.a.re.clone())
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::rational(r)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { a: GaussRat::zero(), b: GaussRat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::int(1)
    }
}

impl Add for Scalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Scalar { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Scalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Scalar { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Scalar {
    type Output = Self;
    fn neg(self) -> Self {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Mul for Scalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = GaussRat::real(q(2, 1));
        let bb = self.b.clone() * o.b.clone();
        Scalar {
            a: self.a.clone() * o.a.clone() + two * bb,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√2", self.b)
        } else {
            write!(f, "{}+{}√2", self.a, self.b)
        }
    }
}
