use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b·√q` of the quadratic field ℚ(√q), `q` prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadCoeff {
    a: Rational,
    b: Rational,
    q: u32,
}

/// One of the four field operations, for [`quad_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic in ℚ(√q).
pub fn quad_arith(x: &QuadCoeff, y: &QuadCoeff, op: QuadOp) -> Result<QuadCoeff> {
    if x.q != y.q {
        return Err(Error::FieldMismatch(x.q, y.q));
    }
    Ok(match op {
        QuadOp::Add => x + y,
        QuadOp::Sub => x - y,
        QuadOp::Mul => x * y,
        QuadOp::Div => x.checked_div(y)?,
    })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl QuadCoeff {
    /// `a + b√q`. Fails unless `q` is prime.
    pub fn new(a: Rational, b: Rational, q: u32) -> Result<Self> {
        if !is_prime(q as u64) {
            return Err(Error::NotPrime(q as u64));
        }
        Ok(QuadCoeff { a, b, q })
    }

    pub(crate) fn raw(a: Rational, b: Rational, q: u32) -> Self {
        debug_assert!(is_prime(q as u64));
        QuadCoeff { a, b, q }
    }

    pub fn zero(q: u32) -> Self {
        Self::raw(Rational::zero(), Rational::zero(), q)
    }

    pub fn one(q: u32) -> Self {
        Self::raw(Rational::one(), Rational::zero(), q)
    }

    pub fn from_rational(r: Rational, q: u32) -> Self {
        Self::raw(r, Rational::zero(), q)
    }

    pub fn from_int(n: i64, q: u32) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)), q)
    }

    /// `√q`.
    pub fn sqrt_q(q: u32) -> Self {
        Self::raw(Rational::zero(), Rational::one(), q)
    }

    /// `q^(k/2)` for any integer `k`.
    pub fn q_half_pow(q: u32, k: i64) -> Self {
        let whole = rational_pow(&Rational::from_integer(BigInt::from(q)), k.div_euclid(2));
        if k.rem_euclid(2) == 0 {
            Self::from_rational(whole, q)
        } else {
            Self::raw(Rational::zero(), whole, q)
        }
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `√q`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The rational value, if the `√q` part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Galois conjugate `a − b√q`.
    pub fn conj(&self) -> Self {
        Self::raw(self.a.clone(), -self.b.clone(), self.q)
    }

    /// Field norm `a² − q b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.q))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::raw(&self.a * r, &self.b * r, self.q)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(&self.a / &n, -(&self.b / &n), self.q))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.q);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Floating-point value with `√q` taken positive.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.q as f64).sqrt()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.q, other.q, "QuadCoeff over different fields");
    }
}

pub(crate) fn rational_pow(r: &Rational, k: i64) -> Rational {
    let p = num_traits::pow(r.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back through scaled integers for huge parts
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Formats `r` as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.q;
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}*sqrt({q})", fmt_rational(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{}{sign}{}*sqrt({q})", fmt_rational(&self.a), fmt_rational(&self.b.abs()))
            }
        }
    }
}

impl<'a> Add<&'a QuadCoeff> for &'a QuadCoeff {
    type Output = QuadCoeff;
    fn add(self, rhs: &QuadCoeff) -> QuadCoeff {
        self.check(rhs);
        QuadCoeff::raw(&self.a + &rhs.a, &self.b + &rhs.b, self.q)
    }
}

impl<'a> Sub<&'a QuadCoeff> for &'a QuadCoeff {
    type Output = QuadCoeff;
    fn sub(self, rhs: &QuadCoeff) -> QuadCoeff {
        self.check(rhs);
        QuadCoeff::raw(&self.a - &rhs.a, &self.b - &rhs.b, self.q)
    }
}

impl<'a> Mul<&'a QuadCoeff> for &'a QuadCoeff {
    type Output = QuadCoeff;
    fn mul(self, rhs: &QuadCoeff) -> QuadCoeff {
        self.check(rhs);
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadCoeff::from_rational(&self.a * &rhs.a, self.q);
        }
        let prod = |x: &Rational, y: &Rational| if x.is_zero() || y.is_zero() { Rational::zero() } else { x * y };
        let bb = prod(&self.b, &rhs.b);
        let a = if bb.is_zero() { prod(&self.a, &rhs.a) } else { prod(&self.a, &rhs.a) + bb * BigInt::from(self.q) };
        QuadCoeff::raw(a, prod(&self.a, &rhs.b) + prod(&self.b, &rhs.a), self.q)
    }
}

impl Neg for &QuadCoeff {
    type Output = QuadCoeff;
    fn neg(self) -> QuadCoeff {
        QuadCoeff::raw(-self.a.clone(), -self.b.clone(), self.q)
    }
}

impl Neg for QuadCoeff {
    type Output = QuadCoeff;
    fn neg(self) -> QuadCoeff {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadCoeff> for QuadCoeff {
            type Output = QuadCoeff;
            fn $m(self, rhs: QuadCoeff) -> QuadCoeff {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadCoeff> for QuadCoeff {
            type Output = QuadCoeff;
            fn $m(self, rhs: &QuadCoeff) -> QuadCoeff {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn norm_form() {
        let x = QuadCoeff::new(rat(1, 1), rat(1, 1), 2).unwrap();
        let y = QuadCoeff::new(rat(1, 1), rat(-1, 1), 2).unwrap();
        assert_eq!(quad_arith(&x, &y, QuadOp::Mul).unwrap(), QuadCoeff::from_int(-1, 2));
    }

    #[test]
    fn inverse_of_sqrt3() {
        let x = QuadCoeff::sqrt_q(3);
        let inv = x.inv().unwrap();
        assert_eq!(inv, QuadCoeff::new(rat(0, 1), rat(1, 3), 3).unwrap());
    }

    #[test]
    fn division_by_zero() {
        let x = QuadCoeff::one(5);
        assert_eq!(
            quad_arith(&x, &QuadCoeff::zero(5), QuadOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn half_powers() {
        assert_eq!(QuadCoeff::q_half_pow(2, -3), QuadCoeff::new(rat(0, 1), rat(1, 4), 2).unwrap());
        assert_eq!(QuadCoeff::q_half_pow(3, 4), QuadCoeff::from_int(9, 3));
        let s = QuadCoeff::q_half_pow(5, 3);
        assert_eq!(s.pow(2).unwrap(), QuadCoeff::from_int(125, 5));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(QuadCoeff::new(rat(1, 1), rat(0, 1), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn display() {
        let x = QuadCoeff::new(rat(1, 2), rat(-3, 4), 2).unwrap();
        assert_eq!(x.to_string(), "1/2-3/4*sqrt(2)");
        assert_eq!(QuadCoeff::from_int(7, 3).to_string(), "7");
    }
}
