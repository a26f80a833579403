use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{QuadCoeff, Rational};
use crate::error::{Error, Result};

/// Dense polynomial in one variable over ℚ(√q). The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    q: u32,
    coeffs: Vec<QuadCoeff>,
}

impl Poly {
    pub fn new(q: u32, mut coeffs: Vec<QuadCoeff>) -> Self {
        assert!(coeffs.iter().all(|c| c.q() == q), "coefficient field mismatch");
        while coeffs.last().is_some_and(QuadCoeff::is_zero) {
            coeffs.pop();
        }
        Poly { q, coeffs }
    }

    pub fn from_rationals(q: u32, coeffs: &[Rational]) -> Self {
        Self::new(q, coeffs.iter().map(|r| QuadCoeff::from_rational(r.clone(), q)).collect())
    }

    pub fn zero(q: u32) -> Self {
        Poly { q, coeffs: Vec::new() }
    }

    pub fn one(q: u32) -> Self {
        Self::constant(QuadCoeff::one(q))
    }

    pub fn constant(c: QuadCoeff) -> Self {
        Self::new(c.q(), vec![c])
    }

    /// `1 − c·t`.
    pub fn one_minus(c: QuadCoeff) -> Self {
        let q = c.q();
        Self::new(q, vec![QuadCoeff::one(q), -c])
    }

    /// `c·t^k`.
    pub fn monomial(c: QuadCoeff, k: usize) -> Self {
        let q = c.q();
        let mut coeffs = vec![QuadCoeff::zero(q); k];
        coeffs.push(c);
        Self::new(q, coeffs)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[QuadCoeff] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> QuadCoeff {
        self.coeffs.get(i).cloned().unwrap_or_else(|| QuadCoeff::zero(self.q))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QuadCoeff> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &QuadCoeff) -> QuadCoeff {
        self.coeffs
            .iter()
            .rev()
            .fold(QuadCoeff::zero(self.q), |acc, c| &(&acc * t) + c)
    }

    /// Evaluates with `√q` replaced by its positive real value.
    pub fn eval_complex(&self, t: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * t + c.to_f64())
    }

    pub fn scale(&self, c: &QuadCoeff) -> Self {
        Self::new(self.q, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.b().is_zero())
    }

    /// Euclidean division: `self = quot·rhs + rem` with `deg rem < deg rhs`.
    pub fn div_rem(&self, rhs: &Poly) -> Result<(Poly, Poly)> {
        let lead = rhs.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dr = rhs.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dr {
            return Ok((Poly::zero(self.q), self.clone()));
        }
        let mut quot = vec![QuadCoeff::zero(self.q); rem.len() - dr];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dr] * &lead;
            if !c.is_zero() {
                for (j, r) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * r);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dr);
        Ok((Poly::new(self.q, quot), Poly::new(self.q, rem)))
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    fn check(&self, other: &Poly) {
        assert_eq!(self.q, other.q, "Poly over different fields");
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.q, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.q, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.q);
        }
        let mut out = vec![QuadCoeff::zero(self.q); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.q, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.q, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(mut iter: I) -> Poly {
        let first = iter.next().expect("product of an empty family needs a field");
        iter.fold(first, |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(q: u32, c: &[(i64, i64)]) -> Poly {
        Poly::from_rationals(q, &c.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>())
    }

    #[test]
    fn trailing_zeros_stripped() {
        let x = p(2, &[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(x.degree(), Some(0));
        assert!(p(2, &[(0, 1)]).is_zero());
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(3, &[(1, 1), (2, 1), (-1, 3), (5, 2)]);
        let b = p(3, &[(1, 2), (-1, 1)]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = p(5, &[(1, 1), (-1, 2)]);
        let a = &f * &p(5, &[(3, 1), (1, 1)]);
        let b = &f * &p(5, &[(1, 1), (0, 1), (1, 1)]);
        assert_eq!(a.gcd(&b), f.monic());
    }
}
