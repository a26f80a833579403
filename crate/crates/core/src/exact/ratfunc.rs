use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Poly, QuadCoeff};
use crate::error::{Error, Result};

/// Quotient `num/den` of polynomials over ℚ(√q).
///
/// When `den(0) ≠ 0` the pair is scaled so that `den(0) = 1`. Equality is
/// equality of fractions, `a/b == c/d` iff `a·d = c·b`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(num.q(), den.q(), "RationalFunction over different fields");
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        let q = p.q();
        RationalFunction { num: p, den: Poly::one(q) }
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let c0 = den.coeff(0);
        if c0.is_zero() || c0.is_one() {
            return RationalFunction { num, den };
        }
        let inv = c0.inv().expect("nonzero constant term");
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn q(&self) -> u32 {
        self.num.q()
    }

    /// Cancels the common factor of numerator and denominator.
    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let (n, _) = self.num.div_rem(&g).expect("gcd divides");
        let (d, _) = self.den.div_rem(&g).expect("gcd divides");
        Self::normalized(n, d)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn eval(&self, t: &QuadCoeff) -> Result<QuadCoeff> {
        self.num.eval(t).checked_div(&self.den.eval(t))
    }

    pub fn eval_complex(&self, t: Complex64) -> Complex64 {
        self.num.eval_complex(t) / self.den.eval_complex(t)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(q: u32, c: &[i64]) -> Poly {
        Poly::from_rationals(q, &c.iter().map(|&n| rat(n, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn normalizes_constant_term() {
        let rf = RationalFunction::new(p(2, &[1]), p(2, &[2, -1])).unwrap();
        assert_eq!(rf.den().coeff(0), QuadCoeff::one(2));
        assert_eq!(rf.num().coeff(0), QuadCoeff::from_rational(rat(1, 2), 2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(3, &[1]), Poly::zero(3)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn reduce_cancels() {
        let rf = RationalFunction::new(p(2, &[1, 0, -1]), p(2, &[1, -1])).unwrap();
        let r = rf.reduced();
        assert_eq!(r.den().degree(), Some(0));
        assert_eq!(r.num(), &p(2, &[1, 1]));
    }
}
