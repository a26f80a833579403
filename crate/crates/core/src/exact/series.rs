use std::fmt;

use super::{Poly, QuadCoeff, RationalFunction};
use crate::error::{Error, Result};

/// Power series truncated after `t^order`; always holds `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    q: u32,
    coeffs: Vec<QuadCoeff>,
}

impl TruncatedSeries {
    pub fn zero(q: u32, order: usize) -> Self {
        TruncatedSeries { q, coeffs: vec![QuadCoeff::zero(q); order + 1] }
    }

    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(q: u32, mut coeffs: Vec<QuadCoeff>, order: usize) -> Self {
        coeffs.resize(order + 1, QuadCoeff::zero(q));
        TruncatedSeries { q, coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::from_coeffs(p.q(), p.coeffs().to_vec(), order)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QuadCoeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &QuadCoeff {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QuadCoeff::is_zero)
    }

    /// Adds `c` to the coefficient of `t^i`; terms past the order are dropped.
    pub fn add_term(&mut self, i: usize, c: &QuadCoeff) {
        if let Some(x) = self.coeffs.get_mut(i) {
            *x = &*x + c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries { q: self.q, coeffs }
    }

    /// Product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![QuadCoeff::zero(self.q); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncatedSeries { q: self.q, coeffs: out }
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order() + 1)
    }
}

/// Taylor expansion of `rf` at `t = 0` through `t^n`.
pub fn series_of(rf: &RationalFunction, n: usize) -> Result<TruncatedSeries> {
    let den = rf.den();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let d0_inv = d0.inv()?;
    let q = rf.q();
    let num = rf.num();
    let dens = den.coeffs();
    let mut out: Vec<QuadCoeff> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.coeff(k);
        for (j, dj) in dens.iter().enumerate().skip(1).take(k) {
            if !dj.is_zero() {
                acc = &acc - &(dj * &out[k - j]);
            }
        }
        out.push(&acc * &d0_inv);
    }
    Ok(TruncatedSeries { q, coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(q: u32, c: &[i64]) -> Poly {
        Poly::from_rationals(q, &c.iter().map(|&n| rat(n, 1)).collect::<Vec<_>>())
    }

    fn ints(s: &TruncatedSeries) -> Vec<String> {
        s.coeffs().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn geometric() {
        let rf = RationalFunction::new(p(2, &[1]), p(2, &[1, -1])).unwrap();
        assert_eq!(ints(&series_of(&rf, 4).unwrap()), ["1", "1", "1", "1", "1"]);
    }

    #[test]
    fn one_plus_t() {
        let rf = RationalFunction::new(p(2, &[1, 0, -1]), p(2, &[1, -1])).unwrap();
        assert_eq!(ints(&series_of(&rf, 3).unwrap()), ["1", "1", "0", "0"]);
    }

    #[test]
    fn pole_at_origin() {
        let rf = RationalFunction::new(p(3, &[1]), p(3, &[0, 1])).unwrap();
        assert_eq!(series_of(&rf, 3).unwrap_err(), Error::PoleAtOrigin);
    }

    #[test]
    fn length_is_order_plus_one() {
        let rf = RationalFunction::from_poly(p(5, &[1, 2, 3, 4, 5, 6]));
        assert_eq!(series_of(&rf, 2).unwrap().coeffs().len(), 3);
    }
}
