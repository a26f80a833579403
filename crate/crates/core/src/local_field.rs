//! Local quadratic-extension data at a prime `p`: the splitting symbol, the
//! unramified character Λ of `L^×` through its values on uniformizers, and
//! the unit indices of the orders `o_m = o + ϖ^m o_L`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{is_prime, rat, Rational};

/// Behaviour of `p` in `L = F(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub enum SplittingSymbol {
    Inert,
    Ramified,
    Split,
}

impl SplittingSymbol {
    pub const ALL: [SplittingSymbol; 3] =
        [SplittingSymbol::Inert, SplittingSymbol::Ramified, SplittingSymbol::Split];

    /// −1, 0 or +1.
    pub fn value(self) -> i32 {
        match self {
            SplittingSymbol::Inert => -1,
            SplittingSymbol::Ramified => 0,
            SplittingSymbol::Split => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SplittingSymbol::Inert => "inert",
            SplittingSymbol::Ramified => "ramified",
            SplittingSymbol::Split => "split",
        }
    }

    /// `1 − symbol/q`.
    pub fn local_density(self, q: u32) -> Rational {
        Rational::one() - rat(self.value() as i64, q as i64)
    }
}

impl TryFrom<i32> for SplittingSymbol {
    type Error = Error;
    fn try_from(v: i32) -> Result<Self> {
        match v {
            -1 => Ok(SplittingSymbol::Inert),
            0 => Ok(SplittingSymbol::Ramified),
            1 => Ok(SplittingSymbol::Split),
            _ => Err(invalid(format!("splitting symbol must be -1, 0 or 1, got {v}"))),
        }
    }
}

impl From<SplittingSymbol> for i32 {
    fn from(s: SplittingSymbol) -> i32 {
        s.value()
    }
}

impl fmt::Display for SplittingSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// The splitting symbol of `p` in `ℚ_p(√d)`.
///
/// +1 if `d` is a square in `ℚ_p`; otherwise 0 when `v_p(d) > 0` and −1 when
/// `d` is a unit. The caller guarantees that a non-square `d` generates the
/// discriminant, which is what makes the valuation test decide ramification.
pub fn splitting_symbol(d: i64, p: u64) -> Result<SplittingSymbol> {
    if d == 0 {
        return Err(invalid("d = 0 has no splitting symbol"));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut v = 0u32;
    let mut u = d as i128;
    while u % p as i128 == 0 {
        u /= p as i128;
        v += 1;
    }
    let unit_square = if p == 2 {
        u.rem_euclid(8) == 1
    } else {
        let r = u.rem_euclid(p as i128) as u64;
        pow_mod(r, (p - 1) / 2, p) == 1
    };
    Ok(if v.is_multiple_of(2) && unit_square {
        SplittingSymbol::Split
    } else if v > 0 {
        SplittingSymbol::Ramified
    } else {
        SplittingSymbol::Inert
    })
}

/// Values of Λ on `ϖ_F`, `ϖ_L` and `ϖ_F ϖ_L^(-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalQuadData {
    p: u32,
    symbol: SplittingSymbol,
    lambda_pi_f: Rational,
    lambda_pi_l: Option<Rational>,
    lambda_pi_f_over_pi_l: Option<Rational>,
}

impl LocalQuadData {
    /// Validating constructor. Unused Λ values for the given symbol must be `None`.
    pub fn new(
        p: u32,
        symbol: SplittingSymbol,
        lambda_pi_f: Rational,
        lambda_pi_l: Option<Rational>,
        lambda_pi_f_over_pi_l: Option<Rational>,
    ) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let nonzero = |r: &Rational, name: &str| {
            if r.is_zero() {
                Err(invalid(format!("Λ({name}) must be nonzero")))
            } else {
                Ok(())
            }
        };
        nonzero(&lambda_pi_f, "ϖ_F")?;
        match symbol {
            SplittingSymbol::Inert => {
                if lambda_pi_l.is_some() || lambda_pi_f_over_pi_l.is_some() {
                    return Err(invalid("inert data carries only Λ(ϖ_F)"));
                }
            }
            SplittingSymbol::Ramified => {
                let l = lambda_pi_l.as_ref().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
                nonzero(l, "ϖ_L")?;
                if lambda_pi_f_over_pi_l.is_some() {
                    return Err(invalid("ramified data has no Λ(ϖ_F ϖ_L^-1)"));
                }
                if l * l != lambda_pi_f {
                    return Err(invalid("ramified: Λ(ϖ_L)² must equal Λ(ϖ_F)"));
                }
            }
            SplittingSymbol::Split => {
                let l = lambda_pi_l.as_ref().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
                let r = lambda_pi_f_over_pi_l
                    .as_ref()
                    .ok_or_else(|| Error::Missing("Λ(ϖ_F ϖ_L^-1)".into()))?;
                nonzero(l, "ϖ_L")?;
                nonzero(r, "ϖ_F ϖ_L^-1")?;
                if l * r != lambda_pi_f {
                    return Err(invalid("split: Λ(ϖ_L)·Λ(ϖ_F ϖ_L^-1) must equal Λ(ϖ_F)"));
                }
            }
        }
        Ok(LocalQuadData { p, symbol, lambda_pi_f, lambda_pi_l, lambda_pi_f_over_pi_l })
    }

    pub fn inert(p: u32, lambda_pi_f: Rational) -> Result<Self> {
        Self::new(p, SplittingSymbol::Inert, lambda_pi_f, None, None)
    }

    /// Λ(ϖ_F) is forced to Λ(ϖ_L)².
    pub fn ramified(p: u32, lambda_pi_l: Rational) -> Result<Self> {
        let f = &lambda_pi_l * &lambda_pi_l;
        Self::new(p, SplittingSymbol::Ramified, f, Some(lambda_pi_l), None)
    }

    /// Λ(ϖ_F) is forced to the product.
    pub fn split(p: u32, lambda_pi_l: Rational, lambda_pi_f_over_pi_l: Rational) -> Result<Self> {
        let f = &lambda_pi_l * &lambda_pi_f_over_pi_l;
        Self::new(p, SplittingSymbol::Split, f, Some(lambda_pi_l), Some(lambda_pi_f_over_pi_l))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Residue cardinality; equals `p` over `ℚ_p`.
    pub fn q(&self) -> u32 {
        self.p
    }

    pub fn symbol(&self) -> SplittingSymbol {
        self.symbol
    }

    pub fn lambda_pi_f(&self) -> &Rational {
        &self.lambda_pi_f
    }

    pub fn lambda_pi_l(&self) -> Option<&Rational> {
        self.lambda_pi_l.as_ref()
    }

    pub fn lambda_pi_f_over_pi_l(&self) -> Option<&Rational> {
        self.lambda_pi_f_over_pi_l.as_ref()
    }

    /// Overwrites one Λ value without re-checking the invariants.
    pub(crate) fn with_lambda_unchecked(
        &self,
        pi_f: Option<Rational>,
        pi_l: Option<Rational>,
        pi_f_over_pi_l: Option<Rational>,
    ) -> Self {
        let mut out = self.clone();
        if let Some(v) = pi_f {
            out.lambda_pi_f = v;
        }
        if pi_l.is_some() {
            out.lambda_pi_l = pi_l;
        }
        if pi_f_over_pi_l.is_some() {
            out.lambda_pi_f_over_pi_l = pi_f_over_pi_l;
        }
        out
    }
}

/// The index `(o_L^× : o_m^×)`: 1 for `m = 0`, else `(1 − symbol/q)·q^m`.
pub fn unit_index(data: &LocalQuadData, m: u32) -> Rational {
    if m == 0 {
        return Rational::one();
    }
    let q = data.q();
    data.symbol.local_density(q) * Rational::from_integer(num_traits::pow(q.into(), m as usize))
}

/// `(o_L^× : o_m^×)` by counting in `o_L / p^k o_L ≅ (ℤ/p^k)[x]/(x² + bx + ac)`.
///
/// Units are the classes `x + yξ₀` whose norm `x² − bxy + acy²` is prime to
/// `p`; the image of `o_m^×` is the part with `p^m | y`. The quotient of the
/// two counts is computed for `k = m+1` and `k = m+2` and must agree.
pub fn unit_index_oracle(a: i64, b: i64, c: i64, p: u64, m: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if c.rem_euclid(p as i64) == 0 {
        return Err(invalid(format!("c = {c} is not a unit at {p}")));
    }
    if p > 7 || m > 4 {
        return Err(Error::Domain(format!("oracle limited to p ≤ 7, m ≤ 4 (got p = {p}, m = {m})")));
    }
    let at = |k: u32| -> Result<u64> {
        let pk = p.pow(k) as i64;
        let pm = p.pow(m) as i64;
        let (bb, ac) = (b.rem_euclid(pk), (a * c).rem_euclid(pk));
        let (mut units, mut sub) = (0u64, 0u64);
        for x in 0..pk {
            for y in 0..pk {
                let n = (x * x - bb * x % pk * y + ac * y % pk * y).rem_euclid(pk);
                if n % p as i64 != 0 {
                    units += 1;
                    if y % pm == 0 {
                        sub += 1;
                    }
                }
            }
        }
        if sub == 0 || units % sub != 0 {
            return Err(Error::Precision(format!("{units} units, {sub} in o_{m} at k = {k}")));
        }
        Ok(units / sub)
    };
    let first = at(m + 1)?;
    let second = at(m + 2)?;
    if first != second {
        return Err(Error::Precision(format!(
            "index {first} at k = {} but {second} at k = {}",
            m + 1,
            m + 2
        )));
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        assert_eq!(splitting_symbol(-4, 3).unwrap(), SplittingSymbol::Inert);
        assert_eq!(splitting_symbol(9, 5).unwrap(), SplittingSymbol::Split);
        assert_eq!(splitting_symbol(-3, 3).unwrap(), SplittingSymbol::Ramified);
        assert_eq!(splitting_symbol(-7, 2).unwrap(), SplittingSymbol::Split);
        assert_eq!(splitting_symbol(-3, 2).unwrap(), SplittingSymbol::Inert);
        assert_eq!(splitting_symbol(-4, 2).unwrap(), SplittingSymbol::Ramified);
        assert!(splitting_symbol(0, 3).is_err());
        assert!(splitting_symbol(5, 4).is_err());
    }

    #[test]
    fn unit_index_examples() {
        let inert = LocalQuadData::inert(3, rat(1, 1)).unwrap();
        assert_eq!(unit_index(&inert, 2), rat(12, 1));
        let split = LocalQuadData::split(2, rat(1, 1), rat(1, 1)).unwrap();
        assert_eq!(unit_index(&split, 1), rat(1, 1));
        assert_eq!(unit_index(&split, 0), rat(1, 1));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(unit_index_oracle(1, 0, 1, 3, 1).unwrap(), 4);
        assert_eq!(unit_index_oracle(1, 1, 1, 3, 1).unwrap(), 3);
        assert_eq!(unit_index_oracle(1, 1, 1, 3, 0).unwrap(), 1);
    }

    #[test]
    fn invariants_rejected() {
        assert!(LocalQuadData::new(3, SplittingSymbol::Ramified, rat(2, 1), Some(rat(1, 1)), None).is_err());
        assert!(LocalQuadData::new(3, SplittingSymbol::Split, rat(2, 1), Some(rat(1, 1)), Some(rat(1, 1))).is_err());
        assert!(LocalQuadData::inert(3, rat(0, 1)).is_err());
        assert!(LocalQuadData::new(5, SplittingSymbol::Split, rat(1, 1), Some(rat(1, 1)), None).is_err());
    }
}
