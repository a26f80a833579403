use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};

/// Element `x + y√d` of the étale algebra `ℚ[X]/(X² − d)`, `d ≠ 0` rational.
///
/// When `d` is a square this is `ℚ × ℚ`, and elements of norm zero have no inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Etale {
    pub x: Rational,
    pub y: Rational,
    d: Rational,
}

impl Etale {
    pub fn new(x: Rational, y: Rational, d: Rational) -> Self {
        assert!(!d.is_zero(), "étale algebra needs d ≠ 0");
        Etale { x, y, d }
    }

    pub fn rational(x: Rational, d: &Rational) -> Self {
        Self::new(x, Rational::zero(), d.clone())
    }

    pub fn zero(d: &Rational) -> Self {
        Self::rational(Rational::zero(), d)
    }

    pub fn one(d: &Rational) -> Self {
        Self::rational(Rational::one(), d)
    }

    /// `√d`.
    pub fn sqrt_d(d: &Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn conj(&self) -> Self {
        Self::new(self.x.clone(), -self.y.clone(), self.d.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.x * &self.x - &self.y * &self.y * &self.d
    }

    pub fn trace(&self) -> Rational {
        &self.x + &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.x * r, &self.y * r, self.d.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.x / &n, -(&self.y / &n), self.d.clone()))
    }
}

impl fmt::Display for Etale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrt({})", fmt_rational(&self.x), fmt_rational(&self.y), fmt_rational(&self.d))
    }
}

impl<'a> Add<&'a Etale> for &'a Etale {
    type Output = Etale;
    fn add(self, rhs: &Etale) -> Etale {
        Etale::new(&self.x + &rhs.x, &self.y + &rhs.y, self.d.clone())
    }
}

impl<'a> Sub<&'a Etale> for &'a Etale {
    type Output = Etale;
    fn sub(self, rhs: &Etale) -> Etale {
        Etale::new(&self.x - &rhs.x, &self.y - &rhs.y, self.d.clone())
    }
}

impl<'a> Mul<&'a Etale> for &'a Etale {
    type Output = Etale;
    fn mul(self, rhs: &Etale) -> Etale {
        debug_assert_eq!(self.d, rhs.d);
        Etale::new(
            &self.x * &rhs.x + &self.y * &rhs.y * &self.d,
            &self.x * &rhs.y + &self.y * &rhs.x,
            self.d.clone(),
        )
    }
}

impl Neg for &Etale {
    type Output = Etale;
    fn neg(self) -> Etale {
        Etale::new(-self.x.clone(), -self.y.clone(), self.d.clone())
    }
}

/// 4×4 matrix over an étale algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleMatrix {
    e: [[Etale; 4]; 4],
}

impl EtaleMatrix {
    pub fn from_fn(f: impl Fn(usize, usize) -> Etale) -> Self {
        EtaleMatrix { e: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn identity(d: &Rational) -> Self {
        Self::from_fn(|i, j| if i == j { Etale::one(d) } else { Etale::zero(d) })
    }

    pub fn diag(entries: [Etale; 4]) -> Self {
        let d = entries[0].d().clone();
        Self::from_fn(|i, j| if i == j { entries[i].clone() } else { Etale::zero(&d) })
    }

    /// Starts from the identity and overwrites the listed entries.
    pub fn with_entries(d: &Rational, entries: &[(usize, usize, Etale)]) -> Self {
        let mut m = Self::identity(d);
        for (i, j, v) in entries {
            m.e[*i][*j] = v.clone();
        }
        m
    }

    /// Integer matrix, e.g. a Weyl element.
    pub fn from_ints(d: &Rational, rows: [[i64; 4]; 4]) -> Self {
        Self::from_fn(|i, j| Etale::rational(Rational::from_integer(rows[i][j].into()), d))
    }

    pub fn entry(&self, i: usize, j: usize) -> &Etale {
        &self.e[i][j]
    }

    /// Embeds a 2×2 block `g` as `diag(g, det(g)·g^(-T))`.
    pub fn embed_gl2(g: [[Etale; 2]; 2]) -> Result<Self> {
        let d = g[0][0].d().clone();
        let det = &(&g[0][0] * &g[1][1]) - &(&g[0][1] * &g[1][0]);
        det.inv()?;
        // det·g^(-T) = [[g11, -g10], [-g01, g00]]
        let lower = [[g[1][1].clone(), -&g[1][0]], [-&g[0][1], g[0][0].clone()]];
        Ok(Self::from_fn(|i, j| match (i < 2, j < 2) {
            (true, true) => g[i][j].clone(),
            (false, false) => lower[i - 2][j - 2].clone(),
            _ => Etale::zero(&d),
        }))
    }

    /// Inverse of a diagonal matrix.
    pub fn diag_inv(&self) -> Result<Self> {
        let d = self.e[0][0].d().clone();
        let mut out = Self::identity(&d);
        for i in 0..4 {
            for j in 0..4 {
                if i != j && !self.e[i][j].is_zero() {
                    return Err(crate::error::invalid("not diagonal"));
                }
            }
            out.e[i][i] = self.e[i][i].inv()?;
        }
        Ok(out)
    }

    /// First entry where the matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        (0..16).map(|k| (k / 4, k % 4)).find(|&(i, j)| self.e[i][j] != other.e[i][j])
    }
}

impl<'a> Mul<&'a EtaleMatrix> for &'a EtaleMatrix {
    type Output = EtaleMatrix;
    fn mul(self, rhs: &EtaleMatrix) -> EtaleMatrix {
        EtaleMatrix::from_fn(|i, j| {
            let mut acc = Etale::zero(self.e[0][0].d());
            for k in 0..4 {
                if !self.e[i][k].is_zero() && !rhs.e[k][j].is_zero() {
                    acc = &acc + &(&self.e[i][k] * &rhs.e[k][j]);
                }
            }
            acc
        })
    }
}

impl fmt::Display for EtaleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .e
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
