use super::etale::{Etale, EtaleMatrix};
use crate::error::{invalid, Result};
use crate::exact::{rat, Rational};

/// The symmetric matrix `S = [[a, b/2], [b/2, c]]` and everything derived from it.
///
/// The additive character is fixed as `ψ(x) = e^(−2πix)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselDatum {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BesselDatum {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if c == 0 {
            return Err(invalid("c must be a unit"));
        }
        if b * b - 4 * a * c == 0 {
            return Err(invalid("d = b² − 4ac must be nonzero"));
        }
        Ok(BesselDatum { a, b, c })
    }

    /// Checks that `c` is a unit at `p`.
    pub fn check_prime(&self, p: u64) -> Result<()> {
        if self.c.rem_euclid(p as i64) == 0 {
            return Err(invalid(format!("c = {} is not a unit at {p}", self.c)));
        }
        Ok(())
    }

    /// `d = b² − 4ac`.
    pub fn d(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `D = −d` when `d < 0`.
    pub fn disc(&self) -> Option<u64> {
        (self.d() < 0).then(|| (-self.d()) as u64)
    }

    pub fn s_matrix(&self) -> [[Rational; 2]; 2] {
        [[rat(self.a, 1), rat(self.b, 2)], [rat(self.b, 2), rat(self.c, 1)]]
    }

    fn d_rat(&self) -> Rational {
        rat(self.d(), 1)
    }

    /// `ξ₀ = (−b + √d)/2`.
    pub fn xi0(&self) -> Etale {
        Etale::new(rat(-self.b, 2), rat(1, 2), self.d_rat())
    }

    /// `α = (b + √d)/(2c)`.
    pub fn alpha(&self) -> Etale {
        Etale::new(rat(self.b, 2 * self.c), rat(1, 2 * self.c), self.d_rat())
    }

    /// `η` with `ϖ^m` replaced by the marker `pm`.
    pub fn eta(&self, pm: &Rational) -> EtaleMatrix {
        let d = self.d_rat();
        let al = self.alpha();
        EtaleMatrix::with_entries(&d, &[(1, 0, al.scale(pm)), (2, 3, -&al.conj().scale(pm))])
    }

    /// Checks `cα² − bα + a = 0`, `α + ᾱ = b/c` and `αᾱ = a/c`.
    pub fn alpha_relations_hold(&self) -> bool {
        let al = self.alpha();
        let quad = &(&(&al * &al).scale(&rat(self.c, 1)) - &al.scale(&rat(self.b, 1)))
            + &Etale::rational(rat(self.a, 1), al.d());
        quad.is_zero()
            && (&al + &al.conj()) == Etale::rational(rat(self.b, self.c), al.d())
            && (&al * &al.conj()) == Etale::rational(rat(self.a, self.c), al.d())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_relations() {
        for (a, b, c) in [(1, 0, 1), (1, 1, 1), (2, 1, 1), (3, -2, 5)] {
            assert!(BesselDatum::new(a, b, c).unwrap().alpha_relations_hold());
        }
    }

    #[test]
    fn discriminants() {
        let bd = BesselDatum::new(1, 1, 1).unwrap();
        assert_eq!(bd.d(), -3);
        assert_eq!(bd.disc(), Some(3));
        assert!(BesselDatum::new(1, 2, 1).is_err());
    }
}
