//! Satake parameters of an unramified representation of GSp(4), the twisted
//! Steinberg datum of GL(2), and the polynomial inverses of the local
//! L-factors that appear in the closed form of the local zeta integral.

use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::exact::{Poly, QuadCoeff, Rational};
use crate::local_field::{LocalQuadData, SplittingSymbol};

/// Values `σ(ϖ), χ₁(ϖ), χ₂(ϖ)` and the derived quadruple γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParams {
    u0: Rational,
    u1: Rational,
    u2: Rational,
    gamma: [Rational; 4],
    omega_pi: Rational,
}

impl SatakeParams {
    pub fn new(u0: Rational, u1: Rational, u2: Rational) -> Result<Self> {
        if u0.is_zero() || u1.is_zero() || u2.is_zero() {
            return Err(invalid("Satake parameters must be nonzero"));
        }
        let gamma = [&u1 * &u2 * &u0, &u1 * &u0, u0.clone(), &u2 * &u0];
        let omega_pi = &gamma[0] * &gamma[2];
        debug_assert_eq!(omega_pi, &gamma[1] * &gamma[3]);
        Ok(SatakeParams { u0, u1, u2, gamma, omega_pi })
    }

    pub fn u(&self) -> [&Rational; 3] {
        [&self.u0, &self.u1, &self.u2]
    }

    /// `[u1u2u0, u1u0, u0, u2u0]`.
    pub fn gamma(&self) -> &[Rational; 4] {
        &self.gamma
    }

    /// Central character at ϖ, `γ¹γ³`.
    pub fn omega_pi(&self) -> &Rational {
        &self.omega_pi
    }

    /// Replaces `γ^(i)` without touching `ω_π`; breaks the construction invariant on purpose.
    pub(crate) fn with_gamma_unchecked(&self, i: usize, value: Rational) -> Self {
        let mut out = self.clone();
        out.gamma[i] = value;
        out
    }
}

/// `Ω(ϖ)` for the twisted Steinberg representation `Ω·St` of conductor `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergData {
    omega: Rational,
}

impl SteinbergData {
    pub fn new(omega: Rational) -> Result<Self> {
        if omega.is_zero() {
            return Err(invalid("Ω(ϖ) must be nonzero"));
        }
        Ok(SteinbergData { omega })
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    /// Always 1.
    pub fn conductor_exponent(&self) -> u32 {
        1
    }

    /// `ω_τ(ϖ) = Ω(ϖ)²`.
    pub fn central_character(&self) -> Rational {
        &self.omega * &self.omega
    }
}

/// `∏ᵢ (1 − (γ^(i))⁻¹ Ω(ϖ)⁻¹ q^(−1/2) · q^(−1/2) t)`.
pub fn l8_inverse(sat: &SatakeParams, st: &SteinbergData, q: u32) -> Poly {
    let half = QuadCoeff::q_half_pow(q, -1);
    let out: Poly = sat
        .gamma
        .iter()
        .map(|g| {
            let c = QuadCoeff::from_rational((g * &st.omega).recip(), q);
            Poly::one_minus(&(&c * &half) * &half)
        })
        .product();
    assert!(out.is_rational(), "√q part of l8_inverse must cancel");
    out
}

/// `χ(ϖ) = ω_π(ϖ)⁻¹ (Ω(ϖ)²)⁻¹`.
pub fn chi_pi_f_from(sat: &SatakeParams, st: &SteinbergData) -> Rational {
    (sat.omega_pi() * st.central_character()).recip()
}

/// Inverse of the degree-2 twisted L-factor of `τ × AI(Λ) × χ`, as a polynomial in `t`.
pub fn l_tau_ai_chi_inverse(local: &LocalQuadData, chi_pi_f: &Rational, st: &SteinbergData) -> Result<Poly> {
    if chi_pi_f.is_zero() {
        return Err(invalid("χ(ϖ) must be nonzero"));
    }
    let q = local.q();
    let chi_omega = QuadCoeff::from_rational(chi_pi_f * st.omega(), q);
    let linear = |lambda: &Rational| {
        Poly::one_minus(&chi_omega.scale(lambda) * &QuadCoeff::q_half_pow(q, -3))
    };
    Ok(match local.symbol() {
        SplittingSymbol::Inert => {
            let c = QuadCoeff::from_rational(chi_pi_f.clone(), q) * QuadCoeff::q_half_pow(q, -6);
            Poly::new(q, vec![QuadCoeff::one(q), QuadCoeff::zero(q), -c])
        }
        SplittingSymbol::Ramified => {
            let l = local.lambda_pi_l().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
            linear(l)
        }
        SplittingSymbol::Split => {
            let l = local.lambda_pi_l().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
            let r = local
                .lambda_pi_f_over_pi_l()
                .ok_or_else(|| Error::Missing("Λ(ϖ_F ϖ_L^-1)".into()))?;
            &linear(l) * &linear(r)
        }
    })
}

/// Λ(ϖ_F) must equal ω_π(ϖ) when the two are paired.
pub fn check_compatible(local: &LocalQuadData, sat: &SatakeParams) -> Result<()> {
    if local.lambda_pi_f() != sat.omega_pi() {
        return Err(invalid(format!(
            "Λ(ϖ_F) = {} differs from ω_π(ϖ) = {}",
            local.lambda_pi_f(),
            sat.omega_pi()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(q: u32, c: &[Rational]) -> Poly {
        Poly::from_rationals(q, c)
    }

    #[test]
    fn gamma_from_u() {
        let sat = SatakeParams::new(rat(1, 1), rat(2, 1), rat(3, 1)).unwrap();
        assert_eq!(sat.gamma(), &[rat(6, 1), rat(2, 1), rat(1, 1), rat(3, 1)]);
        assert_eq!(sat.omega_pi(), &rat(6, 1));
    }

    #[test]
    fn l8_trivial() {
        let sat = SatakeParams::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap();
        let st = SteinbergData::new(rat(1, 1)).unwrap();
        let lin = poly(2, &[rat(1, 1), rat(-1, 2)]);
        let expect = &(&lin * &lin) * &(&lin * &lin);
        assert_eq!(l8_inverse(&sat, &st, 2), expect);
    }

    #[test]
    fn l8_example() {
        let sat = SatakeParams::new(rat(1, 1), rat(2, 1), rat(3, 1)).unwrap();
        let st = SteinbergData::new(rat(-1, 1)).unwrap();
        let f = |d: i64| poly(3, &[rat(1, 1), rat(1, d)]);
        let expect: Poly = [f(18), f(6), f(3), f(9)].into_iter().product();
        let got = l8_inverse(&sat, &st, 3);
        assert_eq!(got, expect);
        assert_eq!(got.degree(), Some(4));
        assert!(got.coeff(0).is_one());
    }

    #[test]
    fn chi_examples() {
        let sat = SatakeParams::new(rat(1, 1), rat(2, 1), rat(3, 1)).unwrap();
        let st = SteinbergData::new(rat(-1, 1)).unwrap();
        assert_eq!(chi_pi_f_from(&sat, &st), rat(1, 6));
    }

    #[test]
    fn tau_factor_cases() {
        let st = SteinbergData::new(rat(1, 1)).unwrap();
        let inert = LocalQuadData::inert(2, rat(1, 1)).unwrap();
        let p = l_tau_ai_chi_inverse(&inert, &rat(1, 1), &st).unwrap();
        assert_eq!(p, poly(2, &[rat(1, 1), rat(0, 1), rat(-1, 8)]));

        let split = LocalQuadData::split(3, rat(1, 1), rat(1, 1)).unwrap();
        let p = l_tau_ai_chi_inverse(&split, &rat(1, 1), &st).unwrap();
        let lin = Poly::one_minus(QuadCoeff::q_half_pow(3, -3));
        assert_eq!(p, &lin * &lin);
        assert_eq!(p.degree(), Some(2));

        let ram = LocalQuadData::ramified(5, rat(2, 1)).unwrap();
        let p = l_tau_ai_chi_inverse(&ram, &rat(1, 3), &st).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert!(!p.is_rational());
        assert!(p.coeff(0).is_one());
    }
}
