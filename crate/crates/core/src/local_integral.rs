//! The local zeta integral at a prime where `τ` is a twisted Steinberg
//! representation: the direct sum over double cosets, term by term, and the
//! closed form as a quotient of local L-factors.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::cosets::{volume_v1, volume_v2};
use crate::error::{invalid, Error, Result};
use crate::exact::{rat, rational_pow, series_of, Poly, QuadCoeff, Rational, RationalFunction, TruncatedSeries};
use crate::local_field::{LocalQuadData, SplittingSymbol};
use crate::satake::{check_compatible, chi_pi_f_from, l8_inverse, l_tau_ai_chi_inverse, SatakeParams, SteinbergData};
use crate::sugano::{bessel_values, sugano_polys_unchecked};

/// All data at one prime: Λ, the Satake parameters of `π` and `Ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioData {
    local: LocalQuadData,
    sat: SatakeParams,
    st: SteinbergData,
    chi_pi_f: Rational,
}

impl ScenarioData {
    pub fn new(local: LocalQuadData, sat: SatakeParams, st: SteinbergData) -> Result<Self> {
        check_compatible(&local, &sat)?;
        let chi_pi_f = chi_pi_f_from(&sat, &st);
        Ok(ScenarioData { local, sat, st, chi_pi_f })
    }

    pub fn local(&self) -> &LocalQuadData {
        &self.local
    }

    pub fn sat(&self) -> &SatakeParams {
        &self.sat
    }

    pub fn st(&self) -> &SteinbergData {
        &self.st
    }

    pub fn chi_pi_f(&self) -> &Rational {
        &self.chi_pi_f
    }

    pub fn q(&self) -> u32 {
        self.local.q()
    }

    /// Multiplies one parameter by `factor`, skipping every consistency check.
    pub fn corrupted(&self, target: Corruption, factor: &Rational) -> Result<Self> {
        if factor.is_zero() || factor.is_one() {
            return Err(invalid("corruption factor must differ from 0 and 1"));
        }
        let mut out = self.clone();
        match target {
            Corruption::LambdaPiF => {
                out.local = self.local.with_lambda_unchecked(Some(self.local.lambda_pi_f() * factor), None, None);
            }
            Corruption::LambdaPiL => {
                let v = self.local.lambda_pi_l().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
                out.local = self.local.with_lambda_unchecked(None, Some(v * factor), None);
            }
            Corruption::LambdaPiFOverPiL => {
                let v = self
                    .local
                    .lambda_pi_f_over_pi_l()
                    .ok_or_else(|| Error::Missing("Λ(ϖ_F ϖ_L^-1)".into()))?;
                out.local = self.local.with_lambda_unchecked(None, None, Some(v * factor));
            }
            Corruption::Gamma(i) => {
                let g = self.sat.gamma().get(i).ok_or_else(|| invalid("γ index must be 0..4"))?;
                out.sat = self.sat.with_gamma_unchecked(i, g * factor);
            }
            Corruption::Omega => {
                out.st = SteinbergData::new(self.st.omega() * factor)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ScenarioData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::exact::fmt_rational as r;
        let l = &self.local;
        write!(f, "q={} symbol={} Λ(ϖ_F)={}", l.q(), l.symbol(), r(l.lambda_pi_f()))?;
        if let Some(v) = l.lambda_pi_l() {
            write!(f, " Λ(ϖ_L)={}", r(v))?;
        }
        if let Some(v) = l.lambda_pi_f_over_pi_l() {
            write!(f, " Λ(ϖ_F/ϖ_L)={}", r(v))?;
        }
        let g = self.sat.gamma();
        write!(
            f,
            " γ=({}, {}, {}, {}) Ω={}",
            r(&g[0]),
            r(&g[1]),
            r(&g[2]),
            r(&g[3]),
            r(self.st.omega())
        )
    }
}

/// A single parameter to perturb in a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    LambdaPiF,
    LambdaPiL,
    LambdaPiFOverPiL,
    Gamma(usize),
    Omega,
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corruption::LambdaPiF => write!(f, "Λ(ϖ_F)"),
            Corruption::LambdaPiL => write!(f, "Λ(ϖ_L)"),
            Corruption::LambdaPiFOverPiL => write!(f, "Λ(ϖ_F/ϖ_L)"),
            Corruption::Gamma(i) => write!(f, "γ{}", i + 1),
            Corruption::Omega => write!(f, "Ω"),
        }
    }
}

/// `W^(0)(diag(ϖ^l, 1)) = Ω(ϖ)^l q^(−l)` for `l ≥ 0`, zero otherwise.
pub fn steinberg_whittaker_diag(l: i64, st: &SteinbergData, q: u32) -> Rational {
    if l < 0 {
        return Rational::zero();
    }
    rational_pow(st.omega(), l) * rational_pow(&rat(q as i64, 1), -l)
}

/// The Atkin–Lehner translate: `−Ω(ϖ)^l q^(−l−1)`.
pub fn steinberg_whittaker_al(l: u32, st: &SteinbergData, q: u32) -> Rational {
    -(rational_pow(st.omega(), l as i64) * rational_pow(&rat(q as i64, 1), -(l as i64) - 1))
}

/// `q(q−1)/((q+1)(q⁴−1)) · (1 − symbol/q)`.
pub fn prefactor(local: &LocalQuadData) -> Rational {
    let q = rat(local.q() as i64, 1);
    let one = Rational::one();
    &q * (&q - &one) / ((&q + &one) * (rational_pow(&q, 4) - &one)) * local.symbol().local_density(local.q())
}

/// Weight of the unknown `B(h(l,m))`, `m > 0`, in the coefficient of `t^(2m+l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MWeight {
    pub l: u32,
    pub m: u32,
    pub weight: QuadCoeff,
}

/// The direct evaluation, split by `m`.
#[derive(Clone, Debug)]
pub struct DirectSeries {
    /// Sum of all terms.
    pub total: TruncatedSeries,
    /// Terms with `m = 0`.
    pub m_zero: TruncatedSeries,
    /// Terms with `m > 0`, each unknown `B(h(l,m))` set to 1; zero because every weight is.
    pub m_positive: TruncatedSeries,
    pub m_positive_weights: Vec<MWeight>,
}

/// Sums the double coset contributions through `t^n`.
///
/// The term `(l, m)` carries `B(h(l,m))`, the volume of its cosets, the
/// Steinberg Whittaker values and the factor `|ϖ^(2m+l)|^{3(s+1/2)}` times
/// `ω_π^{−(2m+l)} Ω^{−2(2m+l)} Ω^{2m}` (for `m = 0` only the diagonal cosets meet the support).
pub fn z_series_direct(sc: &ScenarioData, n: usize) -> Result<DirectSeries> {
    let q = sc.q();
    let local = &sc.local;
    let b = bessel_values(&sugano_polys_unchecked(local, &sc.sat), n)?;
    let omega_pi_inv = sc.sat.omega_pi().recip();
    let big_omega = sc.st.omega();
    let q_minus_1 = rat(q as i64 - 1, 1);
    // (q−1) q^{−3k/2} ω_π^{−k} Ω^{−2k}
    let common: Vec<QuadCoeff> = (0..=n as i64)
        .map(|k| {
            let r = &q_minus_1 * rational_pow(&omega_pi_inv, k) * rational_pow(big_omega, -2 * k);
            QuadCoeff::q_half_pow(q, -3 * k).scale(&r)
        })
        .collect();

    let mut m_zero = TruncatedSeries::zero(q, n);
    for l in 0..=n {
        let r = steinberg_whittaker_diag(l as i64, &sc.st, q) * volume_v1(local, l as u32, 0);
        let term = &(b.coeff(l) * &common[l]).scale(&r);
        m_zero.add_term(l, term);
    }

    let mut m_positive = TruncatedSeries::zero(q, n);
    let mut weights = Vec::new();
    let w_diag: Vec<Rational> = (0..=n as i64).map(|l| steinberg_whittaker_diag(l, &sc.st, q)).collect();
    let w_al: Vec<Rational> = (0..=n as u32).map(|l| steinberg_whittaker_al(l, &sc.st, q)).collect();
    for m in 1..=(n / 2) as u32 {
        let omega_2m = rational_pow(big_omega, 2 * m as i64);
        for l in 0..=(n as u32 - 2 * m) {
            let k = (2 * m + l) as i64;
            let inner = &w_diag[l as usize] * volume_v1(local, l, m) + &w_al[l as usize] * volume_v2(local, l, m)?;
            let weight = common[k as usize].scale(&(inner * &omega_2m));
            m_positive.add_term(k as usize, &weight);
            weights.push(MWeight { l, m, weight });
        }
    }
    Ok(DirectSeries { total: m_zero.add(&m_positive), m_zero, m_positive, m_positive_weights: weights })
}

/// `prefactor · L(3s+1/2, π̃×τ̃) / L(3s+1, τ×AI(Λ)×χ)`, reduced.
pub fn z_closed_form(sc: &ScenarioData) -> Result<RationalFunction> {
    let q = sc.q();
    let num = l_tau_ai_chi_inverse(&sc.local, &sc.chi_pi_f, &sc.st)?
        .scale(&QuadCoeff::from_rational(prefactor(&sc.local), q));
    let den = l8_inverse(&sc.sat, &sc.st, q);
    Ok(RationalFunction::new(num, den)?.reduced())
}

/// The closed form kept as `prefactor · ∏ numerator / ∏ denominator` with repeated factors grouped.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub prefactor: Rational,
    pub numerator: Vec<(Poly, u32)>,
    pub denominator: Vec<(Poly, u32)>,
}

fn grouped(factors: Vec<Poly>) -> Vec<(Poly, u32)> {
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for f in factors {
        match out.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 += 1,
            None => out.push((f, 1)),
        }
    }
    out
}

impl ClosedForm {
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        let q = self.numerator.first().or(self.denominator.first()).map_or(2, |(p, _)| p.q());
        let expand = |fs: &[(Poly, u32)]| -> Poly {
            fs.iter()
                .flat_map(|(p, k)| std::iter::repeat_n(p, *k as usize))
                .fold(Poly::one(q), |acc, p| &acc * p)
        };
        let num = expand(&self.numerator).scale(&QuadCoeff::from_rational(self.prefactor.clone(), q));
        RationalFunction::new(num, expand(&self.denominator))
    }
}

fn fmt_factor(p: &Poly) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        let body = match (c.as_rational(), i) {
            (Some(r), 0) => crate::exact::fmt_rational(r),
            (Some(r), _) => {
                let (neg, mag) = if *r < Rational::zero() { (true, -r) } else { (false, r.clone()) };
                let coef = if mag.is_one() { var.clone() } else { format!("{}*{var}", crate::exact::fmt_rational(&mag)) };
                if neg { format!("-{coef}") } else { coef }
            }
            (None, _) => format!("({c})*{var}"),
        };
        if out.is_empty() {
            out = body;
        } else if let Some(rest) = body.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {body}");
        }
    }
    out
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |fs: &[(Poly, u32)]| -> String {
            fs.iter()
                .map(|(p, k)| if *k == 1 { format!("({})", fmt_factor(p)) } else { format!("({})^{k}", fmt_factor(p)) })
                .collect()
        };
        write!(f, "({})", crate::exact::fmt_rational(&self.prefactor))?;
        write!(f, "{}", part(&self.numerator))?;
        if !self.denominator.is_empty() {
            write!(f, "/{}", part(&self.denominator))?;
        }
        Ok(())
    }
}

/// [`z_closed_form`] before multiplying out.
pub fn z_closed_form_factored(sc: &ScenarioData) -> Result<ClosedForm> {
    let q = sc.q();
    let num = l_tau_ai_chi_inverse(&sc.local, &sc.chi_pi_f, &sc.st)?;
    let numerator = if num.degree() == Some(2) && !num.coeff(1).is_zero() {
        let (l, r) = match (sc.local.lambda_pi_l(), sc.local.lambda_pi_f_over_pi_l()) {
            (Some(l), Some(r)) => (l, r),
            _ => return Err(Error::Missing("split Λ values".into())),
        };
        let c = QuadCoeff::from_rational(&sc.chi_pi_f * sc.st.omega(), q) * QuadCoeff::q_half_pow(q, -3);
        vec![Poly::one_minus(c.scale(l)), Poly::one_minus(c.scale(r))]
    } else {
        vec![num]
    };
    let denominator = sc
        .sat
        .gamma()
        .iter()
        .map(|g| Poly::one_minus(QuadCoeff::from_rational((g * sc.st.omega() * rat(q as i64, 1)).recip(), q)))
        .collect();
    Ok(ClosedForm { prefactor: prefactor(&sc.local), numerator: grouped(numerator), denominator: grouped(denominator) })
}

/// Result of comparing the two sides.
#[derive(Clone, Debug)]
pub struct LocalCheck {
    pub order: usize,
    /// `(index, direct, closed)` of the first disagreement.
    pub mismatch: Option<(usize, QuadCoeff, QuadCoeff)>,
    /// True when the `m > 0` part vanished identically.
    pub cancellation: bool,
}

impl LocalCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.cancellation
    }
}

/// Compares `direct` (built from `direct_sc`) with the expansion of the closed form of `closed_sc`.
pub fn compare_sides(direct_sc: &ScenarioData, closed_sc: &ScenarioData, n: usize) -> Result<LocalCheck> {
    let direct = z_series_direct(direct_sc, n)?;
    let closed = series_of(&z_closed_form(closed_sc)?, n)?;
    let mismatch = direct
        .total
        .first_difference(&closed)
        .map(|i| (i, direct.total.coeff(i).clone(), closed.coeff(i).clone()));
    Ok(LocalCheck { order: n, mismatch, cancellation: direct.m_positive.is_zero() })
}

pub fn check_local_identity(sc: &ScenarioData, n: usize) -> Result<LocalCheck> {
    compare_sides(sc, sc, n)
}

/// True iff the direct series equals the expansion of the closed form through `t^n`.
pub fn verify_theorem1(sc: &ScenarioData, n: usize) -> Result<bool> {
    Ok(check_local_identity(sc, n)?.passed())
}

/// `L(3s+1/2, π̃×τ̃) / (ζ_p(6s+1) · L(3s+1, τ×AI(Λ)×χ))` for `τ` unramified with Satake pair `alpha`.
///
/// Here `χ(ϖ) = ω_π(ϖ)⁻¹ (α₁α₂)⁻¹` and `ζ_p(6s+1) = (1 − t²/q)⁻¹`.
pub fn unramified_local_factor(local: &LocalQuadData, sat: &SatakeParams, alpha: [&Rational; 2]) -> Result<RationalFunction> {
    check_compatible(local, sat)?;
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(invalid("Satake pair of τ must be nonzero"));
    }
    let q = local.q();
    let qc = |r: Rational| QuadCoeff::from_rational(r, q);
    let chi = (sat.omega_pi() * alpha[0] * alpha[1]).recip();
    let half = QuadCoeff::q_half_pow(q, -1);
    let mut den = Poly::one(q);
    for g in sat.gamma() {
        for a in alpha {
            den = &den * &Poly::one_minus(&qc((g * a).recip()) * &half);
        }
    }
    let mut num = Poly::new(q, vec![QuadCoeff::one(q), QuadCoeff::zero(q), -qc(rat(1, q as i64))]);
    let q_m1 = qc(rat(1, q as i64));
    for a in alpha {
        let factor = match local.symbol() {
            SplittingSymbol::Inert => {
                let c = qc(a * a * &chi * &chi * local.lambda_pi_f()) * (&q_m1 * &q_m1);
                Poly::new(q, vec![QuadCoeff::one(q), QuadCoeff::zero(q), -c])
            }
            SplittingSymbol::Ramified => {
                let l = local.lambda_pi_l().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
                Poly::one_minus(qc(a * &chi * l) * q_m1.clone())
            }
            SplittingSymbol::Split => {
                let l = local.lambda_pi_l().ok_or_else(|| Error::Missing("Λ(ϖ_L)".into()))?;
                let r = local
                    .lambda_pi_f_over_pi_l()
                    .ok_or_else(|| Error::Missing("Λ(ϖ_F ϖ_L^-1)".into()))?;
                &Poly::one_minus(qc(a * &chi * l) * q_m1.clone()) * &Poly::one_minus(qc(a * &chi * r) * q_m1.clone())
            }
        };
        num = &num * &factor;
    }
    RationalFunction::new(num, den)
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = loop {
        let n = rng.gen_range(-6i64..=6);
        if n != 0 {
            break n;
        }
    };
    rat(n, rng.gen_range(1i64..=4))
}

/// A random valid scenario with small nonzero rational parameters.
///
/// The compatibility `Λ(ϖ_F) = ω_π` is met by solving for the last free parameter.
pub fn random_scenario<R: Rng + ?Sized>(rng: &mut R, q: u32, symbol: SplittingSymbol) -> Result<ScenarioData> {
    let u0 = random_nonzero(rng);
    let u1 = random_nonzero(rng);
    let (sat, local) = match symbol {
        SplittingSymbol::Ramified => {
            let l = random_nonzero(rng);
            let u2 = &l * &l / (&u1 * &u0 * &u0);
            (SatakeParams::new(u0, u1, u2)?, LocalQuadData::ramified(q, l)?)
        }
        SplittingSymbol::Inert => {
            let sat = SatakeParams::new(u0, u1, random_nonzero(rng))?;
            let local = LocalQuadData::inert(q, sat.omega_pi().clone())?;
            (sat, local)
        }
        SplittingSymbol::Split => {
            let sat = SatakeParams::new(u0, u1, random_nonzero(rng))?;
            let l = random_nonzero(rng);
            let r = sat.omega_pi() / &l;
            (sat, LocalQuadData::split(q, l, r)?)
        }
    };
    ScenarioData::new(local, sat, SteinbergData::new(random_nonzero(rng))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_inert(q: u32) -> ScenarioData {
        ScenarioData::new(
            LocalQuadData::inert(q, rat(1, 1)).unwrap(),
            SatakeParams::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap(),
            SteinbergData::new(rat(1, 1)).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn whittaker_values() {
        let st = SteinbergData::new(rat(-1, 1)).unwrap();
        let one = SteinbergData::new(rat(1, 1)).unwrap();
        assert_eq!(steinberg_whittaker_diag(0, &st, 3), rat(1, 1));
        assert_eq!(steinberg_whittaker_diag(2, &st, 3), rat(1, 9));
        assert_eq!(steinberg_whittaker_diag(-1, &st, 3), rat(0, 1));
        assert_eq!(steinberg_whittaker_al(0, &one, 2), rat(-1, 2));
        assert_eq!(steinberg_whittaker_al(1, &st, 3), rat(1, 9));
    }

    #[test]
    fn trivial_closed_form() {
        let sc = trivial_inert(2);
        let z = z_closed_form(&sc).unwrap();
        let lin = Poly::from_rationals(2, &[rat(1, 1), rat(-1, 2)]);
        let den = &(&lin * &lin) * &(&lin * &lin);
        let num = Poly::from_rationals(2, &[rat(1, 15), rat(0, 1), rat(-1, 120)]);
        assert_eq!(z, RationalFunction::new(num, den).unwrap());
        assert_eq!(z.eval(&QuadCoeff::zero(2)).unwrap(), QuadCoeff::from_rational(rat(1, 15), 2));
    }

    #[test]
    fn factored_display() {
        let cf = z_closed_form_factored(&trivial_inert(2)).unwrap();
        assert_eq!(cf.to_string(), "(1/15)(1 - 1/8*t^2)/(1 - 1/2*t)^4");
        assert_eq!(cf.to_rational_function().unwrap(), z_closed_form(&trivial_inert(2)).unwrap());
        let mut rng = crate::rng::seeded(3);
        for sym in SplittingSymbol::ALL {
            let sc = random_scenario(&mut rng, 5, sym).unwrap();
            let cf = z_closed_form_factored(&sc).unwrap();
            assert_eq!(cf.to_rational_function().unwrap(), z_closed_form(&sc).unwrap());
        }
    }

    #[test]
    fn direct_constant_term() {
        let d = z_series_direct(&trivial_inert(2), 4).unwrap();
        assert_eq!(d.total.coeff(0), &QuadCoeff::from_rational(rat(1, 15), 2));
        assert!(d.m_positive.is_zero());
        assert!(d.m_positive_weights.iter().all(|w| w.weight.is_zero()));
    }

    #[test]
    fn trivial_identity() {
        for q in [2, 3, 5] {
            assert!(verify_theorem1(&trivial_inert(q), 25).unwrap());
        }
    }

    #[test]
    fn random_battery_small() {
        let mut rng = crate::rng::seeded(7);
        for sym in SplittingSymbol::ALL {
            for q in [2, 3, 5] {
                for _ in 0..3 {
                    let sc = random_scenario(&mut rng, q, sym).unwrap();
                    let chk = check_local_identity(&sc, 25).unwrap();
                    assert!(chk.passed(), "{sc}: {:?}", chk.mismatch);
                }
            }
        }
    }

    #[test]
    fn corruption_detected() {
        let mut rng = crate::rng::seeded(11);
        let sc = random_scenario(&mut rng, 3, SplittingSymbol::Split).unwrap();
        let targets = [
            Corruption::LambdaPiF,
            Corruption::LambdaPiL,
            Corruption::LambdaPiFOverPiL,
            Corruption::Gamma(0),
            Corruption::Gamma(1),
            Corruption::Gamma(2),
            Corruption::Gamma(3),
            Corruption::Omega,
        ];
        for t in targets {
            let bad = sc.corrupted(t, &rat(2, 1)).unwrap();
            let chk = compare_sides(&bad, &sc, 25).unwrap();
            assert!(chk.mismatch.is_some(), "{t} not detected");
        }
    }

    #[test]
    fn unramified_trivial_inert() {
        let local = LocalQuadData::inert(2, rat(1, 1)).unwrap();
        let sat = SatakeParams::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap();
        let one = rat(1, 1);
        let f = unramified_local_factor(&local, &sat, [&one, &one]).unwrap();
        let quarter = Poly::from_rationals(2, &[rat(1, 1), rat(0, 1), rat(-1, 4)]);
        let zeta = Poly::from_rationals(2, &[rat(1, 1), rat(0, 1), rat(-1, 2)]);
        let lin = Poly::one_minus(QuadCoeff::q_half_pow(2, -1));
        let mut den = Poly::one(2);
        for _ in 0..8 {
            den = &den * &lin;
        }
        let expect = RationalFunction::new(&(&quarter * &quarter) * &zeta, den).unwrap();
        assert_eq!(f, expect);
        assert!(f.eval(&QuadCoeff::zero(2)).unwrap().is_one());
    }
}
