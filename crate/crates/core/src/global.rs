//! Global constants and truncated Euler products for `Z(s, Λ)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::One;

use crate::arch::{c1_coefficient, factorial, gamma_fn, rgamma};
use crate::cosets::vol_k_sharp;
use crate::error::{invalid, Error, Result};
use crate::exact::{is_prime, rat, rational_pow, Rational};
use crate::local_field::{splitting_symbol, SplittingSymbol};

/// Note attached to every Euler-product result.
pub const CONVENTION_NOTE: &str =
    "local factors at p | N use the contragredient shape L(3s+1/2, π̃×τ̃); unramified factors assembled, not restated";

/// Note attached to special value ratios.
pub const ALGEBRAICITY_NOTE: &str = "formula assembly only; algebraicity of the ratio is not certified";

/// Local component of `τ` at one prime.
#[derive(Clone, Debug, PartialEq)]
pub enum TauLocal {
    /// `Ω·St` with `Ω(ϖ) = ±1`.
    Steinberg { omega: f64 },
    /// Unramified with Satake pair `α`.
    Unramified { alpha: [Complex64; 2] },
}

/// Data at one prime `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeEntry {
    pub p: u64,
    pub symbol: SplittingSymbol,
    /// `Λ(ϖ_L)` for ramified and split `p`.
    pub lambda_pi_l: Option<Complex64>,
    /// `(u0, u1, u2)`.
    pub satake: [Complex64; 3],
    pub tau: TauLocal,
}

impl PrimeEntry {
    /// `[u1u2u0, u1u0, u0, u2u0]`.
    pub fn gamma(&self) -> [Complex64; 4] {
        let [u0, u1, u2] = self.satake;
        [u1 * u2 * u0, u1 * u0, u0, u2 * u0]
    }

    pub fn omega_pi(&self) -> Complex64 {
        let g = self.gamma();
        g[0] * g[2]
    }

    /// `(Λ(ϖ_L), Λ(ϖ_F ϖ_L⁻¹))` with the second value forced by `Λ(ϖ_F) = ω_π`.
    fn lambdas(&self) -> Result<(Complex64, Complex64)> {
        let l = self.lambda_pi_l.ok_or_else(|| Error::Missing(format!("Λ(ϖ_L) at p = {}", self.p)))?;
        Ok((l, self.omega_pi() / l))
    }

    fn check(&self, level: u64) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.satake.iter().any(|u| u.norm() == 0.0) {
            return Err(invalid(format!("Satake parameters at p = {} must be nonzero", self.p)));
        }
        let divides = level.is_multiple_of(self.p);
        match (&self.tau, divides) {
            (TauLocal::Steinberg { omega }, true) if *omega == 1.0 || *omega == -1.0 => {}
            (TauLocal::Steinberg { .. }, true) => return Err(invalid(format!("Ω_{}(ϖ) must be ±1", self.p))),
            (TauLocal::Unramified { alpha }, false) if alpha.iter().all(|a| a.norm() > 0.0) => {}
            (TauLocal::Unramified { .. }, false) => {
                return Err(invalid(format!("Satake pair of τ at p = {} must be nonzero", self.p)))
            }
            (_, true) => return Err(invalid(format!("τ must be Steinberg at p = {} dividing N", self.p))),
            (_, false) => return Err(invalid(format!("τ must be unramified at p = {} not dividing N", self.p))),
        }
        match self.symbol {
            SplittingSymbol::Inert => {
                if self.lambda_pi_l.is_some() {
                    return Err(invalid(format!("inert p = {} carries no Λ(ϖ_L)", self.p)));
                }
            }
            SplittingSymbol::Ramified => {
                let (l, _) = self.lambdas()?;
                let w = self.omega_pi();
                if (l * l - w).norm() > 1e-9 * w.norm() {
                    return Err(invalid(format!("ramified p = {}: Λ(ϖ_L)² must equal ω_π(ϖ)", self.p)));
                }
            }
            SplittingSymbol::Split => {
                let (l, _) = self.lambdas()?;
                if l.norm() == 0.0 {
                    return Err(invalid(format!("Λ(ϖ_L) at p = {} must be nonzero", self.p)));
                }
            }
        }
        Ok(())
    }
}

/// Everything the global formulas need.
///
/// `ir` is the product `i·r`; `disc` is `D` with `L = ℚ(√−D)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalInput {
    pub l: u32,
    pub l1: i64,
    pub disc: u64,
    pub level: u64,
    pub lambda_classvals: Vec<Complex64>,
    pub fourier_classvals: Vec<Complex64>,
    pub a1: Complex64,
    pub ir: Complex64,
    pub primes: Vec<PrimeEntry>,
    pub petersson_phi: Option<f64>,
    pub petersson_psi: Option<f64>,
}

/// Prime divisors of a square-free `n`, or an error.
pub fn squarefree_primes(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(invalid("N must be positive"));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Err(invalid(format!("N = {n} is not square-free")));
            }
            out.push(p);
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    Ok(out)
}

impl GlobalInput {
    /// Validates the invariants and sorts the prime table.
    pub fn validated(mut self) -> Result<Self> {
        if self.l < 2 || !self.l.is_multiple_of(2) {
            return Err(invalid(format!("l = {} must be even and at least 2", self.l)));
        }
        if self.disc == 0 || !matches!(self.disc % 4, 0 | 3) {
            return Err(invalid(format!("D = {} must be positive and ≡ 0, 3 mod 4", self.disc)));
        }
        squarefree_primes(self.level)?;
        if self.lambda_classvals.is_empty() || self.lambda_classvals.len() != self.fourier_classvals.len() {
            return Err(invalid("lambda_classvals and fourier_classvals need the same nonzero length"));
        }
        self.primes.sort_by_key(|e| e.p);
        for w in self.primes.windows(2) {
            if w[0].p == w[1].p {
                return Err(invalid(format!("prime {} listed twice", w[0].p)));
            }
        }
        for e in &self.primes {
            let expected = splitting_symbol(-(self.disc as i64), e.p)?;
            if e.symbol != expected {
                return Err(invalid(format!("symbol at p = {} should be {}", e.p, expected.name())));
            }
            e.check(self.level)?;
        }
        Ok(self)
    }

    pub fn level_primes(&self) -> Vec<u64> {
        squarefree_primes(self.level).unwrap_or_default()
    }

    fn entry(&self, p: u64) -> Result<&PrimeEntry> {
        self.primes
            .iter()
            .find(|e| e.p == p)
            .ok_or_else(|| Error::Missing(format!("local data at p = {p}")))
    }

    fn symbol_at(&self, p: u64) -> Result<SplittingSymbol> {
        match self.primes.iter().find(|e| e.p == p) {
            Some(e) => Ok(e.symbol),
            None => splitting_symbol(-(self.disc as i64), p),
        }
    }

    pub fn c1(&self) -> Complex64 {
        c1_coefficient(self.l, self.l1, self.ir, self.a1)
    }
}

/// `a(Λ) = Σ_j Λ(t_j) a(S_j, Φ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ALambda {
    pub value: Complex64,
    /// `|a(Λ)| < 1e−12`.
    pub degenerate: bool,
}

pub fn a_lambda(gi: &GlobalInput) -> ALambda {
    let value = gi
        .lambda_classvals
        .iter()
        .zip(&gi.fourier_classvals)
        .map(|(l, a)| l * a)
        .sum::<Complex64>();
    ALambda { value, degenerate: value.norm() < 1e-12 }
}

fn real_pow(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

/// `½ ā(Λ) c(1) π D^(−3s−l/2) (4π)^(−3s+3/2−l) Γ(3s+l−1 ± ir/2) / Γ(3s+(l+1)/2)`.
pub fn kappa_infinity(gi: &GlobalInput, s: Complex64) -> Result<Complex64> {
    let a = a_lambda(gi).value;
    if a.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let l = f64::from(gi.l);
    let g = 3.0 * s + l - 1.0;
    let gammas = gamma_fn(g + gi.ir / 2.0)? * gamma_fn(g - gi.ir / 2.0)? * rgamma(3.0 * s + (l + 1.0) / 2.0);
    Ok(0.5
        * a.conj()
        * gi.c1()
        * PI
        * real_pow(gi.disc as f64, -3.0 * s - l / 2.0)
        * real_pow(4.0 * PI, -3.0 * s + 1.5 - l)
        * gammas)
}

fn kappa_factor(p: f64, symbol: SplittingSymbol, s: Complex64) -> Complex64 {
    let local = p * (p - 1.0) / ((p + 1.0) * (p.powi(4) - 1.0)) * (1.0 - f64::from(symbol.value()) / p);
    local / (1.0 - real_pow(p, -6.0 * s - 1.0))
}

/// `∏_{p | N} p(p−1)/((p+1)(p⁴−1)) (1 − symbol/p) (1 − p^(−6s−1))⁻¹`.
pub fn kappa_n(gi: &GlobalInput, s: Complex64) -> Result<Complex64> {
    let mut out = Complex64::new(1.0, 0.0);
    for p in gi.level_primes() {
        out *= kappa_factor(p as f64, gi.symbol_at(p)?, s);
    }
    Ok(out)
}

/// `κ_N` exactly at `s = six_s/6`, for the listed primes and symbols.
pub fn kappa_n_exact(factors: &[(u64, SplittingSymbol)], six_s: i64) -> Result<Rational> {
    let mut out = Rational::one();
    for &(p, symbol) in factors {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = rat(p as i64, 1);
        let one = Rational::one();
        let zeta_inv = &one - rational_pow(&q, -six_s - 1);
        if zeta_inv == Rational::from_integer(0.into()) {
            return Err(Error::DivisionByZero);
        }
        out = out * &q * (&q - &one) / ((&q + &one) * (rational_pow(&q, 4) - &one)) * symbol.local_density(p as u32)
            / zeta_inv;
    }
    Ok(out)
}

/// `V_N = ∏_{p | N} 1/((p²−1)(p⁴−1))`.
pub fn v_n(level: u64) -> Result<Rational> {
    Ok(squarefree_primes(level)?
        .into_iter()
        .map(|p| vol_k_sharp(p as u32))
        .fold(Rational::one(), |a, b| a * b))
}

/// `L(3s+1/2, π̃×τ̃)⁻¹ (1 − t²/p) L(3s+1, τ×AI(Λ)×χ)` at `t = p^(−3s)` pieces: `(numerator, denominator)`.
fn local_pieces(e: &PrimeEntry, t: Complex64) -> Result<(Complex64, Complex64)> {
    let p = e.p as f64;
    let one = Complex64::new(1.0, 0.0);
    let gamma = e.gamma();
    let w = e.omega_pi();
    let zeta_inv = one - t * t / p;
    match &e.tau {
        TauLocal::Steinberg { omega } => {
            let den: Complex64 = gamma.iter().map(|g| one - t / (g * omega * p)).product();
            let chi = 1.0 / (w * omega * omega);
            let l4 = match e.symbol {
                SplittingSymbol::Inert => one - chi * t * t / p.powi(3),
                SplittingSymbol::Ramified => one - e.lambdas()?.0 * chi * omega * t * p.powf(-1.5),
                SplittingSymbol::Split => {
                    let (a, b) = e.lambdas()?;
                    (one - a * chi * omega * t * p.powf(-1.5)) * (one - b * chi * omega * t * p.powf(-1.5))
                }
            };
            Ok((l4 * zeta_inv, den))
        }
        TauLocal::Unramified { alpha } => {
            let den: Complex64 = gamma
                .iter()
                .flat_map(|g| alpha.iter().map(move |a| one - t / (g * a * p.sqrt())))
                .product();
            let chi = 1.0 / (w * alpha[0] * alpha[1]);
            let mut l4 = one;
            for a in alpha {
                l4 *= match e.symbol {
                    SplittingSymbol::Inert => one - a * a * chi * chi * w * t * t / (p * p),
                    SplittingSymbol::Ramified => one - a * e.lambdas()?.0 * chi * t / p,
                    SplittingSymbol::Split => {
                        let (x, y) = e.lambdas()?;
                        (one - a * x * chi * t / p) * (one - a * y * chi * t / p)
                    }
                };
            }
            Ok((l4 * zeta_inv, den))
        }
    }
}

/// The Euler factor at `p` of `L(3s+1/2, π̃×τ̃) / (ζ(6s+1) L(3s+1, τ×AI(Λ)×χ))`.
pub fn euler_factor(e: &PrimeEntry, s: Complex64) -> Result<Complex64> {
    let t = real_pow(e.p as f64, -3.0 * s);
    let (num, den) = local_pieces(e, t)?;
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(num / den)
}

/// A truncated Euler product with a crude bound on the omitted tail.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedProduct {
    pub value: Complex64,
    pub pmax: u64,
    /// Bound on `|tail − 1|`; infinite when no bound applies.
    pub tail_bound: f64,
    pub warnings: Vec<String>,
}

/// `exp(16 M P^(1−σ) / ((σ−1)(1 − M P^(−σ)))) − 1` where `M` bounds the normalized parameters.
fn tail_bound(m: f64, pmax: u64, sigma: f64) -> f64 {
    let p = pmax as f64;
    let step = m * p.powf(-sigma);
    if sigma <= 1.0 || step >= 1.0 {
        return f64::INFINITY;
    }
    (16.0 * m * p.powf(1.0 - sigma) / ((sigma - 1.0) * (1.0 - step))).exp_m1()
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

fn parameter_size(gi: &GlobalInput) -> f64 {
    let mut m: f64 = 1.0;
    for e in &gi.primes {
        for g in e.gamma() {
            m = m.max(g.norm()).max(1.0 / g.norm());
            if let TauLocal::Unramified { alpha } = &e.tau {
                for a in alpha {
                    m = m.max((g * a).norm()).max(1.0 / (g * a).norm());
                }
            }
        }
    }
    m
}

/// `κ_∞ κ_N ∏_{p ≤ P} (Euler factor at p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalZ {
    pub value: Complex64,
    pub kappa_infinity: Complex64,
    pub kappa_n: Complex64,
    pub euler: TruncatedProduct,
    pub note: &'static str,
}

pub fn global_z(gi: &GlobalInput, s: Complex64, pmax: u64) -> Result<GlobalZ> {
    let level_primes = gi.level_primes();
    if let Some(&big) = level_primes.last() {
        if pmax < big {
            return Err(invalid(format!("P_max = {pmax} is below the level prime {big}")));
        }
    }
    let mut value = Complex64::new(1.0, 0.0);
    for p in primes_up_to(pmax) {
        value *= euler_factor(gi.entry(p)?, s)?;
    }
    let mut warnings = Vec::new();
    if (6.0 * s + 1.0).re <= 1.0 {
        warnings.push("Re(6s+1) ≤ 1: truncation unreliable".to_string());
    }
    let a = a_lambda(gi);
    if a.degenerate {
        warnings.push("a(Λ) vanishes: κ_∞ degenerates".to_string());
    }
    let tail = tail_bound(parameter_size(gi), pmax, 3.0 * s.re + 0.5);
    let ki = kappa_infinity(gi, s)?;
    let kn = kappa_n(gi, s)?;
    Ok(GlobalZ {
        value: ki * kn * value,
        kappa_infinity: ki,
        kappa_n: kn,
        euler: TruncatedProduct { value, pmax, tail_bound: tail, warnings },
        note: CONVENTION_NOTE,
    })
}

fn require_l(l: u32) -> Result<()> {
    if l < 3 {
        return Err(Error::Domain(format!("(2l−5)! needs l ≥ 3, got l = {l}")));
    }
    Ok(())
}

/// `ā(Λ) D^(−l+3/2) 2^(−4l+6) (2l−5)! ∏_{p | N} p(p−1)/((p+1)(p⁴−1)) (1 − symbol/p)(1 − p^(−l+2))⁻¹`.
pub fn theorem3_constant(gi: &GlobalInput) -> Result<Complex64> {
    require_l(gi.l)?;
    let l = f64::from(gi.l);
    let mut c = a_lambda(gi).value.conj() * (gi.disc as f64).powf(-l + 1.5) * 2f64.powf(-4.0 * l + 6.0)
        * factorial(2 * gi.l - 5);
    for p in gi.level_primes() {
        let pf = p as f64;
        let sym = f64::from(gi.symbol_at(p)?.value());
        c *= pf * (pf - 1.0) / ((pf + 1.0) * (pf.powi(4) - 1.0)) * (1.0 - sym / pf) / (1.0 - pf.powf(-l + 2.0));
    }
    Ok(c)
}

/// Both sides of `κ_∞(l/6 − 1/2) = C_{N=1} π^(4−2l)` at `ir = l−1`, `c(1) = (4π)^(−l/2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub l: u32,
    pub kappa_infinity: Complex64,
    pub constant_side: Complex64,
    pub relative_error: f64,
}

impl ConsistencyReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.relative_error <= tol
    }
}

pub fn theorem3_consistency(gi: &GlobalInput) -> Result<ConsistencyReport> {
    require_l(gi.l)?;
    let l = f64::from(gi.l);
    let mut holo = gi.clone();
    holo.ir = Complex64::new(l - 1.0, 0.0);
    holo.l1 = i64::from(gi.l);
    holo.a1 = Complex64::new((4.0 * PI).powf(-l / 2.0), 0.0);
    holo.level = 1;
    let s = Complex64::new(l / 6.0 - 0.5, 0.0);
    let kappa = kappa_infinity(&holo, s)?;
    let constant_side = theorem3_constant(&holo)? * PI.powf(4.0 - 2.0 * l);
    let relative_error = if constant_side.norm() == 0.0 {
        kappa.norm()
    } else {
        (kappa - constant_side).norm() / constant_side.norm()
    };
    Ok(ConsistencyReport { l: gi.l, kappa_infinity: kappa, constant_side, relative_error })
}

/// `L(l/2 − 1, π × τ) / (π^(5l−8) (Φ,Φ)₂ (Ψ,Ψ)₁)` from a truncated Euler product.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValue {
    pub ratio: Complex64,
    pub l_value: TruncatedProduct,
    pub note: &'static str,
}

/// The Euler factor of `L(w, π × τ)` at `p`.
pub fn degree8_factor(e: &PrimeEntry, w: Complex64) -> Complex64 {
    let x = real_pow(e.p as f64, -w);
    let one = Complex64::new(1.0, 0.0);
    let p = e.p as f64;
    let inv: Complex64 = match &e.tau {
        TauLocal::Steinberg { omega } => e.gamma().iter().map(|g| one - g * omega * x / p.sqrt()).product(),
        TauLocal::Unramified { alpha } => e
            .gamma()
            .iter()
            .flat_map(|g| alpha.iter().map(move |a| one - g * a * x))
            .product(),
    };
    one / inv
}

pub fn special_value_ratio(gi: &GlobalInput, pmax: u64) -> Result<SpecialValue> {
    let (phi, psi) = match (gi.petersson_phi, gi.petersson_psi) {
        (Some(a), Some(b)) if a > 0.0 && b > 0.0 => (a, b),
        (Some(_), Some(_)) => return Err(invalid("Petersson norms must be positive")),
        _ => return Err(Error::Missing("Petersson norms".into())),
    };
    let l = f64::from(gi.l);
    if (gi.ir - Complex64::new(l - 1.0, 0.0)).norm() > 1e-12 {
        return Err(invalid("the special value needs the holomorphic case ir = l − 1"));
    }
    let w = Complex64::new(l / 2.0 - 1.0, 0.0);
    let mut value = Complex64::new(1.0, 0.0);
    for p in primes_up_to(pmax) {
        value *= degree8_factor(gi.entry(p)?, w);
    }
    let tail = tail_bound(parameter_size(gi), pmax, w.re - 0.5);
    let ratio = value / (PI.powf(5.0 * l - 8.0) * phi * psi);
    Ok(SpecialValue { ratio, l_value: TruncatedProduct { value, pmax, tail_bound: tail, warnings: Vec::new() }, note: ALGEBRAICITY_NOTE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one() -> Complex64 {
        c(1.0, 0.0)
    }

    pub(crate) fn simple_input(l: u32, level: u64) -> GlobalInput {
        GlobalInput {
            l,
            l1: i64::from(l),
            disc: 4,
            level,
            lambda_classvals: vec![one()],
            fourier_classvals: vec![one()],
            a1: c((4.0 * PI).powf(-f64::from(l) / 2.0), 0.0),
            ir: c(f64::from(l) - 1.0, 0.0),
            primes: Vec::new(),
            petersson_phi: Some(1.0),
            petersson_psi: Some(1.0),
        }
    }

    #[test]
    fn a_lambda_cases() {
        let mut gi = simple_input(12, 1);
        gi.fourier_classvals = vec![c(5.0, 0.0)];
        assert_eq!(a_lambda(&gi).value, c(5.0, 0.0));
        gi.lambda_classvals = vec![one(), -one()];
        gi.fourier_classvals = vec![c(3.0, 0.0), c(3.0, 0.0)];
        assert!(a_lambda(&gi).degenerate);
    }

    #[test]
    fn kappa_n_values() {
        let gi = simple_input(12, 1);
        assert_eq!(kappa_n(&gi, c(0.5, 0.0)).unwrap(), one());
        let exact = kappa_n_exact(&[(2, SplittingSymbol::Inert)], 3).unwrap();
        assert_eq!(exact, rat(16, 225));
    }

    #[test]
    fn v_n_two() {
        assert_eq!(v_n(2).unwrap(), rat(1, 45));
        assert_eq!(v_n(1).unwrap(), rat(1, 1));
        assert!(v_n(4).is_err());
    }

    #[test]
    fn consistency_l12_l20() {
        for l in [12, 20] {
            let r = theorem3_consistency(&simple_input(l, 1)).unwrap();
            assert!(r.passed(1e-9), "{r:?}");
        }
        assert!(theorem3_consistency(&simple_input(2, 1)).is_err());
    }

    #[test]
    fn theorem3_constant_l12() {
        let c0 = theorem3_constant(&simple_input(12, 1)).unwrap();
        let want = 4f64.powf(-10.5) * 2f64.powi(-42) * factorial(19);
        assert!((c0.re - want).abs() / want < 1e-14);
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_primes(30).unwrap(), vec![2, 3, 5]);
        assert!(squarefree_primes(12).is_err());
        assert!(squarefree_primes(1).unwrap().is_empty());
    }
}
