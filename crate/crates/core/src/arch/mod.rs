//! The archimedean zeta integral `Z_∞(s)`.

mod gamma;
mod quad;
mod whittaker;

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;

pub use gamma::{factorial, gamma_fn, is_gamma_pole, ln_gamma, rgamma};
pub use quad::exp_sinh;
pub use whittaker::{hyperu, mellin_closed, mellin_whittaker, whittaker_w, MellinPair, WhittakerQuery};

use crate::error::{invalid, Error, Result};

/// Parameters of the archimedean integral.
///
/// `ir` is the product `i·r` of the spectral parameter; `q_c` the central exponent, `ω_τ(y) = y^q_c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArchScenario {
    pub l: u32,
    pub q_c: Complex64,
    pub ir: Complex64,
    pub d: u64,
    pub s: Complex64,
    pub a_plus: Complex64,
}

impl ArchScenario {
    pub fn new(l: u32, q_c: Complex64, ir: Complex64, d: u64, s: Complex64, a_plus: Complex64) -> Result<Self> {
        if l < 2 || !l.is_multiple_of(2) {
            return Err(invalid(format!("l = {l} must be even and at least 2")));
        }
        if d == 0 || !matches!(d % 4, 0 | 3) {
            return Err(invalid(format!("D = {d} must be positive and ≡ 0, 3 mod 4")));
        }
        if (6.0 * s + f64::from(l) - q_c).re <= 0.0 {
            return Err(Error::Domain("Re(6s + l − q) must be positive".into()));
        }
        Ok(ArchScenario { l, q_c, ir, d, s, a_plus })
    }

    fn lf(&self) -> f64 {
        f64::from(self.l)
    }

    fn d_pow(&self, e: Complex64) -> Complex64 {
        (e * (self.d as f64).ln()).exp()
    }
}

fn four_pi_pow(e: Complex64) -> Complex64 {
    (e * (4.0 * PI).ln()).exp()
}

/// `(a⁺/2) π D^(−3s−l/2+q/2) (4π)^(−3s+3/2−l+q) Γ(3s+l−1 ± ir/2 − q/2) / Γ(3s + (l+1−q)/2)`.
pub fn z_inf_closed(sc: &ArchScenario) -> Result<Complex64> {
    let (s, q, l) = (sc.s, sc.q_c, sc.lf());
    let g = 3.0 * s + l - 1.0 - q / 2.0;
    let gammas = gamma_fn(g + sc.ir / 2.0)? * gamma_fn(g - sc.ir / 2.0)? * rgamma(3.0 * s + (l + 1.0 - q) / 2.0);
    Ok(sc.a_plus / 2.0 * PI * sc.d_pow(-3.0 * s - l / 2.0 + q / 2.0) * four_pi_pow(-3.0 * s + 1.5 - l + q) * gammas)
}

/// The closed form written for `τ = χ₁ × χ₂` with `χ_i = |·|^(s_i)`.
pub fn z_inf_principal_series(l: u32, d: u64, s: Complex64, s1: Complex64, s2: Complex64, a_plus: Complex64) -> Result<Complex64> {
    let lf = f64::from(l);
    let dl = (d as f64).ln();
    let d_part = ((-3.0 * s - lf / 2.0 + (s1 + s2) / 2.0) * dl).exp();
    let pi_part = four_pi_pow(-3.0 * s + 1.5 - lf + s1 + s2);
    let gammas = gamma_fn(3.0 * s + lf - 1.0 - s1)?
        * gamma_fn(3.0 * s + lf - 1.0 - s2)?
        * rgamma(3.0 * s + (lf + 1.0 - s1 - s2) / 2.0);
    Ok(a_plus / 2.0 * PI * d_part * pi_part * gammas)
}

/// The closed form written for `τ` a discrete series of lowest weight `l1`.
pub fn z_inf_discrete_series(l: u32, l1: u32, q: Complex64, d: u64, s: Complex64, a_plus: Complex64) -> Result<Complex64> {
    let lf = f64::from(l);
    let k = (f64::from(l1) - 1.0) / 2.0;
    let d_part = ((-3.0 * s - lf / 2.0 + q / 2.0) * (d as f64).ln()).exp();
    let gammas = gamma_fn(3.0 * s + lf - 1.0 + k - q / 2.0)?
        * gamma_fn(3.0 * s + lf - 1.0 - k - q / 2.0)?
        * rgamma(3.0 * s + (lf + 1.0 - q) / 2.0);
    Ok(a_plus / 2.0 * PI * d_part * four_pi_pow(-3.0 * s + 1.5 - lf + q) * gammas)
}

const INNER_TOL: f64 = 1e-11;
const OUTER_TOL: f64 = 1e-10;

/// Iterated quadrature of
/// `a⁺ π D^(−3s/2−3/4+q/4) (4π)^(q/2) ∫₁^∞ ∫₀^∞ λ^(3s−3/2+l−q/2) u^(−3s−3/2+q/2)
/// W_{l/2, ir/2}(4πλ√D u) e^(−2πλ√D u) dλ/λ du`.
pub fn z_inf_quadrature(sc: &ArchScenario) -> Result<Complex64> {
    let (s, q, l) = (sc.s, sc.q_c, sc.lf());
    if (6.0 * s + l - q - 1.0).re <= 0.0 {
        return Err(Error::NoConvergence("u-integral needs Re(6s + l − q − 1) > 0".into()));
    }
    let lam_exp = 3.0 * s - 1.5 + l - q / 2.0;
    if (lam_exp + 0.5).re <= (sc.ir / 2.0).re.abs() {
        return Err(Error::NoConvergence("λ-integral needs Re(3s + l − 1 − q/2) > |Re(ir)/2|".into()));
    }
    let u_exp = -3.0 * s - 1.5 + q / 2.0;
    let kappa = Complex64::new(l / 2.0, 0.0);
    let mu = sc.ir / 2.0;
    let c = 4.0 * PI * (sc.d as f64).sqrt();

    let failure = RefCell::new(None);
    let record = |e: Error| {
        failure.borrow_mut().get_or_insert(e);
        Complex64::new(f64::NAN, 0.0)
    };
    let outer = exp_sinh(
        |u| {
            let inner = exp_sinh(
                |lam| match whittaker::whittaker_scaled(kappa, mu, c * lam * u, -0.5) {
                    Ok(w) => w * ((lam_exp - 1.0) * lam.ln()).exp(),
                    Err(e) => record(e),
                },
                0.0,
                1.0 / (c * u),
                INNER_TOL,
            );
            match inner {
                Ok(v) => v * (u_exp * u.ln()).exp(),
                Err(e) => record(e),
            }
        },
        1.0,
        1.0,
        OUTER_TOL,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let pre = sc.a_plus * PI * sc.d_pow(-1.5 * s - 0.75 + q / 4.0) * four_pi_pow(q / 2.0);
    Ok(pre * outer?)
}

/// First Fourier coefficient of the weight-`l` translate of a weight-`l1` Maaß form with `c = a1`.
pub fn c1_coefficient(l: u32, l1: i64, ir: Complex64, a1: Complex64) -> Complex64 {
    if l1 <= i64::from(l) {
        return a1;
    }
    let mut out = a1;
    let mut t = i64::from(l) + 2;
    while t <= l1 {
        let tf = t as f64;
        out *= (ir / 2.0 + 0.5 - tf / 2.0) * (ir / 2.0 - 0.5 + tf / 2.0);
        t += 2;
    }
    out
}

/// `c(n) = b_n (4πn)^(−l/2)` for `n > 0`, `0` for `n < 0`.
pub fn holo_coeffs(b_n: Complex64, n: i64, l: u32) -> Result<Complex64> {
    match n {
        0 => Err(invalid("n must be nonzero")),
        n if n < 0 => Ok(Complex64::new(0.0, 0.0)),
        n => Ok(b_n * (4.0 * PI * n as f64).powf(-f64::from(l) / 2.0)),
    }
}
