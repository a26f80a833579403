//! Classical Whittaker functions `W_{κ,μ}` and the Mellin transform identity.

use num_complex::Complex64;

use super::gamma::{gamma_fn, rgamma};
use super::quad::exp_sinh;
use crate::error::{Error, Result};

const U_TOL: f64 = 1e-13;
const MAX_SHIFT: u32 = 80;
const MAX_CANCELLATION: f64 = 1e4;

/// A point `(κ, μ, x)` with `x > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WhittakerQuery {
    pub kappa: Complex64,
    pub mu: Complex64,
    pub x: f64,
}

impl WhittakerQuery {
    pub fn new(kappa: Complex64, mu: Complex64, x: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!("x = {x} must be positive")));
        }
        Ok(WhittakerQuery { kappa, mu, x })
    }
}

/// `U(a, b, x)` from `x^(−a)/Γ(a) ∫₀^∞ e^(−s) s^(a−1) (1 + s/x)^(b−a−1) ds`, for `Re a ≥ 1/2`.
fn hyperu_integral(a: Complex64, b: Complex64, x: f64) -> Result<Complex64> {
    let c = b - a - 1.0;
    let scale = (1.0 + (b.re - 2.0).max(0.0)) * x.min(1.0).sqrt();
    let integral = exp_sinh(
        |s| (-s + (a - 1.0) * s.ln() + c * (s / x).ln_1p()).exp(),
        0.0,
        scale,
        U_TOL,
    )?;
    Ok(integral * rgamma(a) * (-a * x.ln()).exp())
}

/// `U(−n, b, x) = (−1)^n Σ_k C(n,k) (b+k)_(n−k) (−x)^k`.
fn hyperu_polynomial(n: u32, b: Complex64, x: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut binom = 1.0;
    for k in 0..=n {
        let mut poch = Complex64::new(1.0, 0.0);
        for j in 0..(n - k) {
            poch *= b + f64::from(k + j);
        }
        sum += binom * poch * (-x).powi(k as i32);
        binom = binom * f64::from(n - k) / f64::from(k + 1);
    }
    if n.is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

/// Tricomi's confluent hypergeometric function `U(a, b, x)`, `x > 0`.
///
/// Uses the integral for `Re a ≥ 1/2`, the terminating sum when `a` is a
/// nonpositive integer, and otherwise the recurrence
/// `U(a−1) = (x + 2a − b) U(a) − a(a − b + 1) U(a+1)` downward from the integral.
/// Fails with a precision error when that recurrence cancels too many digits.
pub fn hyperu(a: Complex64, b: Complex64, x: f64) -> Result<Complex64> {
    if a.re >= 0.5 {
        return hyperu_integral(a, b, x);
    }
    if a.im == 0.0 && a.re == a.re.round() && a.re > -(MAX_SHIFT as f64) {
        return Ok(hyperu_polynomial((-a.re) as u32, b, x));
    }
    let shift = (0.5 - a.re).ceil() as u32;
    if shift > MAX_SHIFT {
        return Err(Error::Domain(format!("U({a}, {b}, ·): Re a too negative")));
    }
    let top = a + f64::from(shift);
    let mut hi = hyperu_integral(top + 1.0, b, x)?;
    let mut cur = hyperu_integral(top, b, x)?;
    let mut ak = top;
    let mut largest = cur.norm().max(hi.norm());
    for _ in 0..shift {
        let t1 = (x + 2.0 * ak - b) * cur;
        let t2 = ak * (ak - b + 1.0) * hi;
        largest = largest.max(t1.norm()).max(t2.norm());
        hi = cur;
        cur = t1 - t2;
        ak -= 1.0;
    }
    if largest > MAX_CANCELLATION * cur.norm() {
        return Err(Error::Precision(format!("U({a}, {b}, {x}): recurrence loses too many digits")));
    }
    Ok(cur)
}

/// `W_{κ,μ}(x) e^(extra·x)`, assembled in log form so it stays finite for large `x`.
pub(crate) fn whittaker_scaled(kappa: Complex64, mu: Complex64, x: f64, extra_exp: f64) -> Result<Complex64> {
    let mu = if mu.re < 0.0 { -mu } else { mu };
    let u = hyperu(0.5 + mu - kappa, 1.0 + 2.0 * mu, x)?;
    Ok(u * ((-0.5 + extra_exp) * x + (mu + 0.5) * x.ln()).exp())
}

/// `W_{κ,μ}(x) = e^(−x/2) x^(μ+1/2) U(1/2 + μ − κ, 1 + 2μ, x)`, using `W_{κ,μ} = W_{κ,−μ}`.
pub fn whittaker_w(wq: &WhittakerQuery) -> Result<Complex64> {
    whittaker_scaled(wq.kappa, wq.mu, wq.x, 0.0)
}

/// Numeric and closed values of `∫₀^∞ e^(−x/2) x^(σ−1) W_{κ,μ}(x) dx`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MellinPair {
    pub numeric: Complex64,
    pub closed: Complex64,
}

impl MellinPair {
    /// Relative difference, or absolute when the closed value vanishes.
    pub fn discrepancy(&self) -> f64 {
        let d = (self.numeric - self.closed).norm();
        if self.closed.norm() == 0.0 {
            d
        } else {
            d / self.closed.norm()
        }
    }
}

/// `Γ(σ+μ+1/2) Γ(σ−μ+1/2) / Γ(σ−κ+1)`, zero where the denominator has a pole.
pub fn mellin_closed(kappa: Complex64, mu: Complex64, sigma: Complex64) -> Result<Complex64> {
    Ok(gamma_fn(sigma + mu + 0.5)? * gamma_fn(sigma - mu + 0.5)? * rgamma(sigma - kappa + 1.0))
}

pub fn mellin_whittaker(kappa: Complex64, mu: Complex64, sigma: Complex64) -> Result<MellinPair> {
    if sigma.re <= mu.re.abs() - 0.5 {
        return Err(Error::Domain(format!("Re σ = {} must exceed |Re μ| − 1/2", sigma.re)));
    }
    let mut failure = None;
    let numeric = exp_sinh(
        |x| match whittaker_scaled(kappa, mu, x, -0.5) {
            Ok(w) => w * ((sigma - 1.0) * x.ln()).exp(),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(f64::NAN, 0.0)
            }
        },
        0.0,
        1.0,
        1e-11,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(MellinPair { numeric: numeric?, closed: mellin_closed(kappa, mu, sigma)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// `K₀(y) = ∫₀^∞ e^(−y cosh t) dt`.
    fn bessel_k0(y: f64) -> f64 {
        exp_sinh(|t| c((-y * t.cosh()).exp(), 0.0), 0.0, 1.0, 1e-14).unwrap().re
    }

    #[test]
    fn pure_exponential_case() {
        let w = whittaker_w(&WhittakerQuery::new(c(1.0, 0.0), c(0.5, 0.0), 2.0).unwrap()).unwrap();
        assert!((w - c(2.0 / 1f64.exp(), 0.0)).norm() < 1e-12);
        assert!((w.re - 0.735_758_882_3).abs() < 1e-10);
    }

    #[test]
    fn k0_cross_check() {
        for x in [0.5, 1.0, 4.0] {
            let w = whittaker_w(&WhittakerQuery::new(c(0.0, 0.0), c(0.0, 0.0), x).unwrap()).unwrap();
            let k = (x / std::f64::consts::PI).sqrt() * bessel_k0(x / 2.0);
            assert!((w.re - k).abs() / k < 1e-11, "x={x}");
        }
    }

    #[test]
    fn decays() {
        let mut prev = f64::INFINITY;
        for i in 1..20 {
            let w = whittaker_w(&WhittakerQuery::new(c(0.5, 0.0), c(1.5, 0.0), i as f64).unwrap()).unwrap();
            assert!(w.re < prev);
            prev = w.re;
        }
    }

    #[test]
    fn mellin_basic() {
        let m = mellin_whittaker(c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((m.closed.re - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-9);
        assert!(m.discrepancy() < 1e-8, "{m:?}");
        assert!(mellin_whittaker(c(0.0, 0.0), c(5.5, 0.0), c(5.0, 0.0)).is_err());
    }

    #[test]
    fn rejects_nonpositive_x() {
        assert!(WhittakerQuery::new(c(0.0, 0.0), c(0.0, 0.0), 0.0).is_err());
    }

    /// `(κ, Re μ, Im μ, x, Re W, Im W)` from a 30-digit evaluation.
    #[test]
    fn reference_values() {
        let rows = [
            (0.0, 0.0, 0.0, 0.001, 0.13767790567496882, 0.0),
            (0.0, 0.0, 0.5, 50.0, 1.3752394661814298e-11, -2.5319499608094576e-46),
            (0.0, 0.2, 0.0, 10.0, 0.006609565818567601, 0.0),
            (0.0, -0.3, 0.4, 2.5, 0.2592210706933221, -0.019131253445551978),
            (0.5, 0.0, 0.5, 1.0, 0.5013914435260032, 0.0),
            (0.5, 0.2, 0.0, 0.1, 0.3456378645007388, 0.0),
            (0.5, -0.3, 0.4, 0.001, -0.10470008752551889, -0.01652396506887644),
            (-0.5, 0.0, 0.0, 50.0, 1.9262546539110764e-12, 0.0),
            (-0.5, 5.5, 0.0, 10.0, 0.024601404481767557, 0.0),
            (-0.5, 1.5, 0.0, 2.5, 0.2533575776313912, 0.0),
            (1.0, 0.0, 0.0, 1.0, 0.46727341283302065, 0.0),
            (1.0, 5.5, 0.0, 0.1, 15269919039.377964, 0.0),
            (1.0, 1.5, 0.0, 0.001, 2001.0002497084217, 0.0),
            (1.0, -0.3, 0.4, 50.0, 6.899592124028021e-10, -3.312104219866322e-12),
            (6.0, 0.0, 0.5, 10.0, -169.6417150355501, -1.7834679915467017e-33),
            (6.0, 0.2, 0.0, 2.5, -69.04150379131535, 0.0),
            (6.0, -0.3, 0.4, 1.0, 80.55821647225866, -8.529186807203788),
            (3.5, 0.0, 0.5, 0.1, -1.1836897642685626, -1.8434103367499073e-36),
            (3.5, 0.2, 0.0, 0.001, -0.28663801395518185, 0.0),
            (3.5, 1.5, 0.0, 50.0, 1.0647400206400051e-05, 0.0),
        ];
        for (k, mr, mi, x, wr, wi) in rows {
            let w = whittaker_w(&WhittakerQuery::new(c(k, 0.0), c(mr, mi), x).unwrap()).unwrap();
            let want = c(wr, wi);
            assert!((w - want).norm() / want.norm() < 1e-10, "κ={k} μ={mr}+{mi}i x={x}: {w} vs {want}");
        }
    }
}
