//! Complex Gamma function: Lanczos approximation (g = 7, 9 terms) with reflection.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const G: f64 = 7.0;
const COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// True when `z` is within rounding of a pole `0, −1, −2, …`.
pub fn is_gamma_pole(z: Complex64) -> bool {
    z.re <= 0.5 && z.im.abs() < 1e-13 && (z.re - z.re.round()).abs() < 1e-13
}

/// `ln Γ(z)` for `Re z ≥ 1/2`.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(COEF[0], 0.0);
    for (i, c) in COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `ln Γ(z)` on any branch; only `exp` of it is meaningful off the real axis.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::GammaPole(format!("{z}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

pub fn gamma_fn(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::GammaPole(format!("{z}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        Ok(PI / (s * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// `1/Γ(z)`, which is entire; zero at the poles of `Γ`.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_gamma_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        (PI * z).sin() * ln_gamma_right(1.0 - z).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// `n!` as a float.
pub fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}
