//! Double-exponential quadrature on half-lines for complex integrands.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

const T_MAX: f64 = 5.5;
const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 9;

/// `∫_a^∞ f(x) dx` by the exp-sinh map `x = a + scale·exp(π/2 · sinh t)`.
///
/// `scale` should be of the order of the decay length of `f`. Converges when two
/// successive halvings of the step agree to `tol` relative, or to rounding of `∫|f|`.
pub fn exp_sinh<F>(mut f: F, a: f64, scale: f64, tol: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Complex64,
{
    let mut node = |t: f64| -> Option<(Complex64, f64)> {
        let e = (FRAC_PI_2 * t.sinh()).exp();
        let dx = scale * e;
        if dx == 0.0 || !dx.is_finite() {
            return None;
        }
        let w = dx * FRAC_PI_2 * t.cosh();
        let v = f(a + dx) * w;
        if v.re.is_finite() && v.im.is_finite() {
            Some((v, v.norm()))
        } else {
            None
        }
    };

    let mut h = 1.0;
    let (mut sum, mut l1) = node(0.0).ok_or_else(|| Error::NoConvergence("integrand not finite at the centre".into()))?;
    for dir in [1.0, -1.0] {
        let (s, n) = sweep(&mut node, dir, 1.0, 1.0, sum.norm())?;
        sum += s;
        l1 += n;
    }
    let mut prev = sum * h;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut add = Complex64::new(0.0, 0.0);
        let mut add_l1 = 0.0;
        for dir in [1.0, -1.0] {
            let (s, n) = sweep(&mut node, dir, h, 2.0 * h, sum.norm())?;
            add += s;
            add_l1 += n;
        }
        sum += add;
        l1 += add_l1;
        let cur = sum * h;
        let diff = (cur - prev).norm();
        if level >= MIN_LEVEL && (diff <= tol * cur.norm() || diff <= 1e-14 * l1 * h) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NoConvergence(format!("exp-sinh did not reach tolerance {tol:e}")))
}

/// Sums `node(dir·t)` for `t = start, start+step, …` until terms become negligible.
fn sweep<N>(node: &mut N, dir: f64, start: f64, step: f64, reference: f64) -> Result<(Complex64, f64)>
where
    N: FnMut(f64) -> Option<(Complex64, f64)>,
{
    let mut s = Complex64::new(0.0, 0.0);
    let mut n = 0.0;
    let mut t = start;
    while t <= T_MAX {
        match node(dir * t) {
            Some((v, m)) => {
                s += v;
                n += m;
                if t > 1.0 && m <= 1e-18 * (reference + n) {
                    break;
                }
            }
            None if t > 1.0 => break,
            None => return Err(Error::NoConvergence(format!("integrand not finite at t = {}", dir * t))),
        }
        t += step;
    }
    Ok((s, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exponential_moments() {
        let v = exp_sinh(|x| Complex64::new((-x).exp() * x * x, 0.0), 0.0, 1.0, 1e-12).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12);
        let v = exp_sinh(|x| Complex64::new(x.powf(-0.5) * (-x).exp(), 0.0), 0.0, 1.0, 1e-12).unwrap();
        assert!((v.re - PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn algebraic_tail() {
        let v = exp_sinh(|u| Complex64::new(u.powi(-3), 0.0), 1.0, 1.0, 1e-12).unwrap();
        assert!((v.re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn oscillating_complex() {
        let v = exp_sinh(|x| Complex64::new(0.0, x).exp() * (-x).exp(), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - Complex64::new(0.5, 0.5)).norm() < 1e-12);
    }
}
