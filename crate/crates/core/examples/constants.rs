//! The archimedean constant at the centre against the closed constant, for even weights.

use std::f64::consts::PI;

use gsp4_zeta::exact::fmt_rational;
use gsp4_zeta::global::{kappa_n_exact, theorem3_consistency, v_n, GlobalInput};
use gsp4_zeta::local_field::SplittingSymbol;
use num_complex::Complex64;

fn main() -> gsp4_zeta::Result<()> {
    for l in (12..=40).step_by(4) {
        let gi = GlobalInput {
            l,
            l1: i64::from(l),
            disc: 4,
            level: 1,
            lambda_classvals: vec![Complex64::new(1.0, 0.0)],
            fourier_classvals: vec![Complex64::new(1.0, 0.0)],
            a1: Complex64::new((4.0 * PI).powf(-f64::from(l) / 2.0), 0.0),
            ir: Complex64::new(f64::from(l) - 1.0, 0.0),
            primes: Vec::new(),
            petersson_phi: None,
            petersson_psi: None,
        };
        let r = theorem3_consistency(&gi)?;
        println!("l={l}: kappa_inf {:.15e}  constant {:.15e}  rel {:.1e}", r.kappa_infinity.re, r.constant_side.re, r.relative_error);
    }
    for symbol in SplittingSymbol::ALL {
        println!("kappa_N(p=2, {symbol}, s=1/2) = {}", fmt_rational(&kappa_n_exact(&[(2, symbol)], 3)?));
    }
    println!("V_N(6) = {}", fmt_rational(&v_n(6)?));
    Ok(())
}
