use std::f64::consts::PI;

use gsp4_zeta::arch::{
    gamma_fn, hyperu, mellin_whittaker, whittaker_w, z_inf_closed, z_inf_discrete_series, z_inf_principal_series,
    z_inf_quadrature, ArchScenario, WhittakerQuery,
};
use gsp4_zeta::Error;
use num_complex::Complex64;

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

// mpmath at 30 digits
type Row = (u32, Complex64, Complex64, u64, Complex64, Complex64);

const FROZEN: [(Row, Complex64); 3] = [
    (
        (12, c(0.0, 0.0), c(11.0, 0.0), 4, c(1.5, 0.0), c(2.539_456_721_913_702e-7, 0.0)),
        c(1.503_860_112_450_995_2e-12, 0.0),
    ),
    (
        (6, c(0.5, 0.0), c(0.0, 1.2), 7, c(1.0, 0.5), c(1.0, 0.0)),
        c(-1.833_449_807_300_147e-8, 4.483_959_941_670_865e-9),
    ),
    (
        (8, c(0.3, 0.2), c(0.7, 1.1), 8, c(0.8, 0.0), c(0.5, -1.0)),
        c(1.194_946_707_103_701_2e-8, -8.172_925_565_665_957e-9),
    ),
];

#[test]
fn closed_form_frozen() {
    for ((l, q, ir, d, s, a), want) in FROZEN {
        let sc = ArchScenario::new(l, q, ir, d, s, a).unwrap();
        let got = z_inf_closed(&sc).unwrap();
        assert!(rel(got, want) < 1e-12, "{sc:?}: {got} vs {want}");
    }
}

#[test]
fn quadrature_matches_frozen() {
    for ((l, q, ir, d, s, a), want) in FROZEN {
        let sc = ArchScenario::new(l, q, ir, d, s, a).unwrap();
        let got = z_inf_quadrature(&sc).unwrap();
        assert!(rel(got, want) < 1e-9, "{sc:?}: {got} vs {want}");
    }
}

#[test]
fn special_forms_agree() {
    let (l, d, s, a) = (10, 3, c(1.3, 0.2), c(1.0, 0.0));
    let ir = c(0.0, 0.8);
    let sc = ArchScenario::new(l, c(0.0, 0.0), ir, d, s, a).unwrap();
    let principal = z_inf_principal_series(l, d, s, ir / 2.0, -ir / 2.0, a).unwrap();
    assert!(rel(principal, z_inf_closed(&sc).unwrap()) < 1e-13);
    let holo = ArchScenario::new(l, c(0.0, 0.0), c(9.0, 0.0), d, s, a).unwrap();
    let discrete = z_inf_discrete_series(l, 10, c(0.0, 0.0), d, s, a).unwrap();
    assert!(rel(discrete, z_inf_closed(&holo).unwrap()) < 1e-13);
}

#[test]
fn mellin_frozen() {
    let m = mellin_whittaker(c(0.5, 0.0), c(0.0, 0.5), c(2.0, 0.0)).unwrap();
    let want = c(1.177_313_521_790_24, 0.0);
    assert!(rel(m.numeric, want) < 1e-10);
    assert!(rel(m.closed, want) < 1e-12);
}

#[test]
fn whittaker_exact_case() {
    for mu in [0.0, 0.5, 3.0, 5.5] {
        for z in [0.5f64, 2.0, 10.0] {
            let w = whittaker_w(&WhittakerQuery::new(c(mu + 0.5, 0.0), c(mu, 0.0), z).unwrap()).unwrap();
            let want = c((-z / 2.0).exp() * z.powf(mu + 0.5), 0.0);
            assert!(rel(w, want) < 1e-10, "mu={mu} z={z}");
        }
    }
}

#[test]
fn hyperu_polynomial_branch() {
    // U(-2, b, x) = x² - 2(b+1)x + b(b+1)
    let (b, x) = (c(3.5, 0.0), 0.7);
    let want = x * x - 2.0 * (b + 1.0) * x + b * (b + 1.0);
    assert!(rel(hyperu(c(-2.0, 0.0), b, x).unwrap(), want) < 1e-14);
}

#[test]
fn gamma_half() {
    assert!((gamma_fn(c(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-14);
}

#[test]
fn domain_errors() {
    assert!(ArchScenario::new(3, c(0.0, 0.0), c(2.0, 0.0), 4, c(1.0, 0.0), c(1.0, 0.0)).is_err());
    assert!(ArchScenario::new(4, c(0.0, 0.0), c(2.0, 0.0), 5, c(1.0, 0.0), c(1.0, 0.0)).is_err());
    assert!(matches!(
        mellin_whittaker(c(0.0, 0.0), c(5.5, 0.0), c(1.0, 0.0)),
        Err(Error::Domain(_))
    ));
    assert!(WhittakerQuery::new(c(0.0, 0.0), c(0.0, 0.0), 0.0).is_err());
}
