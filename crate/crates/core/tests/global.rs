use std::f64::consts::PI;

use gsp4_zeta::global::{
    global_z, kappa_n_exact, special_value_ratio, theorem3_constant, theorem3_consistency, v_n, GlobalInput, PrimeEntry,
    TauLocal,
};
use gsp4_zeta::exact::rat;
use gsp4_zeta::local_field::{splitting_symbol, SplittingSymbol};
use gsp4_zeta::input::parse_input;
use num_complex::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn trivial_entry(p: u64, disc: u64) -> PrimeEntry {
    let symbol = splitting_symbol(-(disc as i64), p).unwrap();
    PrimeEntry {
        p,
        symbol,
        lambda_pi_l: (symbol != SplittingSymbol::Inert).then_some(c(1.0)),
        satake: [c(1.0); 3],
        tau: TauLocal::Unramified { alpha: [c(1.0); 2] },
    }
}

fn trivial_input(l: u32, pmax: u64) -> GlobalInput {
    GlobalInput {
        l,
        l1: i64::from(l),
        disc: 3,
        level: 1,
        lambda_classvals: vec![c(1.0)],
        fourier_classvals: vec![c(1.0)],
        a1: c((4.0 * PI).powf(-f64::from(l) / 2.0)),
        ir: c(f64::from(l) - 1.0),
        primes: (2..=pmax).filter(|&p| (2..p).all(|d| p % d != 0)).map(|p| trivial_entry(p, 3)).collect(),
        petersson_phi: Some(2.0),
        petersson_psi: Some(0.5),
    }
    .validated()
    .unwrap()
}

#[test]
fn hand_checked_product() {
    let gi = trivial_input(12, 2);
    let z = global_z(&gi, c(0.5), 2).unwrap();
    let want = (31.0f64 / 32.0).powi(2) * (15.0 / 16.0) * (4.0f64 / 3.0).powi(8);
    assert!((z.euler.value - c(want)).norm() < 1e-14 * want);
    assert_eq!(z.kappa_n, c(1.0));
    assert!((z.value - z.kappa_infinity * want).norm() <= 1e-14 * z.value.norm());
}

#[test]
fn truncation_tail() {
    let gi = trivial_input(12, 60);
    let s = c(2.0);
    let a = global_z(&gi, s, 30).unwrap();
    let b = global_z(&gi, s, 60).unwrap();
    assert!(a.euler.tail_bound.is_finite());
    assert!((b.euler.value / a.euler.value - 1.0).norm() <= a.euler.tail_bound);
    let low = global_z(&gi, c(0.0), 30).unwrap();
    assert!(!low.euler.warnings.is_empty());
    assert!(global_z(&gi, s, 61).is_err());
}

#[test]
fn special_value_trivial() {
    let gi = trivial_input(12, 2);
    let sv = special_value_ratio(&gi, 2).unwrap();
    let l_value = (32.0f64 / 31.0).powi(8);
    let want = l_value / (PI.powi(52) * 2.0 * 0.5);
    assert!((sv.ratio - c(want)).norm() < 1e-13 * want);
    let mut missing = gi.clone();
    missing.petersson_psi = None;
    assert!(special_value_ratio(&missing, 2).is_err());
}

#[test]
fn constants() {
    // 3^(-21/2) 2^(-42) 19!, mpmath
    let c12 = theorem3_constant(&trivial_input(12, 2)).unwrap();
    assert!((c12.re - 0.27043420978643447).abs() < 1e-14 * 0.27043420978643447);
    for l in [12, 20, 40] {
        assert!(theorem3_consistency(&trivial_input(l, 2)).unwrap().passed(1e-9));
    }
    assert_eq!(kappa_n_exact(&[(2, SplittingSymbol::Inert)], 3).unwrap(), rat(16, 225));
    assert_eq!(v_n(2).unwrap(), rat(1, 45));
    assert_eq!(v_n(6).unwrap(), rat(1, 45 * 640));
}

#[test]
fn input_file_round_trip() {
    let text = r#"{"global_input": {"l": 12, "D": 3, "N": 2, "lambda_classvals": ["1"],
        "fourier_classvals": [[1, "1/2"]], "a1": 1e-8, "ir": "11", "s": ["3/2", [1, 0.25]],
        "primes": [{"p": 2, "satake": {"u0": "1/2", "u1": 3, "u2": 3}, "tau": {"steinberg": -1}}]}}"#;
    let f = parse_input(text).unwrap();
    let gi = f.global_input.unwrap();
    assert_eq!(gi.level, 2);
    assert_eq!(f.global_s, vec![c(1.5), Complex64::new(1.0, 0.25)]);
    assert!(global_z(&gi, f.global_s[0], 2).is_ok());
    assert!(global_z(&gi, f.global_s[0], 3).is_err());
}
