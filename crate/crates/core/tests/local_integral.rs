use gsp4_zeta::exact::{rat, series_of, QuadCoeff, Rational};
use gsp4_zeta::local_field::{LocalQuadData, SplittingSymbol};
use gsp4_zeta::local_integral::{
    check_local_identity, compare_sides, random_scenario, z_closed_form, z_closed_form_factored, z_series_direct, Corruption,
    ScenarioData,
};
use gsp4_zeta::rng::seeded;
use gsp4_zeta::satake::{SatakeParams, SteinbergData};

fn big(s: &str) -> Rational {
    gsp4_zeta::exact::parse_rational(s).unwrap()
}

fn quad(q: u32, a: &str, b: &str) -> QuadCoeff {
    QuadCoeff::new(big(a), big(b), q).unwrap()
}

fn scenario(local: LocalQuadData, u: [Rational; 3], omega: Rational) -> ScenarioData {
    let [u0, u1, u2] = u;
    ScenarioData::new(local, SatakeParams::new(u0, u1, u2).unwrap(), SteinbergData::new(omega).unwrap()).unwrap()
}

fn split_q3() -> ScenarioData {
    let u = [rat(1, 2), rat(3, 1), rat(-2, 5)];
    let w = &u[0] * &u[0] * &u[1] * &u[2];
    scenario(LocalQuadData::split(3, rat(2, 1), w / rat(2, 1)).unwrap(), u, rat(-1, 1))
}

fn ramified_q2() -> ScenarioData {
    scenario(LocalQuadData::ramified(2, rat(3, 2)).unwrap(), [rat(1, 2), rat(3, 1), rat(3, 1)], rat(-1, 1))
}

fn inert_q5() -> ScenarioData {
    let u = [rat(2, 3), rat(-1, 4), rat(5, 1)];
    let w = &u[0] * &u[0] * &u[1] * &u[2];
    scenario(LocalQuadData::inert(5, w).unwrap(), u, rat(1, 1))
}

fn check_frozen(sc: &ScenarioData, frozen: &[(usize, QuadCoeff)]) {
    let direct = z_series_direct(sc, 25).unwrap();
    let closed = series_of(&z_closed_form(sc).unwrap(), 25).unwrap();
    for (k, want) in frozen {
        assert_eq!(direct.total.coeff(*k), want, "direct t^{k}");
        assert_eq!(closed.coeff(*k), want, "closed t^{k}");
    }
}

#[test]
fn frozen_split_q3() {
    check_frozen(
        &split_q3(),
        &[
            (0, quad(3, "1/80", "0")),
            (1, quad(3, "1/60", "-37/4320")),
            (2, quad(3, "23/720", "-37/3240")),
            (3, quad(3, "25/486", "-8029/349920")),
            (7, quad(3, "642887/1594323", "-398742229/2295825120")),
            (
                25,
                quad(
                    3,
                    "19009107783978207516798805681/4785986584612350591801660",
                    "-588840269082369756299569736857/344591034092089242609719520",
                ),
            ),
        ],
    );
}

#[test]
fn frozen_ramified_q2() {
    check_frozen(
        &ramified_q2(),
        &[
            (0, quad(2, "2/45", "0")),
            (1, quad(2, "-32/405", "1/135")),
            (2, quad(2, "356/3645", "-16/1215")),
            (3, quad(2, "-3488/32805", "178/10935")),
            (7, quad(2, "-24184256/215233605", "1340836/71744535")),
            (
                25,
                quad(
                    2,
                    "-3634358562655688541966944/32305409446133366494661205",
                    "201908809032826164630253/10768469815377788831553735",
                ),
            ),
        ],
    );
}

#[test]
fn frozen_inert_q5() {
    check_frozen(
        &inert_q5(),
        &[
            (0, quad(5, "1/156", "0")),
            (1, quad(5, "-9/1300", "0")),
            (2, quad(5, "1161/130000", "0")),
            (3, quad(5, "-17253/1625000", "0")),
            (7, quad(5, "-112195258569/5078125000000", "0")),
            (
                25,
                quad(
                    5,
                    "-45578715730522212868213447062478201762651509/77486038208007812500000000000000000000000000",
                    "0",
                ),
            ),
        ],
    );
}

#[test]
fn frozen_trivial_inert() {
    let sc = scenario(LocalQuadData::inert(2, rat(1, 1)).unwrap(), [rat(1, 1), rat(1, 1), rat(1, 1)], rat(1, 1));
    check_frozen(
        &sc,
        &[
            (0, quad(2, "1/15", "0")),
            (1, quad(2, "2/15", "0")),
            (2, quad(2, "19/120", "0")),
            (5, quad(2, "23/240", "0")),
            (25, quad(2, "247/62914560", "0")),
        ],
    );
    assert_eq!(z_closed_form_factored(&sc).unwrap().to_string(), "(1/15)(1 - 1/8*t^2)/(1 - 1/2*t)^4");
}

#[test]
fn positive_m_weights_vanish() {
    let d = z_series_direct(&split_q3(), 20).unwrap();
    assert!(!d.m_positive_weights.is_empty());
    assert!(d.m_positive_weights.iter().all(|w| w.weight.is_zero()));
    assert!(d.m_positive.is_zero());
}

#[test]
fn incompatible_scenario_rejected() {
    let local = LocalQuadData::inert(3, rat(7, 1)).unwrap();
    let sat = SatakeParams::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap();
    assert!(ScenarioData::new(local, sat, SteinbergData::new(rat(1, 1)).unwrap()).is_err());
}

#[test]
fn every_symbol_random() {
    let mut rng = seeded(42);
    for symbol in SplittingSymbol::ALL {
        for q in [2, 3, 5, 7] {
            let sc = random_scenario(&mut rng, q, symbol).unwrap();
            assert!(check_local_identity(&sc, 16).unwrap().passed(), "{sc}");
        }
    }
}

#[test]
fn corruption_reports_first_coefficient() {
    let good = inert_q5();
    let bad = good.corrupted(Corruption::Gamma(2), &rat(3, 1)).unwrap();
    let chk = compare_sides(&bad, &good, 25).unwrap();
    let (k, direct, closed) = chk.mismatch.expect("detected");
    assert_ne!(direct, closed);
    assert!(k <= 1, "first difference at t^{k}");
    assert!(good.corrupted(Corruption::LambdaPiL, &rat(2, 1)).is_err());
    assert!(good.corrupted(Corruption::Omega, &rat(1, 1)).is_err());
}
