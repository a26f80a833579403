use gsp4_zeta::exact::{rat, series_of, Poly, QuadCoeff, RationalFunction};
use gsp4_zeta::local_field::SplittingSymbol;
use gsp4_zeta::local_integral::{check_local_identity, random_scenario};
use gsp4_zeta::rng::seeded;
use proptest::prelude::*;

fn quad(q: u32) -> impl Strategy<Value = QuadCoeff> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(move |(a, b, c, d)| {
        QuadCoeff::new(rat(a, b), rat(c, d), q).unwrap()
    })
}

fn poly(q: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(quad(q), 1..5).prop_map(move |cs| Poly::new(q, cs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in quad(3), y in quad(3), z in quad(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !y.is_zero() {
            prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x);
        }
    }

    #[test]
    fn series_inverts_multiplication(n in poly(2), d in poly(2)) {
        prop_assume!(!d.coeff(0).is_zero());
        let rf = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let s = series_of(&rf, 12).unwrap();
        let back = s.mul(&gsp4_zeta::exact::TruncatedSeries::from_poly(&d, 12));
        prop_assert_eq!(back, gsp4_zeta::exact::TruncatedSeries::from_poly(&n, 12));
    }

    #[test]
    fn local_identity(seed in any::<u64>(), sym in 0usize..3, q in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let mut rng = seeded(seed);
        let sc = random_scenario(&mut rng, q, SplittingSymbol::ALL[sym]).unwrap();
        prop_assert!(check_local_identity(&sc, 12).unwrap().passed());
    }
}
