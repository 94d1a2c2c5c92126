use proptest::prelude::*;
use qtensor::scalar::sample::{random_q, random_scalar};
use qtensor::scalar::{eval_numeric, parse_scalar, pretty_scalar, q_int, QScalar};
use qtensor::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn triple(seed: u64) -> (QScalar, QScalar, QScalar) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_ring(seed in any::<u64>()) {
        let (a, b, c) = triple(seed);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&QScalar::one()), a);
    }

    #[test]
    fn evaluation_respects_products(seed in any::<u64>()) {
        let (a, b, _) = triple(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let q = random_q(&mut rng);
        let f = |x: &QScalar| eval_numeric(x, &q, 30).unwrap().to_f64();
        let (fa, fb, fab) = (f(&a), f(&b), f(&a.mul(&b)));
        prop_assert!((fab - fa * fb).abs() <= 1e-9 * (1.0 + fab.abs()), "{} vs {}", fab, fa * fb);
    }

    #[test]
    fn text_round_trips(seed in any::<u64>()) {
        let (a, _, _) = triple(seed);
        prop_assert_eq!(parse_scalar(&pretty_scalar(&a)).unwrap(), a.clone());
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn q_integers_are_bar_invariant(n in -12i64..12) {
        prop_assert_eq!(q_int(n).invert_q().unwrap(), q_int(n));
        prop_assert_eq!(q_int(-n), q_int(n).neg());
    }

    #[test]
    fn single_terms_invert(k in -6i32..6, n in 1i64..6) {
        let x = q_int(n).mul(&QScalar::t_pow(k));
        prop_assert!(x.mul(&x.recip().unwrap()).is_one());
    }
}

#[test]
fn q_integer_values() {
    assert_eq!(q_int(2), parse_scalar("q+q^-1").unwrap());
    assert_eq!(q_int(3), parse_scalar("q^2+1+q^-2").unwrap());
    assert!(q_int(0).is_zero());
}

#[test]
fn multi_term_division_is_refused() {
    let two_terms = parse_scalar("1+sqrt(2)").unwrap();
    assert!(matches!(QScalar::one().div(&two_terms), Err(Error::UnsupportedDivision(_))));
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(QScalar::one().div(&QScalar::zero()).is_err());
}

#[test]
fn numeric_evaluation_matches_hand_value() {
    let x = parse_scalar("sqrt(q+q^-1)").unwrap();
    let v = eval_numeric(&x, &"2".parse().unwrap(), 20).unwrap();
    assert!((v.to_f64() - 2.5f64.sqrt()).abs() < 1e-15);
}
