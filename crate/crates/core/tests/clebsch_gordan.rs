use proptest::prelude::*;
use qtensor::cg::{cg_twice, couple};
use qtensor::scalar::QScalar;
use qtensor::suq2::HalfInt;

/// `(j1, m1, j2, m2, j)` in twice-units with `j` in the triangle and `|m1+m2| <= j`.
fn labels() -> impl Strategy<Value = (i32, i32, i32, i32, i32)> {
    (0i32..=4, 0i32..=4)
        .prop_flat_map(|(j1, j2)| {
            let js = ((j1 - j2).abs()..=j1 + j2).step_by(2).collect::<Vec<_>>();
            (Just(j1), 0..=j1, Just(j2), 0..=j2, prop::sample::select(js))
        })
        .prop_map(|(j1, a, j2, b, j)| (j1, 2 * a - j1, j2, 2 * b - j2, j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflection_symmetry((j1, m1, j2, m2, j) in labels()) {
        let m = m1 + m2;
        prop_assume!(m.abs() <= j);
        prop_assert_eq!(cg_twice(j1, m1, j2, m2, j, m).unwrap(), cg_twice(j2, -m2, j1, -m1, j, -m).unwrap());
    }

    #[test]
    fn swap_inverts_q((j1, m1, j2, m2, j) in labels()) {
        let m = m1 + m2;
        prop_assume!(m.abs() <= j);
        let swapped = cg_twice(j2, m2, j1, m1, j, m).unwrap().invert_q().unwrap();
        let sign = QScalar::sign(((j1 + j2 - j) / 2) as i64);
        prop_assert_eq!(cg_twice(j1, m1, j2, m2, j, m).unwrap(), swapped.mul(&sign));
    }

    #[test]
    fn zero_off_weight((j1, m1, j2, m2, j) in labels()) {
        let m = m1 + m2 + 2;
        prop_assume!(m.abs() <= j);
        prop_assert!(cg_twice(j1, m1, j2, m2, j, m).unwrap().is_zero());
    }

    #[test]
    fn rows_are_orthonormal(j1 in 0i32..=3, j2 in 0i32..=3) {
        let states = couple(HalfInt::from_twice(j1), HalfInt::from_twice(j2)).unwrap();
        prop_assert_eq!(states.len() as i32, (j1 + 1) * (j2 + 1));
        for a in &states {
            for b in &states {
                let mut dot = QScalar::zero();
                for (ma1, ma2, ca) in &a.components {
                    for (mb1, mb2, cb) in &b.components {
                        if (ma1, ma2) == (mb1, mb2) {
                            dot = dot.add(&ca.mul(cb));
                        }
                    }
                }
                let same = a.j == b.j && a.m == b.m;
                prop_assert_eq!(dot, if same { QScalar::one() } else { QScalar::zero() });
            }
        }
    }
}

#[test]
fn parity_invalid_key_is_an_error() {
    assert!(cg_twice(1, 1, 1, 1, 1, 2).is_err());
}

#[test]
fn highest_weight_is_one() {
    for j1 in 0..5 {
        for j2 in 0..5 {
            assert!(cg_twice(j1, j1, j2, j2, j1 + j2, j1 + j2).unwrap().is_one());
        }
    }
}
