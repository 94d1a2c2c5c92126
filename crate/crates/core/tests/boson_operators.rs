use qtensor::fock::{collapse_lemma, verify_boson_ito, FockState, Variant};
use qtensor::suq2::HalfInt;

#[test]
fn each_variant_is_a_tensor_operator_of_its_own_kind_only() {
    let jmax = HalfInt::from_twice(3);
    for v in Variant::ALL {
        let own = verify_boson_ito(v, v.expected_kind(), jmax).unwrap();
        assert!(own.iter().all(|c| c.passed), "{}: {own:?}", v.name());
        let cross = verify_boson_ito(v, v.expected_kind().other(), jmax).unwrap();
        assert!(cross.iter().any(|c| !c.passed), "{} also passes the other kind", v.name());
    }
}

#[test]
fn variant_names_parse_back() {
    for v in Variant::ALL {
        assert_eq!(v.name().parse::<Variant>().unwrap(), v);
    }
}

#[test]
fn spin_labels_round_trip() {
    for n1 in 0..4 {
        for n2 in 0..4 {
            let s = FockState::new(n1, n2);
            let (j, m) = s.spin();
            assert_eq!(FockState::from_spin(j, m).unwrap(), s);
            assert_eq!(s.total(), n1 + n2);
        }
    }
}

#[test]
fn collapse_lemma_holds() {
    for t in 0..=4 {
        assert!(collapse_lemma(HalfInt::from_twice(t)).unwrap().passed);
    }
}
