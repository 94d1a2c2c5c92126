use qtensor::ito::{build_ito, check_identifications, is_ito, suq2_setup, triangle, Kind};
use qtensor::suq2::{standard_corep, HalfInt, SuQ2};
use qtensor::wigner::check_wigner_eckart;

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

#[test]
fn built_families_satisfy_their_kind() {
    for kind in [Kind::Ordinary, Kind::Twisted] {
        for (p, q, r) in [(1, 1, 0), (1, 1, 2), (2, 2, 2), (0, 2, 2)] {
            let (pc, rc, fams) = suq2_setup(kind, h(p), h(q), h(r)).unwrap();
            assert_eq!(fams.len(), 1, "{kind:?} {p} {q} {r}");
            for c in is_ito(&SuQ2, &fams[0], &pc, &rc).unwrap() {
                assert!(c.passed, "{kind:?} ({p},{q},{r}) {}: {}", c.name, c.detail);
            }
        }
    }
}

#[test]
fn kinds_disagree_on_nontrivial_spins() {
    let (pc, rc, fams) = suq2_setup(Kind::Ordinary, h(1), h(2), h(1)).unwrap();
    let wrong = fams[0].with_kind(Kind::Twisted);
    assert!(is_ito(&SuQ2, &wrong, &pc, &rc).unwrap().iter().any(|c| !c.passed));
}

#[test]
fn no_family_outside_the_triangle() {
    assert!(!triangle(h(1), h(1), h(4)));
    assert!(build_ito(Kind::Ordinary, h(1), h(1), h(4)).unwrap().is_empty());
    assert!(build_ito(Kind::Twisted, h(0), h(2), h(0)).unwrap().is_empty());
}

#[test]
fn coaction_identifications_hold() {
    let (p, r) = (standard_corep(h(1)), standard_corep(h(2)));
    for c in check_identifications(&SuQ2, &p, &r) {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn built_families_factor_through_one_reduced_element() {
    for kind in [Kind::Ordinary, Kind::Twisted] {
        let fams = build_ito(kind, h(2), h(2), h(2)).unwrap();
        let report = check_wigner_eckart(&fams[0], h(2), h(2), kind).unwrap();
        assert!(report.factorization);
        assert_eq!(report.reduced_elements.len(), 1);
    }
}
