use qtensor::classical::{
    built_families, classical_equivalence_check, haar_fun, random_family, s3_irreps, twirl, uniform_average, FiniteGroup,
    FunAlg, MatrixRep,
};
use qtensor::corep::check_comodule;
use qtensor::classical::corep_from_rep;
use qtensor::scalar::QScalar;

#[test]
fn s3_irreps_are_homomorphisms_and_comodules() {
    let g = FiniteGroup::s3();
    let alg = FunAlg::new(g.clone());
    for rep in s3_irreps() {
        assert!(rep.homomorphism_failures(&g).is_empty(), "{}", rep.label);
        assert!(check_comodule(&alg, &corep_from_rep(&alg, &rep).unwrap()).is_empty());
    }
}

#[test]
fn verdicts_coincide_on_built_and_random_families() {
    let g = FiniteGroup::s3();
    let alg = FunAlg::new(g.clone());
    let irreps = s3_irreps();
    for p in &irreps {
        for q in &irreps {
            for r in &irreps {
                let mut families = built_families(&g, p, q, r);
                families.push(random_family(7, q.dim(), r.dim(), p.dim()));
                for ops in families {
                    let [ord, tw, pt] = classical_equivalence_check(&alg, p, q, r, &ops).unwrap();
                    assert_eq!(ord.passed, pt.passed);
                    assert_eq!(tw.passed, pt.passed);
                    assert_eq!(twirl(&g, p, q, r, &ops) == ops, pt.passed);
                }
            }
        }
    }
}

#[test]
fn haar_is_the_uniform_average() {
    let g = FiniteGroup::s3();
    let alg = FunAlg::new(g.clone());
    let values: Vec<QScalar> = (0..6).map(|i| QScalar::from_int(i * i - 3)).collect();
    let f = alg.from_values(&values).unwrap();
    assert_eq!(haar_fun(&alg, &s3_irreps(), &f).unwrap(), uniform_average(&alg, &f));
}

#[test]
fn group_json_round_trip() {
    let g = FiniteGroup::s3();
    let text = serde_json::to_string(&g.to_json()).unwrap();
    let back = FiniteGroup::from_json(&text).unwrap();
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(back.mul(a, b), g.mul(a, b));
        }
    }
}

#[test]
fn invalid_tables_are_rejected() {
    // Row 1 repeats an entry, so this is not a group table.
    assert!(FiniteGroup::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]]).is_err());
}

#[test]
fn regular_rep_contains_every_irrep_dimension_squared() {
    let g = FiniteGroup::s3();
    let reg = MatrixRep::regular(&g);
    let total: usize = s3_irreps().iter().map(|r| r.dim() * r.dim()).sum();
    assert_eq!(reg.dim(), total);
}
