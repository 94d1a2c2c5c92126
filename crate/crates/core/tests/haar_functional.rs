use qtensor::haar::haar;
use qtensor::scalar::{parse_scalar, ratio};
use qtensor::suq2::{dfun, parse_alg, HalfInt};

#[test]
fn unit_has_mass_one() {
    assert!(haar(&parse_alg("1").unwrap()).unwrap().is_one());
}

#[test]
fn nontrivial_coefficients_vanish() {
    for jt in 1..=4 {
        let j = HalfInt::from_twice(jt);
        for a in HalfInt::magnetic(j) {
            for b in HalfInt::magnetic(j) {
                assert!(haar(&dfun(j, a, b).unwrap()).unwrap().is_zero(), "j={j} ({a},{b})");
            }
        }
    }
}

#[test]
fn value_on_uv() {
    let v = haar(&parse_alg("U*V").unwrap()).unwrap();
    assert_eq!(v, parse_scalar("-1/(q+q^-1)").unwrap());
}

#[test]
fn linear() {
    let a = parse_alg("U*V").unwrap();
    let b = parse_alg("X*Y").unwrap();
    let both = parse_alg("U*V + 2*X*Y").unwrap();
    let expect = haar(&a).unwrap().add(&haar(&b).unwrap().scale(&ratio(2, 1)));
    assert_eq!(haar(&both).unwrap(), expect);
}
