//! Random scalars for property checks.

use rand::Rng;

use super::poly::{LaurentPoly, Rat};
use super::qscalar::{q_int, QScalar};
use super::ratfn::RationalFn;

/// A Laurent polynomial in `t` with up to `terms` terms, exponents in
/// `[-4, 4]` and small integer coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, terms: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..rng.gen_range(0..=terms)).map(|_| {
        let c = rng.gen_range(-3i64..=3);
        (rng.gen_range(-4..=4), Rat::from_integer(c.into()))
    }))
}

/// A denominator with positive coefficients, hence no zero at `q > 0`.
fn random_positive_poly<R: Rng>(rng: &mut R) -> LaurentPoly {
    LaurentPoly::from_terms((0..rng.gen_range(1..=3)).map(|_| {
        let c = rng.gen_range(1i64..=3);
        (rng.gen_range(-3..=3), Rat::from_integer(c.into()))
    }))
}

pub fn random_ratfn<R: Rng>(rng: &mut R) -> RationalFn {
    let num = random_poly(rng, 3);
    if rng.gen_bool(0.5) {
        return RationalFn::from_poly(num);
    }
    RationalFn::new(num, random_positive_poly(rng)).expect("nonzero denominator")
}

/// A sum of at most two terms `r * sqrt(s)` with `s` drawn from
/// `1, 2, 3, [2], [3], [2][3]`.
pub fn random_scalar<R: Rng>(rng: &mut R) -> QScalar {
    let radicands = [
        QScalar::one(),
        QScalar::from_int(2),
        QScalar::from_int(3),
        q_int(2),
        q_int(3),
        q_int(2).mul(&q_int(3)),
    ];
    let mut acc = QScalar::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let root = radicands[rng.gen_range(0..radicands.len())].sqrt().expect("positive radicand");
        acc = acc.add(&QScalar::from_ratfn(random_ratfn(rng)).mul(&root));
    }
    acc
}

/// A rational `q` in `[1/4, 4]`, away from `1`.
pub fn random_q<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let num = rng.gen_range(1i64..=16);
        let den = rng.gen_range(1i64..=16);
        let q = Rat::new(num.into(), den.into());
        if q != Rat::from_integer(1.into()) && q >= Rat::new(1.into(), 4.into()) && q <= Rat::from_integer(4.into()) {
            return q;
        }
    }
}
