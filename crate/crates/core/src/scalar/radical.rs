//! Square-free radicands and square-root extraction.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::poly::{LaurentPoly, Rat};
use super::ratfn::RationalFn;
use crate::error::{Error, Result};

/// A square-free polynomial with integer coefficients, positive leading
/// coefficient and square-free integer content. The lowest exponent is zero,
/// except that a single factor `t` is kept when an odd power of `t` was
/// extracted (`sqrt(t) = q^{1/4}` has no other home).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Radicand(LaurentPoly);

impl Radicand {
    pub fn one() -> Self {
        Radicand(LaurentPoly::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    /// `self * other = g^2 * s`; returns `(g, s)`.
    pub fn mul(&self, other: &Radicand) -> (LaurentPoly, Radicand) {
        if self.is_one() {
            return (LaurentPoly::one(), other.clone());
        }
        if other.is_one() {
            return (LaurentPoly::one(), self.clone());
        }
        let key = if self <= other { (self.clone(), other.clone()) } else { (other.clone(), self.clone()) };
        if let Some(hit) = PRODUCT_CACHE.lock().get(&key) {
            return hit.clone();
        }
        let result = self.mul_uncached(other);
        PRODUCT_CACHE.lock().insert(key, result.clone());
        result
    }

    fn mul_uncached(&self, other: &Radicand) -> (LaurentPoly, Radicand) {
        let (c1, p1) = self.0.primitive_part();
        let (c2, p2) = other.0.primitive_part();
        let c1 = c1.to_integer();
        let c2 = c2.to_integer();
        let gc = c1.gcd(&c2);
        let content = (&c1 / &gc) * (&c2 / &gc);
        // t factors: both radicands hold at most one power of t
        let t_common = p1.low().min(p2.low());
        let p1s = p1.shift(-p1.low());
        let p2s = p2.shift(-p2.low());
        let gp = LaurentPoly::gcd(&p1s, &p2s);
        let (_, gp_prim) = gp.primitive_part();
        let q1 = p1s.exact_div(&gp_prim);
        let q2 = p2s.exact_div(&gp_prim);
        let t_rest = p1.low() + p2.low() - 2 * t_common;
        let s = (&q1 * &q2).shift(t_rest).scale(&Rat::from_integer(content));
        let g = gp_prim.shift(t_common).scale(&Rat::from_integer(gc));
        (g, Radicand(s))
    }

    /// Substitutes `t -> t^{-1}`: returns `(c, s)` with `sqrt(self(1/t)) = c * sqrt(s)`.
    pub fn invert_t(&self) -> Result<(RationalFn, Radicand)> {
        sqrt_ratfn(&RationalFn::from_poly(self.0.invert_t()))
    }
}

impl PartialOrd for Radicand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Radicand {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

static PRODUCT_CACHE: Lazy<Mutex<HashMap<(Radicand, Radicand), (LaurentPoly, Radicand)>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Splits a positive integer as `s^2 * f` with `f` square-free.
pub fn integer_squarefree(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = rest.cbrt() + BigInt::one();
    while p <= limit && !rest.is_one() {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { BigInt::one() } else { BigInt::from(2u32) };
    }
    // what remains has no prime factor below the cube root: it is 1, a prime,
    // a product of two distinct primes, or a prime square
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            square *= r;
        } else {
            free *= rest;
        }
    }
    (square, free)
}

/// `sqrt(r)` for a rational function that is positive for large `t`.
/// Returns `(c, s)` with `sqrt(r) = c * sqrt(s)`.
pub fn sqrt_ratfn(r: &RationalFn) -> Result<(RationalFn, Radicand)> {
    if r.is_zero() {
        return Ok((RationalFn::zero(), Radicand::one()));
    }
    // sqrt(N/D) = sqrt(N*D)/D
    let prod = r.num() * r.den();
    let k = prod.low();
    let body = prod.shift(-k);
    let lc = body.leading_coeff();
    if lc.is_negative() {
        return Err(Error::UnsupportedSqrt(format!("argument {} is negative for large q", r)));
    }
    let parts = body.squarefree_decomposition();
    let mut square = LaurentPoly::one();
    let mut free = LaurentPoly::one();
    for (i, f) in parts.iter().enumerate() {
        let mult = (i + 1) as u32;
        if mult >= 2 {
            square = &square * &f.pow(mult / 2);
        }
        if mult % 2 == 1 {
            free = &free * f;
        }
    }
    // body = lc * square^2 * free with `square`, `free` monic
    let (fc, fprim) = free.primitive_part();
    let constant = &lc * &fc;
    // sqrt(a/b) = sqrt(a*b)/b
    let ab = constant.numer() * constant.denom();
    let (s_int, f_int) = integer_squarefree(&ab);
    let coeff_poly = square.shift(k.div_euclid(2)).scale(&Rat::new(s_int, constant.denom().clone()));
    let mut radicand = fprim.scale(&Rat::from_integer(f_int));
    if k.rem_euclid(2) == 1 {
        radicand = radicand.shift(1);
    }
    let coeff = RationalFn::from_poly(coeff_poly).mul(&RationalFn::new(LaurentPoly::one(), r.den().clone())?);
    Ok((coeff, Radicand(radicand)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::rat;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn integer_squarefree_parts() {
        let (s, f) = integer_squarefree(&BigInt::from(72));
        assert_eq!((s, f), (BigInt::from(6), BigInt::from(2)));
        let (s, f) = integer_squarefree(&BigInt::from(49 * 13));
        assert_eq!((s, f), (BigInt::from(7), BigInt::from(13)));
        let (s, f) = integer_squarefree(&BigInt::from(1));
        assert_eq!((s, f), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn sqrt_of_perfect_square_has_trivial_radicand() {
        // (t^2 + 1)^2 / t^2
        let sq = &p(&[(0, 1), (2, 1)]) * &p(&[(0, 1), (2, 1)]);
        let r = RationalFn::new(sq, p(&[(2, 1)])).unwrap();
        let (c, s) = sqrt_ratfn(&r).unwrap();
        assert!(s.is_one());
        assert_eq!(c, RationalFn::from_poly(p(&[(-1, 1), (1, 1)])));
    }

    #[test]
    fn sqrt_of_odd_t_power_keeps_one_t() {
        let (c, s) = sqrt_ratfn(&RationalFn::t_pow(3)).unwrap();
        assert_eq!(c, RationalFn::t_pow(1));
        assert_eq!(s.poly(), &p(&[(1, 1)]));
    }

    #[test]
    fn radicand_product_extracts_common_factor() {
        let (_, a) = sqrt_ratfn(&RationalFn::from_poly(p(&[(0, 2), (2, 2)]))).unwrap();
        let (g, s) = a.mul(&a);
        assert!(s.is_one());
        assert_eq!(g, p(&[(0, 2), (2, 2)]));
    }

    #[test]
    fn negative_argument_is_rejected() {
        assert!(sqrt_ratfn(&RationalFn::from_rat(rat(-2))).is_err());
    }
}
