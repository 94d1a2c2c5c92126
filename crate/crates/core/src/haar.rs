//! The Haar functional of O(SU_q(2)).
//!
//! For each degree `n` and torus weight `(m', m)` there is exactly one PBW
//! monomial, and it is the top-degree term of `pi^{n/2}_{m'm}`. Expanding an
//! element in matrix coefficients is therefore a triangular elimination from
//! the highest degree down; `h` is the coefficient of `pi^0_{00} = 1`.

use std::collections::BTreeMap;

use crate::cg::{cg, CgKey};
use crate::error::{Error, Result};
use crate::scalar::QScalar;
use crate::suq2::{dfun, f_inv_trace, AlgElem, HalfInt, PbwMonomial};

/// Default bound on the spins used in expansions.
pub const DEFAULT_JMAX: HalfInt = HalfInt::from_twice(6);

/// Label `(j, m', m)` of a matrix coefficient.
pub type CoeffLabel = (HalfInt, HalfInt, HalfInt);

/// Expands `x` as `sum c_{j m' m} pi^j_{m'm}` over `j <= jmax`.
pub fn to_matrix_coeff_basis(x: &AlgElem, jmax: HalfInt) -> Result<BTreeMap<CoeffLabel, QScalar>> {
    let too_high: Vec<String> = x.keys().filter(|m| m.degree() as i32 > jmax.twice()).map(|m| m.to_string()).collect();
    if !too_high.is_empty() {
        return Err(Error::SpanExceeded { jmax: jmax.to_string(), monomials: too_high.join(", ") });
    }
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rest.keys().max_by_key(|m| (m.degree(), **m)).copied() {
        let (wp, w) = top.weight_twice();
        let j = HalfInt::from_twice(top.degree() as i32);
        let (mp, m) = (HalfInt::from_twice(wp), HalfInt::from_twice(w));
        let d = dfun(j, mp, m)?;
        let lead = d.coeff(&top);
        let c = rest.coeff(&top).div(&lead)?;
        rest.add_scaled(&d, &c.neg());
        debug_assert!(rest.coeff(&top).is_zero());
        out.insert((j, mp, m), c);
    }
    Ok(out)
}

/// `h(x)`, the coefficient of the unit in the matrix-coefficient expansion.
pub fn haar(x: &AlgElem) -> Result<QScalar> {
    haar_with(x, DEFAULT_JMAX)
}

pub fn haar_with(x: &AlgElem, jmax: HalfInt) -> Result<QScalar> {
    let expansion = to_matrix_coeff_basis(x, jmax)?;
    Ok(expansion.get(&(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO)).cloned().unwrap_or_else(QScalar::zero))
}

/// Closed form of `h((pi^r_{u l})* pi^q_{t k} pi^p_{s j})`:
/// `(q k; p j | r l)(q t; p s | r u) q^{2(r-u)} / tr((F^r)^{-1})`.
#[allow(clippy::too_many_arguments)]
pub fn haar_triple(
    r: HalfInt,
    u: HalfInt,
    l: HalfInt,
    q: HalfInt,
    t: HalfInt,
    k: HalfInt,
    p: HalfInt,
    s: HalfInt,
    j: HalfInt,
) -> Result<QScalar> {
    for (lbl, a) in [(r, u), (r, l), (q, t), (q, k), (p, s), (p, j)] {
        if a.index_in(lbl).is_none() {
            return Err(Error::Domain(format!("magnetic label {} invalid for {}", a, lbl)));
        }
    }
    let c1 = cg(CgKey::new(q, k, p, j, r, l))?;
    if c1.is_zero() {
        return Ok(QScalar::zero());
    }
    let c2 = cg(CgKey::new(q, t, p, s, r, u))?;
    let weight = QScalar::q_pow(2 * r.int_diff(u).expect("checked above"));
    c1.mul(&c2).mul(&weight).div(&f_inv_trace(r))
}

/// `true` if `x` only involves monomials of degree at most `2 jmax`.
pub fn within_span(x: &AlgElem, jmax: HalfInt) -> bool {
    x.keys().all(|m: &PbwMonomial| m.degree() as i32 <= jmax.twice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfAlgebra;
    use crate::scalar::q_int;
    use crate::suq2::{parse_alg, SuQ2};

    #[test]
    fn expansion_examples() {
        let one = to_matrix_coeff_basis(&SuQ2.one(), DEFAULT_JMAX).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[&(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO)], QScalar::one());
        let x = to_matrix_coeff_basis(&parse_alg("X").unwrap(), DEFAULT_JMAX).unwrap();
        assert_eq!(x[&(HalfInt::HALF, HalfInt::HALF, HalfInt::HALF)], QScalar::one());
        let uv = to_matrix_coeff_basis(&parse_alg("U*V").unwrap(), DEFAULT_JMAX).unwrap();
        let inv2 = QScalar::one().div(&q_int(2)).unwrap();
        assert_eq!(uv[&(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO)], inv2.neg());
        assert_eq!(uv[&(HalfInt::ONE, HalfInt::ZERO, HalfInt::ZERO)], inv2);
        assert_eq!(uv.len(), 2);
    }

    #[test]
    fn haar_examples() {
        assert_eq!(haar(&SuQ2.one()).unwrap(), QScalar::one());
        assert!(haar(&parse_alg("X").unwrap()).unwrap().is_zero());
        assert_eq!(haar(&parse_alg("U*V").unwrap()).unwrap(), QScalar::one().div(&q_int(2)).unwrap().neg());
    }

    #[test]
    fn span_exceeded() {
        let x = parse_alg("X^3").unwrap();
        assert!(matches!(to_matrix_coeff_basis(&x, HalfInt::ONE), Err(Error::SpanExceeded { .. })));
    }

    #[test]
    fn triple_with_trivial_labels() {
        let z = HalfInt::ZERO;
        assert_eq!(haar_triple(z, z, z, z, z, z, z, z, z).unwrap(), QScalar::one());
        let h = HalfInt::HALF;
        // pi^1 does not occur in pi^0 (x) pi^{1/2}
        assert!(haar_triple(HalfInt::ONE, z, z, z, z, z, h, h, h).unwrap().is_zero());
    }
}
