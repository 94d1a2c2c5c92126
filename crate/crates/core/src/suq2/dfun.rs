//! Matrix coefficients of the spin-`j` corepresentations and the F-matrices.

use std::collections::HashMap;

use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::{AlgElem, HalfInt, PbwMonomial, SuQ2};
use crate::corep::Corep;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::scalar::{q_factorial, QScalar};

static DFUN_CACHE: Lazy<Mutex<HashMap<(i32, i32, i32), AlgElem>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn check_indices(j: HalfInt, mp: HalfInt, m: HalfInt) -> Result<()> {
    if j.twice() < 0 || mp.index_in(j).is_none() || m.index_in(j).is_none() {
        return Err(Error::Domain(format!("invalid d-function indices j={}, m'={}, m={}", j, mp, m)));
    }
    Ok(())
}

fn fact(n: i32) -> QScalar {
    q_factorial(n as i64).expect("nonnegative by construction")
}

/// The matrix coefficient `pi^j_{m' m}` as a normal-ordered element:
///
/// q^{(m'-m)(2j-m'+m)/2} ([j+m']! [j-m']! [j+m]! [j-m]!)^{1/2}
///   * sum_a q^{a(2j-m'+m-a)} X^{j+m-a} U^{m'-m+a} V^a Y^{j-m'-a}
///           / ([a]! [j+m-a]! [m'-m+a]! [j-m'-a]!)
pub fn dfun(j: HalfInt, mp: HalfInt, m: HalfInt) -> Result<AlgElem> {
    check_indices(j, mp, m)?;
    let key = (j.twice(), mp.twice(), m.twice());
    if let Some(hit) = DFUN_CACHE.lock().get(&key) {
        return Ok(hit.clone());
    }
    let jt = j.twice();
    let jpm = (jt + mp.twice()) / 2; // j + m'
    let jmm_p = (jt - mp.twice()) / 2; // j - m'
    let jm = (jt + m.twice()) / 2; // j + m
    let jmm = (jt - m.twice()) / 2; // j - m
    let delta = (mp.twice() - m.twice()) / 2; // m' - m
    let alg = SuQ2;
    let mut sum = AlgElem::zero();
    for a in 0.max(-delta)..=jm.min(jmm_p) {
        let denom = fact(a).mul(&fact(jm - a)).mul(&fact(delta + a)).mul(&fact(jmm_p - a));
        let coeff = QScalar::t_pow(2 * a * (jt - delta - a)).div(&denom)?;
        let left = PbwMonomial { a: (jm - a) as u32, b: (delta + a) as u32, c: a as u32, d: 0 };
        let right = PbwMonomial { a: 0, b: 0, c: 0, d: (jmm_p - a) as u32 };
        sum.add_scaled(&alg.mul_basis(&left, &right), &coeff);
    }
    let radical = fact(jpm).mul(&fact(jmm_p)).mul(&fact(jm)).mul(&fact(jmm)).sqrt()?;
    let prefactor = QScalar::t_pow(delta * (jt - delta)).mul(&radical);
    let out = sum.scale(&prefactor);
    DFUN_CACHE.lock().insert(key, out.clone());
    Ok(out)
}

/// The spin-`j` corepresentation with rows and columns ordered `m = j, ..., -j`.
pub fn standard_corep(j: HalfInt) -> Corep<PbwMonomial> {
    let coeffs = HalfInt::magnetic(j)
        .map(|mp| HalfInt::magnetic(j).map(|m| dfun(j, mp, m).expect("valid indices")).collect())
        .collect();
    Corep::new(format!("pi^{}", j), coeffs).expect("square array").with_spin(j)
}

/// Diagonal of `F^j`: `F_{mm} = q^{-2(j-m)}`, ordered `m = j, ..., -j`.
pub fn f_matrix(j: HalfInt) -> Vec<QScalar> {
    (0..j.dim() as i32).map(|i| QScalar::q_pow(-2 * i)).collect()
}

/// `tr((F^j)^{-1}) = sum_m q^{2(j-m)}`.
pub fn f_inv_trace(j: HalfInt) -> QScalar {
    (0..j.dim() as i32).fold(QScalar::zero(), |acc, i| acc.add(&QScalar::q_pow(2 * i)))
}

/// Convenience: `dfun` from twice-values.
#[cfg(test)]
pub(crate) fn dfun_twice(j: i32, mp: i32, m: i32) -> AlgElem {
    dfun(HalfInt::from_twice(j), HalfInt::from_twice(mp), HalfInt::from_twice(m)).expect("valid indices")
}
