//! Clebsch–Gordan coefficients of O(SU_q(2)) and their conjugate-label variants.
//!
//! `cg(j1, m1, j2, m2, j, m)` is the coefficient of `v^{j1}_{m1} (x) v^{j2}_{m2}`
//! in the coupled vector `w^j_m`:
//!
//! Delta(j1,j2,j) q^{[x(j1)+x(j2)-x(j)+2(j1 j2 + j1 m2 - j2 m1)]/2}
//!   * {[j1+m1]![j1-m1]![j2+m2]![j2-m2]![j+m]![j-m]![2j+1]}^{1/2}
//!   * sum_a (-1)^a q^{-a(j1+j2+j+1)}
//!         / ([a]![j1+j2-j-a]![j1-m1-a]![j2+m2-a]![j-j2+m1+a]![j-j1-m2+a]!)
//!
//! with `x(a) = a(a+1)` and `Delta(a,b,c) = {[-a+b+c]![a-b+c]![a+b-c]!/[a+b+c+1]!}^{1/2}`.

use std::collections::HashMap;

use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::scalar::{q_factorial, q_int, QScalar};
use crate::suq2::{dfun, AlgElem, HalfInt, SuQ2};

/// Arguments `(j1 m1; j2 m2 | j m)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CgKey {
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
}

impl CgKey {
    pub fn new(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> Self {
        CgKey { j1, m1, j2, m2, j, m }
    }

    /// Builds a key from twice-values.
    pub fn twice(j1: i32, m1: i32, j2: i32, m2: i32, j: i32, m: i32) -> Self {
        let h = HalfInt::from_twice;
        CgKey::new(h(j1), h(m1), h(j2), h(m2), h(j), h(m))
    }

    fn parity_ok(&self) -> bool {
        [(self.j1, self.m1), (self.j2, self.m2), (self.j, self.m)]
            .iter()
            .all(|(j, m)| j.twice() >= 0 && (j.twice() - m.twice()) % 2 == 0)
    }

    fn selected(&self) -> bool {
        let (j1, j2, j) = (self.j1.twice(), self.j2.twice(), self.j.twice());
        self.m.twice() == self.m1.twice() + self.m2.twice()
            && self.m1.twice().abs() <= j1
            && self.m2.twice().abs() <= j2
            && self.m.twice().abs() <= j
            && (j1 - j2).abs() <= j
            && j <= j1 + j2
            && (j1 + j2 + j) % 2 == 0
    }
}

static CG_CACHE: Lazy<Mutex<HashMap<CgKey, QScalar>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn fact(n: i32) -> QScalar {
    q_factorial(n as i64).expect("nonnegative after selection rules")
}

/// The coefficient `(j1 m1; j2 m2 | j m)`; zero outside the selection rules.
pub fn cg(key: CgKey) -> Result<QScalar> {
    if !key.parity_ok() {
        return Err(Error::Domain(format!("parity-invalid Clebsch-Gordan key {:?}", key)));
    }
    if !key.selected() {
        return Ok(QScalar::zero());
    }
    if let Some(hit) = CG_CACHE.lock().get(&key) {
        return Ok(hit.clone());
    }
    let v = cg_uncached(&key)?;
    CG_CACHE.lock().insert(key, v.clone());
    Ok(v)
}

/// Shorthand for [`cg`] on twice-values.
pub fn cg_twice(j1: i32, m1: i32, j2: i32, m2: i32, j: i32, m: i32) -> Result<QScalar> {
    cg(CgKey::twice(j1, m1, j2, m2, j, m))
}

fn cg_uncached(k: &CgKey) -> Result<QScalar> {
    let (j1, m1, j2, m2, j, m) =
        (k.j1.twice(), k.m1.twice(), k.j2.twice(), k.m2.twice(), k.j.twice(), k.m.twice());
    // all factorial arguments are integers once the selection rules hold
    let h = |x: i32| x / 2;
    let radicand_num = fact(h(-j1 + j2 + j))
        .mul(&fact(h(j1 - j2 + j)))
        .mul(&fact(h(j1 + j2 - j)))
        .mul(&fact(h(j1 + m1)))
        .mul(&fact(h(j1 - m1)))
        .mul(&fact(h(j2 + m2)))
        .mul(&fact(h(j2 - m2)))
        .mul(&fact(h(j + m)))
        .mul(&fact(h(j - m)))
        .mul(&q_int((j + 1) as i64));
    let radical = radicand_num.div(&fact(h(j1 + j2 + j) + 1))?.sqrt()?;
    // exponent of t = q^{1/2}: x(j1) + x(j2) - x(j) + 2(j1 j2 + j1 m2 - j2 m1)
    let x4 = |a: i32| a * (a + 2);
    let e4 = x4(j1) + x4(j2) - x4(j) + 2 * (j1 * j2 + j1 * m2 - j2 * m1);
    debug_assert_eq!(e4 % 4, 0);
    let prefactor = QScalar::t_pow(e4 / 4).mul(&radical);
    let mut sum = QScalar::zero();
    for a in 0.. {
        let args = [a, h(j1 + j2 - j) - a, h(j1 - m1) - a, h(j2 + m2) - a, h(j - j2 + m1) + a, h(j - j1 - m2) + a];
        if args[1] < 0 || args[2] < 0 || args[3] < 0 {
            break;
        }
        if args[4] < 0 || args[5] < 0 {
            continue;
        }
        let den = args.iter().fold(QScalar::one(), |acc, &n| acc.mul(&fact(n)));
        let term = QScalar::sign(a as i64).mul(&QScalar::t_pow(-a * (j1 + j2 + j + 2))).div(&den)?;
        sum = sum.add(&term);
    }
    Ok(prefactor.mul(&sum))
}

/// One coupled vector `w^j_m = sum (m1, m2, c) v^{j1}_{m1} (x) v^{j2}_{m2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoupledState {
    pub j: HalfInt,
    pub m: HalfInt,
    pub components: Vec<(HalfInt, HalfInt, QScalar)>,
}

/// The coupled basis of `pi^{j1} (x) pi^{j2}`, ordered by `j` descending then
/// `m` descending. The inverse expansion uses the same (real, orthogonal)
/// coefficients: `v^{j1}_{m1} (x) v^{j2}_{m2} = sum_{j,m} cg * w^j_m`.
pub fn couple(j1: HalfInt, j2: HalfInt) -> Result<Vec<CoupledState>> {
    let mut out = Vec::new();
    let top = j1.twice() + j2.twice();
    let bottom = (j1.twice() - j2.twice()).abs();
    for jt in (bottom..=top).rev().step_by(2) {
        let j = HalfInt::from_twice(jt);
        for m in HalfInt::magnetic(j) {
            let mut components = Vec::new();
            for m1 in HalfInt::magnetic(j1) {
                let m2 = m - m1;
                if m2.index_in(j2).is_none() {
                    continue;
                }
                let c = cg(CgKey::new(j1, m1, j2, m2, j, m))?;
                if !c.is_zero() {
                    components.push((m1, m2, c));
                }
            }
            out.push(CoupledState { j, m, components });
        }
    }
    Ok(out)
}

/// `sum_j sum_{m',m} cg(j1 m'1 j2 m'2|j m') cg(j1 m1 j2 m2|j m) pi^j_{m'm}`.
pub fn expand_product(
    j1: HalfInt,
    mp1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    mp2: HalfInt,
    m2: HalfInt,
) -> Result<AlgElem> {
    for (j, a) in [(j1, mp1), (j1, m1), (j2, mp2), (j2, m2)] {
        if a.index_in(j).is_none() {
            return Err(Error::Domain(format!("magnetic label {} invalid for j = {}", a, j)));
        }
    }
    let mut out = AlgElem::zero();
    let (mp, m) = (mp1 + mp2, m1 + m2);
    let bottom = (j1.twice() - j2.twice()).abs();
    for jt in (bottom..=j1.twice() + j2.twice()).step_by(2) {
        let j = HalfInt::from_twice(jt);
        if mp.index_in(j).is_none() || m.index_in(j).is_none() {
            continue;
        }
        let c = cg(CgKey::new(j1, mp1, j2, mp2, j, mp))?.mul(&cg(CgKey::new(j1, m1, j2, m2, j, m))?);
        out.add_scaled(&dfun(j, mp, m)?, &c);
    }
    Ok(out)
}

/// `pi^{j1}_{m'1 m1} pi^{j2}_{m'2 m2}` by direct multiplication.
pub fn direct_product(
    j1: HalfInt,
    mp1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    mp2: HalfInt,
    m2: HalfInt,
) -> Result<AlgElem> {
    Ok(SuQ2.mul(&dfun(j1, mp1, m1)?, &dfun(j2, mp2, m2)?))
}

/// Which conjugate corepresentation replaces `pi^p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ConjVariant {
    /// `bar(pi^p)`, coefficients `(pi^p_{jk})*`.
    Bar,
    /// `bar(pi^{p++})`, the conjugate of the doubly contragredient corepresentation.
    BarDoubleDagger,
}

/// Position of the conjugated factor in the tensor product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ConjSlot {
    First,
    Second,
}

/// Clebsch–Gordan coefficient for the reduction of `bar(pi^p) (x) pi^r`
/// (slot `First`) or `pi^r (x) bar(pi^p)` (slot `Second`) onto `pi^q`, with the
/// conjugate factor in its own coefficient basis (index `i` of `bar(pi^p)` is
/// the index of `m = i` in `pi^p`).
///
/// `bar(pi^p)` is equivalent to `pi^p` through `v-bar_i -> c_i v_{-i}` with
/// `c_i = (-1)^{p-i} q^{-i}`; the doubly contragredient version adds the factor
/// `F^p_{ii} = q^{-2(p-i)}`.
#[allow(clippy::too_many_arguments)]
pub fn cg_conjugate_label(
    variant: ConjVariant,
    slot: ConjSlot,
    p: HalfInt,
    i: HalfInt,
    r: HalfInt,
    l: HalfInt,
    q: HalfInt,
    j: HalfInt,
) -> Result<QScalar> {
    let Some(pi) = p.int_diff(i) else {
        return Err(Error::Domain(format!("magnetic label {} invalid for p = {}", i, p)));
    };
    let c = QScalar::sign(pi as i64).mul(&QScalar::t_pow(-i.twice()));
    let base = match slot {
        ConjSlot::First => cg(CgKey::new(p, -i, r, l, q, j))?,
        ConjSlot::Second => cg(CgKey::new(r, l, p, -i, q, j))?,
    };
    let f = match variant {
        ConjVariant::Bar => QScalar::one(),
        ConjVariant::BarDoubleDagger => QScalar::q_pow(-2 * pi),
    };
    Ok(c.mul(&f).mul(&base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn top_state_is_one() {
        assert_eq!(cg_twice(1, 1, 1, 1, 2, 2).unwrap(), QScalar::one());
        assert!(cg_twice(1, 1, 1, 1, 0, 2).unwrap().is_zero());
        assert!(cg_twice(1, 0, 1, 1, 2, 1).is_err());
    }

    #[test]
    fn ex48_value_for_spin_one_and_half() {
        // (1 1; 1/2 -1/2 | 1/2 1/2) = q^{1/2}[2]^{1/2}[3]^{-1/2}
        let expected = QScalar::t_pow(1).mul(&q_int(2).div(&q_int(3)).unwrap().sqrt().unwrap());
        assert_eq!(cg_twice(2, 2, 1, -1, 1, 1).unwrap(), expected);
    }

    #[test]
    fn trivial_partner_is_identity() {
        for jt in 0..4 {
            for m in HalfInt::magnetic(HalfInt::from_twice(jt)) {
                let c = cg(CgKey::new(HalfInt::from_twice(jt), m, HalfInt::ZERO, HalfInt::ZERO, HalfInt::from_twice(jt), m))
                    .unwrap();
                assert_eq!(c, QScalar::one());
            }
        }
    }

    #[test]
    fn couple_half_half() {
        let states = couple(HalfInt::HALF, HalfInt::HALF).unwrap();
        assert_eq!(states.len(), 4);
        assert_eq!(states[0].components, vec![(HalfInt::HALF, HalfInt::HALF, QScalar::one())]);
    }

    #[test]
    fn singlet_at_q_one() {
        let v = cg_twice(1, 1, 1, -1, 0, 0).unwrap();
        let x = crate::scalar::eval_numeric(&v, &Rat::from_integer(1.into()), 30).unwrap();
        assert!((x.to_f64().abs() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    fn conj_table(variant: ConjVariant, slot: ConjSlot, p: i32, r: i32, q: i32) -> Vec<Vec<QScalar>> {
        let h = HalfInt::from_twice;
        let (p, r, q) = (h(p), h(r), h(q));
        let mut rows = Vec::new();
        let pairs: Vec<(HalfInt, HalfInt)> = match slot {
            ConjSlot::First => HalfInt::magnetic(p).flat_map(|i| HalfInt::magnetic(r).map(move |l| (i, l))).collect(),
            ConjSlot::Second => HalfInt::magnetic(r).flat_map(|l| HalfInt::magnetic(p).map(move |i| (i, l))).collect(),
        };
        for (i, l) in pairs {
            rows.push(HalfInt::magnetic(q).map(|j| cg_conjugate_label(variant, slot, p, i, r, l, q, j).unwrap()).collect());
        }
        rows
    }

    #[test]
    fn conjugate_labels_intertwine() {
        use crate::corep::{check_intertwiner, conjugate, double_contragredient, tensor_ordinary};
        use crate::suq2::standard_corep;
        let alg = SuQ2;
        for (p, r, q) in [(1, 1, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2), (2, 2, 0)] {
            let pp = standard_corep(HalfInt::from_twice(p));
            let rr = standard_corep(HalfInt::from_twice(r));
            let qq = standard_corep(HalfInt::from_twice(q));
            let bar = conjugate(&alg, &pp);
            let bar_dd = conjugate(&alg, &double_contragredient(&alg, &pp));
            for (variant, c) in [(ConjVariant::Bar, &bar), (ConjVariant::BarDoubleDagger, &bar_dd)] {
                let first = tensor_ordinary(&alg, c, &rr);
                let t = conj_table(variant, ConjSlot::First, p, r, q);
                assert!(check_intertwiner(&first, &t, &qq).is_empty(), "{:?} first {} {} {}", variant, p, r, q);
                let second = tensor_ordinary(&alg, &rr, c);
                let t = conj_table(variant, ConjSlot::Second, p, r, q);
                assert!(check_intertwiner(&second, &t, &qq).is_empty(), "{:?} second {} {} {}", variant, p, r, q);
            }
        }
    }

    #[test]
    fn conjugate_label_with_trivial_p_is_standard() {
        let z = HalfInt::ZERO;
        for m in HalfInt::magnetic(HalfInt::ONE) {
            let a = cg_conjugate_label(ConjVariant::Bar, ConjSlot::Second, z, z, HalfInt::ONE, m, HalfInt::ONE, m).unwrap();
            assert_eq!(a, QScalar::one());
        }
    }
}
