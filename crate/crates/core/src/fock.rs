//! Two-mode q-boson Fock space and the Jordan–Schwinger tensor operators.
//!
//! `b_i^+|n> = [n+1]^{1/2}|n+1>`, `b_i|n> = [n]^{1/2}|n-1>`, `N_i|n> = n|n>`,
//! and `q^{N/2}` acts as `t^n`. The spin-`j` carrier space is spanned by
//! `v^j_m = |j+m, j-m>`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cg::{cg, CgKey};
use crate::corep::{BigSpace, OpMatrix};
use crate::error::{Error, Result};
use crate::ito::{vector_level_residuals, ItoFamily, Kind};
use crate::report::Check;
use crate::scalar::{eval_numeric, q_int, QScalar, Rat};
use crate::suq2::{standard_corep, HalfInt, PbwMonomial, SuQ2};

/// Occupation numbers `|n1, n2>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState {
    pub n1: u32,
    pub n2: u32,
}

impl FockState {
    pub fn new(n1: u32, n2: u32) -> Self {
        FockState { n1, n2 }
    }

    /// `v^j_m = |j+m, j-m>`.
    pub fn from_spin(j: HalfInt, m: HalfInt) -> Result<Self> {
        if m.index_in(j).is_none() {
            return Err(Error::Domain(format!("m = {} invalid for j = {}", m, j)));
        }
        Ok(FockState::new(((j.twice() + m.twice()) / 2) as u32, ((j.twice() - m.twice()) / 2) as u32))
    }

    /// `(j, m)` with `j = (n1 + n2)/2`, `m = (n1 - n2)/2`.
    pub fn spin(&self) -> (HalfInt, HalfInt) {
        (HalfInt::from_twice((self.n1 + self.n2) as i32), HalfInt::from_twice(self.n1 as i32 - self.n2 as i32))
    }

    pub fn total(&self) -> u32 {
        self.n1 + self.n2
    }

    fn occupation(&self, mode: Mode) -> u32 {
        match mode {
            Mode::One => self.n1,
            Mode::Two => self.n2,
        }
    }

    fn with(&self, mode: Mode, n: u32) -> Self {
        match mode {
            Mode::One => FockState::new(n, self.n2),
            Mode::Two => FockState::new(self.n1, n),
        }
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.n1, self.n2)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Mode {
    One,
    Two,
}

/// The elementary mode operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BosonOp {
    Create1,
    Create2,
    Annih1,
    Annih2,
    Number1,
    Number2,
}

/// One factor of an operator word; [`Factor::HalfPow`] is `q^{sign N/2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Factor {
    Create(Mode),
    Annih(Mode),
    Number(Mode),
    HalfPow(Mode, i32),
}

impl Factor {
    /// Image of a single state, or `None` for zero.
    fn apply(&self, s: FockState) -> Option<(FockState, QScalar)> {
        match *self {
            Factor::Create(m) => {
                let n = s.occupation(m);
                Some((s.with(m, n + 1), q_int(n as i64 + 1).sqrt().expect("[n] is positive")))
            }
            Factor::Annih(m) => {
                let n = s.occupation(m);
                (n > 0).then(|| (s.with(m, n - 1), q_int(n as i64).sqrt().expect("[n] is positive")))
            }
            Factor::Number(m) => {
                let n = s.occupation(m);
                (n > 0).then(|| (s, QScalar::from_int(n as i64)))
            }
            Factor::HalfPow(m, sign) => Some((s, QScalar::t_pow(sign * s.occupation(m) as i32))),
        }
    }
}

impl From<BosonOp> for Factor {
    fn from(op: BosonOp) -> Factor {
        match op {
            BosonOp::Create1 => Factor::Create(Mode::One),
            BosonOp::Create2 => Factor::Create(Mode::Two),
            BosonOp::Annih1 => Factor::Annih(Mode::One),
            BosonOp::Annih2 => Factor::Annih(Mode::Two),
            BosonOp::Number1 => Factor::Number(Mode::One),
            BosonOp::Number2 => Factor::Number(Mode::Two),
        }
    }
}

/// A linear operator on the states with `n1 + n2 <= bound`, stored as images.
/// Images may leave the truncation; they are kept and reported by
/// [`FockOperator::matrix`] rather than dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    bound: u32,
    images: BTreeMap<FockState, BTreeMap<FockState, QScalar>>,
}

fn states_up_to(bound: u32) -> impl Iterator<Item = FockState> {
    (0..=bound).flat_map(move |tot| (0..=tot).rev().map(move |n1| FockState::new(n1, tot - n1)))
}

impl FockOperator {
    /// `c * f_1 f_2 ... f_k`, applied right to left.
    pub fn word(bound: u32, c: &QScalar, factors: &[Factor]) -> Self {
        let mut images = BTreeMap::new();
        for s in states_up_to(bound) {
            let mut cur = Some((s, c.clone()));
            for f in factors.iter().rev() {
                cur = cur.and_then(|(st, coef)| f.apply(st).map(|(st2, c2)| (st2, coef.mul(&c2))));
            }
            let mut img = BTreeMap::new();
            if let Some((st, coef)) = cur {
                if !coef.is_zero() {
                    img.insert(st, coef);
                }
            }
            images.insert(s, img);
        }
        FockOperator { bound, images }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn apply(&self, s: &FockState) -> Result<&BTreeMap<FockState, QScalar>> {
        self.images
            .get(s)
            .ok_or_else(|| Error::Truncation(format!("{} is outside the truncation n1 + n2 <= {}", s, self.bound)))
    }

    /// `self o other`; errors if an intermediate state leaves the truncation.
    pub fn compose(&self, other: &FockOperator) -> Result<FockOperator> {
        let mut images = BTreeMap::new();
        for (s, img) in &other.images {
            let mut out: BTreeMap<FockState, QScalar> = BTreeMap::new();
            for (mid, c) in img {
                for (t, d) in self.apply(mid)? {
                    let e = out.entry(*t).or_insert_with(QScalar::zero);
                    *e = e.add(&c.mul(d));
                }
            }
            out.retain(|_, v| !v.is_zero());
            images.insert(*s, out);
        }
        Ok(FockOperator { bound: self.bound.min(other.bound), images })
    }

    /// Matrix on `space` (blocks `j = 0, 1/2, ...`), with columns only for the
    /// given source blocks. Errors if an image leaves the space.
    pub fn matrix(&self, space: &BigSpace<PbwMonomial>, source_blocks: usize) -> Result<OpMatrix> {
        let mut op = OpMatrix::zeros(space.dim(), space.dim());
        for s in states_up_to(source_blocks.saturating_sub(1) as u32) {
            for (t, c) in self.apply(&s)? {
                let row = state_index(space, t)?;
                op.set(row, state_index(space, &s)?, c.clone());
            }
        }
        Ok(op)
    }
}

/// Elementary boson operator on states with `n1 + n2 <= bound`.
pub fn boson(op: BosonOp, bound: u32) -> FockOperator {
    FockOperator::word(bound, &QScalar::one(), &[op.into()])
}

/// Global index of a state in the Jordan–Schwinger space.
pub fn state_index(space: &BigSpace<PbwMonomial>, s: &FockState) -> Result<usize> {
    let block = s.total() as usize;
    if block >= space.blocks().len() {
        return Err(Error::Truncation(format!("{} lies beyond the largest block", s)));
    }
    let (j, m) = s.spin();
    Ok(space.offset(block) + m.index_in(j).expect("valid by construction"))
}

/// The direct sum of spin-`j` carrier spaces for `j <= jmax`, with
/// `pi(v^j_m) = sum_{m'} v^j_{m'} (x) pi^j_{m'm}`.
pub fn big_coaction(jmax: HalfInt) -> BigSpace<PbwMonomial> {
    BigSpace::new(HalfInt::up_to(jmax).map(standard_corep).collect())
}

/// The four candidate spin-1/2 operator pairs built from mode operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    A37,
    A38,
    A39,
    A40,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::A37, Variant::A38, Variant::A39, Variant::A40];

    /// The kind of tensor operator the pair is expected to be.
    pub fn expected_kind(self) -> Kind {
        match self {
            Variant::A37 | Variant::A38 => Kind::Ordinary,
            Variant::A39 | Variant::A40 => Kind::Twisted,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::A37 => "a37",
            Variant::A38 => "a38",
            Variant::A39 => "a39",
            Variant::A40 => "a40",
        }
    }

    /// Components `m = 1/2, -1/2` as `(coefficient, word)`.
    pub fn components(self) -> [(QScalar, Vec<Factor>); 2] {
        use Factor::*;
        use Mode::*;
        match self {
            Variant::A37 => [
                (QScalar::one(), vec![Create(One), HalfPow(Two, -1)]),
                (QScalar::one(), vec![Create(Two), HalfPow(One, 1)]),
            ],
            Variant::A38 => [
                (QScalar::q_pow(1), vec![Annih(Two), HalfPow(One, 1)]),
                (QScalar::from_int(-1), vec![Annih(One), HalfPow(Two, -1)]),
            ],
            Variant::A39 => [
                (QScalar::one(), vec![Create(One), HalfPow(Two, 1)]),
                (QScalar::one(), vec![Create(Two), HalfPow(One, -1)]),
            ],
            Variant::A40 => [
                (QScalar::q_pow(-1), vec![Annih(Two), HalfPow(One, -1)]),
                (QScalar::from_int(-1), vec![Annih(One), HalfPow(Two, 1)]),
            ],
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown variant {s:?}")))
    }
}

/// The pair as Fock operators on states with `n1 + n2 <= bound`.
pub fn candidate_operators(variant: Variant, bound: u32) -> [FockOperator; 2] {
    variant.components().map(|(c, w)| FockOperator::word(bound, &c, &w))
}

/// The pair as matrices on the blocks `j <= jmax`, with columns for the
/// blocks `j <= jmax - 1/2` so that no image is clipped.
pub fn candidate_family(variant: Variant, jmax: HalfInt) -> Result<(BigSpace<PbwMonomial>, Vec<OpMatrix>)> {
    if jmax.twice() < 1 {
        return Err(Error::Truncation(format!("jmax = {} leaves no source block", jmax)));
    }
    let space = big_coaction(jmax);
    let source_blocks = jmax.twice() as usize;
    let ops = candidate_operators(variant, jmax.twice() as u32)
        .iter()
        .map(|o| o.matrix(&space, source_blocks))
        .collect::<Result<Vec<_>>>()?;
    Ok((space, ops))
}

/// The pair restricted to `V^p -> V^r`.
pub fn block_family(variant: Variant, p: HalfInt, r: HalfInt) -> Result<ItoFamily<PbwMonomial>> {
    let bound = p.twice().max(r.twice()) as u32 + 1;
    let ops = candidate_operators(variant, bound)
        .iter()
        .map(|o| {
            let mut m = OpMatrix::zeros(r.dim(), p.dim());
            for (ji, jm) in HalfInt::magnetic(p).enumerate() {
                for (t, c) in o.apply(&FockState::from_spin(p, jm)?)? {
                    let (tj, tm) = t.spin();
                    if tj == r {
                        m.set(tm.index_in(r).expect("valid"), ji, c.clone());
                    }
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    ItoFamily::new(variant.expected_kind(), standard_corep(HalfInt::HALF), ops, 1)
}

/// Checks the pair against the definition of `kind` on every basis vector of
/// the blocks `j <= jmax - 1/2`: exactly, and numerically at `q = 1` with
/// absolute tolerance `10^-25`.
pub fn verify_boson_ito(variant: Variant, kind: Kind, jmax: HalfInt) -> Result<Vec<Check>> {
    let (space, ops) = candidate_family(variant, jmax)?;
    let sources: Vec<usize> = (0..space.offset(jmax.twice() as usize)).collect();
    let qcorep = standard_corep(HalfInt::HALF);
    let residuals = vector_level_residuals(&SuQ2, kind, &space, &ops, &qcorep, &sources)?;
    let total = residuals.len();
    let exact_bad: Vec<(usize, usize)> = residuals.iter().filter(|(_, r)| !r.is_empty()).map(|(jv, _)| *jv).collect();
    let one = Rat::from_integer(1.into());
    let tol = Rat::new(1.into(), num_bigint::BigInt::from(10).pow(25));
    let mut numeric_bad = Vec::new();
    for (jv, r) in &residuals {
        let mut ok = true;
        for leg in r.values() {
            for (_, c) in leg.terms() {
                match eval_numeric(c, &one, 30) {
                    Ok(x) if x.abs_upper() <= tol => {}
                    _ => ok = false,
                }
            }
        }
        if !ok {
            numeric_bad.push(*jv);
        }
    }
    let prefix = format!("{}_{}", variant.name(), kind.as_str());
    Ok(vec![
        Check::from_failures(format!("{prefix}_exact"), total, &exact_bad),
        Check::from_failures(format!("{prefix}_q1_numeric"), total, &numeric_bad),
    ])
}

/// `sum_{m'} (j+1/2 m'+1/2; j -m' | 1/2 1/2)(j+1/2 m'+1/2; j -m' | j' 1/2) = delta_{j', 1/2}`
/// for every admissible `j'`.
pub fn collapse_lemma(j: HalfInt) -> Result<Check> {
    let half = HalfInt::HALF;
    let top = j + half;
    let mut bad = Vec::new();
    let mut count = 0;
    for jp_twice in (1..=top.twice() + j.twice()).step_by(2) {
        let jp = HalfInt::from_twice(jp_twice);
        let mut sum = QScalar::zero();
        for mp in HalfInt::magnetic(j) {
            let a = cg(CgKey::new(top, mp + half, j, -mp, half, half))?;
            let b = cg(CgKey::new(top, mp + half, j, -mp, jp, half))?;
            sum = sum.add(&a.mul(&b));
        }
        let expected = if jp == half { QScalar::one() } else { QScalar::zero() };
        if sum != expected {
            bad.push((jp.to_string(), sum.to_string()));
        }
        count += 1;
    }
    Ok(Check::from_failures(format!("collapse_lemma_j={}", j), count, &bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfAlgebra;

    #[test]
    fn elementary_actions() {
        let c1 = boson(BosonOp::Create1, 8);
        assert_eq!(c1.apply(&FockState::new(0, 0)).unwrap()[&FockState::new(1, 0)], QScalar::one());
        assert!(boson(BosonOp::Annih1, 8).apply(&FockState::new(0, 5)).unwrap().is_empty());
        let n2 = boson(BosonOp::Number2, 8);
        assert_eq!(n2.apply(&FockState::new(1, 3)).unwrap()[&FockState::new(1, 3)], QScalar::from_int(3));
    }

    #[test]
    fn number_relations() {
        let bound = 9;
        for (c, a) in [(BosonOp::Create1, BosonOp::Annih1), (BosonOp::Create2, BosonOp::Annih2)] {
            let (c, a) = (boson(c, bound), boson(a, bound));
            let ca = c.compose(&a).unwrap();
            for n in 0..=8u32 {
                let s = FockState::new(n, n % 3);
                let s = if s.total() > 8 { FockState::new(n, 0) } else { s };
                let n_mode = if c == boson(BosonOp::Create1, bound) { s.n1 } else { s.n2 };
                let img = ca.apply(&s).unwrap();
                let expected = q_int(n_mode as i64);
                assert_eq!(img.get(&s).cloned().unwrap_or_else(QScalar::zero), expected);
            }
            let ac = a.compose(&c);
            // b b^+ on the top level needs a state beyond the truncation
            assert!(ac.is_err());
        }
    }

    #[test]
    fn modes_commute() {
        let bound = 6;
        let ops = [BosonOp::Create1, BosonOp::Annih1, BosonOp::Number1];
        let others = [BosonOp::Create2, BosonOp::Annih2, BosonOp::Number2];
        for a in ops {
            for b in others {
                let (x, y) = (boson(a, bound), boson(b, bound));
                for s in states_up_to(bound - 2) {
                    let xy = apply_both(&x, &y, &s);
                    let yx = apply_both(&y, &x, &s);
                    assert_eq!(xy, yx, "{:?} {:?} {}", a, b, s);
                }
            }
        }
    }

    fn apply_both(x: &FockOperator, y: &FockOperator, s: &FockState) -> BTreeMap<FockState, QScalar> {
        let mut out: BTreeMap<FockState, QScalar> = BTreeMap::new();
        for (m, c) in y.apply(s).unwrap() {
            for (t, d) in x.apply(m).unwrap() {
                let e = out.entry(*t).or_insert_with(QScalar::zero);
                *e = e.add(&c.mul(d));
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    #[test]
    fn variant_actions() {
        let [top, _] = candidate_operators(Variant::A37, 3);
        assert_eq!(top.apply(&FockState::new(0, 0)).unwrap()[&FockState::new(1, 0)], QScalar::one());
        let [top, _] = candidate_operators(Variant::A38, 3);
        assert_eq!(top.apply(&FockState::new(0, 1)).unwrap()[&FockState::new(0, 0)], QScalar::q_pow(1));
        // A39 is A37 with q -> q^{-1}
        let a37 = candidate_operators(Variant::A37, 4);
        let a39 = candidate_operators(Variant::A39, 4);
        for (x, y) in a37.iter().zip(&a39) {
            for s in states_up_to(3) {
                let xi = x.apply(&s).unwrap();
                let yi = y.apply(&s).unwrap();
                assert_eq!(xi.len(), yi.len());
                for (t, c) in xi {
                    assert_eq!(c.invert_q().unwrap(), yi[t]);
                }
            }
        }
    }

    #[test]
    fn big_coaction_low_blocks() {
        let space = big_coaction(HalfInt::ONE);
        assert_eq!(space.dim(), 6);
        let v00 = space.coaction_apply(0).unwrap();
        assert_eq!(v00.len(), 1);
        assert_eq!(v00[&0], SuQ2.one());
        let top_half = space.coaction_apply(1).unwrap();
        assert_eq!(top_half[&1], crate::suq2::parse_alg("X").unwrap());
        assert_eq!(top_half[&2], crate::suq2::parse_alg("V").unwrap());
    }

    #[test]
    fn a37_is_ordinary_on_low_blocks() {
        let checks = verify_boson_ito(Variant::A37, Kind::Ordinary, HalfInt::ONE).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{:?}", checks);
        let cross = verify_boson_ito(Variant::A37, Kind::Twisted, HalfInt::ONE).unwrap();
        assert!(!cross[0].passed);
        assert!(cross[1].passed);
    }

    #[test]
    fn truncation_too_small() {
        assert!(matches!(verify_boson_ito(Variant::A37, Kind::Ordinary, HalfInt::ZERO), Err(Error::Truncation(_))));
    }

    #[test]
    fn collapse_lemma_small_j() {
        for jt in 0..=3 {
            assert!(collapse_lemma(HalfInt::from_twice(jt)).unwrap().passed);
        }
    }

    #[test]
    fn reduced_element_from_vacuum() {
        let fam = block_family(Variant::A37, HalfInt::ZERO, HalfInt::HALF).unwrap();
        let r = crate::wigner::reduced_matrix_elements(&fam, HalfInt::ZERO, HalfInt::HALF).unwrap();
        assert_eq!(r, vec![QScalar::one()]);
    }
}
