//! Irreducible tensor operators, ordinary and twisted.
//!
//! An operator `Q: V^p -> V^r` is an [`OpMatrix`] with entry `(n, i)` equal to
//! `<v^r_n, Q v^p_i>`. The two coactions on the operator space send `Q` to
//! `sum E_{mj} (x) c_{mj}` where `E_{mj}` is the matrix unit and
//!
//! - ordinary: `c_{mj} = sum_{n,i} q_{ni} pi^r_{mn} S(pi^p_{ij})`
//! - twisted:  `c_{mj} = sum_{n,i} q_{ni} S^{-1}(pi^p_{ij}) pi^r_{mn}`

use serde::{Deserialize, Serialize};

use crate::cg::{cg_conjugate_label, ConjSlot, ConjVariant};
use crate::corep::{
    conjugate, double_contragredient, tensor_ordinary, tensor_twisted, vt_add, BigSpace, Corep, OpMatrix,
    VectorTensor,
};
use crate::error::{Error, Result};
use crate::hopf::{tensor, HopfAlgebra, LinComb, Pair};
use crate::report::Check;
use crate::scalar::{eval_numeric, QScalar, Rat};
use crate::suq2::{standard_corep, HalfInt, PbwMonomial};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ordinary,
    Twisted,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::Ordinary => Kind::Twisted,
            Kind::Twisted => Kind::Ordinary,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ordinary => "ordinary",
            Kind::Twisted => "twisted",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "ordinary" => Ok(Kind::Ordinary),
            "twisted" => Ok(Kind::Twisted),
            _ => Err(Error::Domain(format!("unknown kind {s:?}"))),
        }
    }
}

/// A family `Q_1, ..., Q_{d_q}` of operators `V^p -> V^r` meant to transform
/// under `qcorep`.
#[derive(Clone, Debug, PartialEq)]
pub struct ItoFamily<B: Ord> {
    pub kind: Kind,
    pub qcorep: Corep<B>,
    pub ops: Vec<OpMatrix>,
    pub alpha: usize,
}

impl<B: Ord + Clone> ItoFamily<B> {
    pub fn new(kind: Kind, qcorep: Corep<B>, ops: Vec<OpMatrix>, alpha: usize) -> Result<Self> {
        if ops.len() != qcorep.dim() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} operators", qcorep.dim()),
                got: format!("{} operators", ops.len()),
            });
        }
        if let Some(first) = ops.first() {
            if ops.iter().any(|o| (o.rows(), o.cols()) != (first.rows(), first.cols())) {
                return Err(Error::ShapeMismatch { expected: "operators of equal shape".into(), got: "mixed".into() });
            }
        }
        Ok(ItoFamily { kind, qcorep, ops, alpha })
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        ItoFamily { ops: self.ops.iter().map(|o| o.scale(c)).collect(), ..self.clone() }
    }

    pub fn with_kind(&self, kind: Kind) -> Self {
        ItoFamily { kind, ..self.clone() }
    }

    /// `(rows, cols) = (d_r, d_p)`.
    pub fn shape(&self) -> (usize, usize) {
        self.ops.first().map(|o| (o.rows(), o.cols())).unwrap_or((0, 0))
    }
}

/// `sum_{m,j} E_{mj} (x) legs[m][j]`, an element of `L^{pr} (x) A`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpTensor<B: Ord> {
    rows: usize,
    cols: usize,
    legs: Vec<LinComb<B>>,
}

impl<B: Ord + Clone> OpTensor<B> {
    fn zeros(rows: usize, cols: usize) -> Self {
        OpTensor { rows, cols, legs: vec![LinComb::zero(); rows * cols] }
    }

    pub fn leg(&self, m: usize, j: usize) -> &LinComb<B> {
        &self.legs[m * self.cols + j]
    }

    fn leg_mut(&mut self, m: usize, j: usize) -> &mut LinComb<B> {
        &mut self.legs[m * self.cols + j]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn add_scaled(&mut self, o: &OpTensor<B>, c: &QScalar) {
        for (a, b) in self.legs.iter_mut().zip(&o.legs) {
            a.add_scaled(b, c);
        }
    }
}

/// The coaction on `L^{pr}`, tabulated on matrix units.
pub struct OpCoaction<B: Ord> {
    kind: Kind,
    rows: usize,
    cols: usize,
    units: Vec<OpTensor<B>>,
}

fn antipode_side<A: HopfAlgebra>(alg: &A, kind: Kind, x: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    match kind {
        Kind::Ordinary => alg.antipode(x),
        Kind::Twisted => alg.antipode_inv(x),
    }
}

fn kind_mul<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    r_leg: &LinComb<A::Basis>,
    p_leg: &LinComb<A::Basis>,
) -> LinComb<A::Basis> {
    match kind {
        Kind::Ordinary => alg.mul(r_leg, p_leg),
        Kind::Twisted => alg.mul(p_leg, r_leg),
    }
}

impl<B: Ord + Clone> OpCoaction<B> {
    pub fn new<A: HopfAlgebra<Basis = B>>(alg: &A, kind: Kind, p: &Corep<B>, r: &Corep<B>) -> Self {
        let (dp, dr) = (p.dim(), r.dim());
        let s_p: Vec<Vec<LinComb<B>>> =
            (0..dp).map(|i| (0..dp).map(|j| antipode_side(alg, kind, p.coeff(i, j))).collect()).collect();
        let mut units = Vec::with_capacity(dr * dp);
        for n in 0..dr {
            for i in 0..dp {
                let mut t = OpTensor::zeros(dr, dp);
                for m in 0..dr {
                    for j in 0..dp {
                        *t.leg_mut(m, j) = kind_mul(alg, kind, r.coeff(m, n), &s_p[i][j]);
                    }
                }
                units.push(t);
            }
        }
        OpCoaction { kind, rows: dr, cols: dp, units }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The image of the matrix unit `E_{ni}`.
    pub fn unit(&self, n: usize, i: usize) -> &OpTensor<B> {
        &self.units[n * self.cols + i]
    }

    pub fn apply(&self, q: &OpMatrix) -> Result<OpTensor<B>> {
        if (q.rows(), q.cols()) != (self.rows, self.cols) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", q.rows(), q.cols()),
            });
        }
        let mut out = OpTensor::zeros(self.rows, self.cols);
        for (n, i, c) in q.nonzero() {
            out.add_scaled(self.unit(n, i), c);
        }
        Ok(out)
    }
}

/// The ordinary or twisted coaction applied to `q`.
pub fn coaction_on_ops<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    p: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
    q: &OpMatrix,
) -> Result<OpTensor<A::Basis>> {
    OpCoaction::new(alg, kind, p, r).apply(q)
}

/// `sum_k Q_k (x) pi^q_{kj}` as an operator tensor.
fn expected_image<B: Ord + Clone>(family: &ItoFamily<B>, j: usize) -> OpTensor<B> {
    let (rows, cols) = family.shape();
    let mut out = OpTensor::zeros(rows, cols);
    for (k, op) in family.ops.iter().enumerate() {
        let pi = family.qcorep.coeff(k, j);
        if pi.is_zero() {
            continue;
        }
        for (m, s, c) in op.nonzero() {
            out.leg_mut(m, s).add_scaled(pi, c);
        }
    }
    out
}

/// Components `j` where the operator-space condition fails, checked with the
/// coaction of the family's kind.
pub fn operator_space_failures<A: HopfAlgebra>(
    alg: &A,
    family: &ItoFamily<A::Basis>,
    p: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
) -> Result<Vec<usize>> {
    let coaction = OpCoaction::new(alg, family.kind, p, r);
    let mut bad = Vec::new();
    for (j, op) in family.ops.iter().enumerate() {
        if coaction.apply(op)? != expected_image(family, j) {
            bad.push(j);
        }
    }
    Ok(bad)
}

/// Residuals `lhs - rhs` of the defining condition applied to vectors of a
/// direct sum `space`, with operators given on the whole space, for every
/// component `j` and listed source vector `v`.
pub fn vector_level_residuals<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    space: &BigSpace<A::Basis>,
    ops: &[OpMatrix],
    qcorep: &Corep<A::Basis>,
    sources: &[usize],
) -> Result<Vec<((usize, usize), VectorTensor<A::Basis>)>> {
    let minus_one = QScalar::from_int(-1);
    let mut out = Vec::new();
    for (j, op) in ops.iter().enumerate() {
        for &v in sources {
            // pi(v) = sum_k e_k (x) a_k, then Q (x) S, then pi (x) id, then M or M o sigma
            let mut res: VectorTensor<A::Basis> = VectorTensor::new();
            for (k, a) in space.coaction_apply(v)? {
                let sa = antipode_side(alg, kind, &a);
                for n in 0..space.dim() {
                    let c = op.get(n, k);
                    if c.is_zero() {
                        continue;
                    }
                    for (m, pi_mn) in space.coaction_apply(n)? {
                        vt_add(&mut res, m, &kind_mul(alg, kind, &pi_mn, &sa), c);
                    }
                }
            }
            for (k, qk) in ops.iter().enumerate() {
                let pi = qcorep.coeff(k, j);
                if pi.is_zero() {
                    continue;
                }
                for m in 0..space.dim() {
                    let c = qk.get(m, v);
                    if !c.is_zero() {
                        vt_add(&mut res, m, pi, &c.mul(&minus_one));
                    }
                }
            }
            out.push(((j, v), res));
        }
    }
    Ok(out)
}

/// Failing `(component, vector)` pairs of [`vector_level_residuals`].
pub fn vector_level_failures<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    space: &BigSpace<A::Basis>,
    ops: &[OpMatrix],
    qcorep: &Corep<A::Basis>,
    sources: &[usize],
) -> Result<Vec<(usize, usize)>> {
    Ok(vector_level_residuals(alg, kind, space, ops, qcorep, sources)?
        .into_iter()
        .filter(|(_, r)| !r.is_empty())
        .map(|(jv, _)| jv)
        .collect())
}

/// The family embedded as maps block 0 -> block 1 of `V^p (+) V^r`.
pub fn embed_family<B: Ord + Clone>(family: &ItoFamily<B>, p: &Corep<B>, r: &Corep<B>) -> (BigSpace<B>, Vec<OpMatrix>) {
    let space = BigSpace::new(vec![p.clone(), r.clone()]);
    let ops = family.ops.iter().map(|o| space.embed_op(o, 0, 1)).collect();
    (space, ops)
}

/// Checks a family against its kind's definition on the operator space and on
/// vectors of `V^p (+) V^r`. Both checks are reported; they must agree.
pub fn is_ito<A: HopfAlgebra>(
    alg: &A,
    family: &ItoFamily<A::Basis>,
    p: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
) -> Result<Vec<Check>> {
    let (rows, cols) = family.shape();
    if (rows, cols) != (r.dim(), p.dim()) {
        return Err(Error::ShapeMismatch {
            expected: format!("{}x{}", r.dim(), p.dim()),
            got: format!("{rows}x{cols}"),
        });
    }
    let kind = family.kind.as_str();
    let op_bad = operator_space_failures(alg, family, p, r)?;
    let (space, ops) = embed_family(family, p, r);
    let sources: Vec<usize> = (0..space.dim()).collect();
    let vec_bad = vector_level_failures(alg, family.kind, &space, &ops, &family.qcorep, &sources)?;
    Ok(vec![
        Check::from_failures(format!("{kind}_operator_space"), family.ops.len(), &op_bad),
        Check::from_failures(format!("{kind}_vector_level"), family.ops.len() * space.dim(), &vec_bad),
    ])
}

/// `pi^r(Q_k v^p_j) = sum_{s,t} Q_t(v^p_s) (x) c`, with `c = pi^q_{tk} pi^p_{sj}`
/// for `Kind::Ordinary` and `c = pi^p_{sj} pi^q_{tk}` for `Kind::Twisted`.
pub fn ito_identity<A: HopfAlgebra>(
    alg: &A,
    family: &ItoFamily<A::Basis>,
    p: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
    kind: Kind,
) -> Check {
    let q = &family.qcorep;
    let mut bad = Vec::new();
    for k in 0..q.dim() {
        for j in 0..p.dim() {
            let mut lhs: VectorTensor<A::Basis> = VectorTensor::new();
            for n in 0..r.dim() {
                let c = family.ops[k].get(n, j);
                if c.is_zero() {
                    continue;
                }
                for m in 0..r.dim() {
                    vt_add(&mut lhs, m, r.coeff(m, n), c);
                }
            }
            let mut rhs: VectorTensor<A::Basis> = VectorTensor::new();
            for t in 0..q.dim() {
                for s in 0..p.dim() {
                    let prod = match kind {
                        Kind::Ordinary => alg.mul(q.coeff(t, k), p.coeff(s, j)),
                        Kind::Twisted => alg.mul(p.coeff(s, j), q.coeff(t, k)),
                    };
                    for m in 0..r.dim() {
                        let c = family.ops[t].get(m, s);
                        if !c.is_zero() {
                            vt_add(&mut rhs, m, &prod, c);
                        }
                    }
                }
            }
            if lhs != rhs {
                bad.push((k, j));
            }
        }
    }
    Check::from_failures(format!("{}_identity", kind.as_str()), q.dim() * p.dim(), &bad)
}

/// Comodule axioms for the coaction of `kind` on `L^{pr}`, on all matrix units.
pub fn check_op_coaction_axioms<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    p: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
) -> Vec<Check> {
    let coaction = OpCoaction::new(alg, kind, p, r);
    let (dr, dp) = (r.dim(), p.dim());
    let mut coassoc_bad = Vec::new();
    let mut counit_bad = Vec::new();
    for a in 0..dr {
        for b in 0..dp {
            let img = coaction.unit(a, b);
            for x in 0..dr {
                for y in 0..dp {
                    let lhs = alg.coproduct(img.leg(x, y));
                    let mut rhs: LinComb<Pair<A::Basis>> = LinComb::zero();
                    for n in 0..dr {
                        for m in 0..dp {
                            rhs.add_assign(&tensor(coaction.unit(n, m).leg(x, y), img.leg(n, m)));
                        }
                    }
                    if lhs != rhs {
                        coassoc_bad.push((a, b, x, y));
                    }
                    let e = alg.counit(img.leg(x, y));
                    let expected = if (x, y) == (a, b) { QScalar::one() } else { QScalar::zero() };
                    if e != expected {
                        counit_bad.push((a, b, x, y));
                    }
                }
            }
        }
    }
    let total = (dr * dp).pow(2);
    let k = kind.as_str();
    vec![
        Check::from_failures(format!("{k}_coaction_coassociative"), total, &coassoc_bad),
        Check::from_failures(format!("{k}_coaction_counit"), total, &counit_bad),
    ]
}

/// Entrywise identification of the two coactions on matrix units with
/// coefficients of tensor products involving conjugates:
/// the ordinary coaction matches `pi^r (x) bar(pi^p)` and `bar(pi^p) (x)~ pi^r`,
/// the twisted one matches `bar(pi^{p++}) (x) pi^r`.
pub fn check_identifications<A: HopfAlgebra>(alg: &A, p: &Corep<A::Basis>, r: &Corep<A::Basis>) -> Vec<Check> {
    let (dp, dr) = (p.dim(), r.dim());
    let bar = conjugate(alg, p);
    let r_x_bar = tensor_ordinary(alg, r, &bar);
    let bar_tx_r = tensor_twisted(alg, &bar, r);
    let bardd_x_r = tensor_ordinary(alg, &conjugate(alg, &double_contragredient(alg, p)), r);
    let ord = OpCoaction::new(alg, Kind::Ordinary, p, r);
    let tw = OpCoaction::new(alg, Kind::Twisted, p, r);
    let (mut bad_a, mut bad_c, mut bad_c2) = (Vec::new(), Vec::new(), Vec::new());
    // P^{pr}_{ij} is the matrix unit E_{ji}; its image has leg (n, m) on E_{nm} = P^{pr}_{mn}
    for i in 0..dp {
        for j in 0..dr {
            let o = ord.unit(j, i);
            let t = tw.unit(j, i);
            for m in 0..dp {
                for n in 0..dr {
                    if o.leg(n, m) != r_x_bar.coeff(n * dp + m, j * dp + i) {
                        bad_a.push((i, j, m, n));
                    }
                    if o.leg(n, m) != bar_tx_r.coeff(m * dr + n, i * dr + j) {
                        bad_c.push((i, j, m, n));
                    }
                    if t.leg(n, m) != bardd_x_r.coeff(m * dr + n, i * dr + j) {
                        bad_c2.push((i, j, m, n));
                    }
                }
            }
        }
    }
    let total = (dp * dr).pow(2);
    vec![
        Check::from_failures("ordinary_coaction_is_r_x_pbar", total, &bad_a),
        Check::from_failures("ordinary_coaction_is_pbar_twisted_r", total, &bad_c),
        Check::from_failures("twisted_coaction_is_pbar_dd_x_r", total, &bad_c2),
    ]
}

/// `|j1 - j2| <= j <= j1 + j2` with `j1 + j2 + j` integral.
pub fn triangle(j1: HalfInt, j2: HalfInt, j: HalfInt) -> bool {
    let (a, b, c) = (j1.twice(), j2.twice(), j.twice());
    (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
}

/// The reference value of `q` used to normalize built families.
pub fn normalization_q() -> Rat {
    Rat::new(3.into(), 2.into())
}

/// Divides every operator by the entry of largest magnitude at `q = 3/2`
/// (first such entry in component, row, column order).
fn normalize(ops: Vec<OpMatrix>) -> Result<Vec<OpMatrix>> {
    let q = normalization_q();
    let mut best: Option<(Rat, QScalar)> = None;
    for op in &ops {
        for (_, _, v) in op.nonzero() {
            let mag = eval_numeric(v, &q, 30)?.mid();
            let mag = if mag < Rat::from_integer(0.into()) { -mag } else { mag };
            if best.as_ref().map_or(true, |(b, _)| mag > *b) {
                best = Some((mag, v.clone()));
            }
        }
    }
    match best {
        None => Ok(ops),
        Some((_, pivot)) => {
            let inv = QScalar::one().div(&pivot)?;
            Ok(ops.iter().map(|o| o.scale(&inv)).collect())
        }
    }
}

/// The SU_q(2) families for labels `(p, q, r)`: empty when the triangle
/// condition fails, otherwise one family with
/// `Q_j = sum_{i,l} C(i, l; j) P^{pr}_{il}`, where `C` is the Clebsch–Gordan
/// coefficient of `pi^r (x) bar(pi^p)` (ordinary) or `bar(pi^{p++}) (x) pi^r`
/// (twisted) onto `pi^q`.
pub fn build_ito(kind: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<Vec<ItoFamily<PbwMonomial>>> {
    for x in [p, q, r] {
        if x.twice() < 0 {
            return Err(Error::Domain(format!("negative label {}", x)));
        }
    }
    if !triangle(q, p, r) {
        return Ok(Vec::new());
    }
    let mut ops = Vec::new();
    for j in HalfInt::magnetic(q) {
        let mut op = OpMatrix::zeros(r.dim(), p.dim());
        for (li, l) in HalfInt::magnetic(r).enumerate() {
            for (ii, i) in HalfInt::magnetic(p).enumerate() {
                let c = match kind {
                    Kind::Ordinary => cg_conjugate_label(ConjVariant::Bar, ConjSlot::Second, p, i, r, l, q, j)?,
                    Kind::Twisted => {
                        cg_conjugate_label(ConjVariant::BarDoubleDagger, ConjSlot::First, p, i, r, l, q, j)?
                    }
                };
                op.set(li, ii, c);
            }
        }
        ops.push(op);
    }
    let ops = normalize(ops)?;
    Ok(vec![ItoFamily::new(kind, standard_corep(q), ops, 1)?])
}

/// The family `{id}` transforming under the trivial corepresentation.
pub fn identity_family<A: HopfAlgebra>(alg: &A, kind: Kind, p: &Corep<A::Basis>) -> ItoFamily<A::Basis> {
    ItoFamily { kind, qcorep: Corep::trivial(alg), ops: vec![OpMatrix::identity(p.dim())], alpha: 1 }
}

/// Dimension of the solution space of the defining condition for operators
/// `V^p -> V^r` transforming under `qcorep`, computed in floating point at
/// `q = q_value`. An independent cross-check of [`build_ito`].
pub fn numeric_multiplicity<A: HopfAlgebra>(
    alg: &A,
    kind: Kind,
    p: &Corep<A::Basis>,
    qcorep: &Corep<A::Basis>,
    r: &Corep<A::Basis>,
    q_value: &Rat,
) -> Result<usize> {
    let (dp, dq, dr) = (p.dim(), qcorep.dim(), r.dim());
    let coaction = OpCoaction::new(alg, kind, p, r);
    let unknown = |k: usize, n: usize, i: usize| (k * dr + n) * dp + i;
    let num = |c: &QScalar| -> Result<f64> { Ok(eval_numeric(c, q_value, 20)?.to_f64()) };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for j in 0..dq {
        for m in 0..dr {
            for s in 0..dp {
                let mut eqs: std::collections::BTreeMap<A::Basis, Vec<f64>> = std::collections::BTreeMap::new();
                let width = dq * dr * dp;
                for n in 0..dr {
                    for i in 0..dp {
                        for (b, c) in coaction.unit(n, i).leg(m, s).terms() {
                            eqs.entry(b.clone()).or_insert_with(|| vec![0.0; width])[unknown(j, n, i)] += num(c)?;
                        }
                    }
                }
                for k in 0..dq {
                    for (b, c) in qcorep.coeff(k, j).terms() {
                        eqs.entry(b.clone()).or_insert_with(|| vec![0.0; width])[unknown(k, m, s)] -= num(c)?;
                    }
                }
                rows.extend(eqs.into_values());
            }
        }
    }
    Ok(dq * dr * dp - numeric_rank(rows, 1e-9))
}

fn numeric_rank(mut rows: Vec<Vec<f64>>, tol: f64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let scale = rows.iter().flatten().fold(0.0f64, |a, x| a.max(x.abs())).max(1.0);
    let mut rank = 0;
    for col in 0..width {
        let pivot = (rank..rows.len()).max_by(|&a, &b| rows[a][col].abs().total_cmp(&rows[b][col].abs()));
        let Some(pr) = pivot else { break };
        if rows[pr][col].abs() <= tol * scale {
            continue;
        }
        rows.swap(rank, pr);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col] / pivot_row[col];
            if f != 0.0 {
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `pi^p (x) pi^r` blocks and built family for the SU_q(2) labels, ready for checks.
pub fn suq2_setup(kind: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<(Corep<PbwMonomial>, Corep<PbwMonomial>, Vec<ItoFamily<PbwMonomial>>)> {
    Ok((standard_corep(p), standard_corep(r), build_ito(kind, p, q, r)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suq2::SuQ2;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn built_families_pass_their_own_kind_only() {
        for kind in [Kind::Ordinary, Kind::Twisted] {
            let (p, r, fams) = suq2_setup(kind, h(1), h(1), h(2)).unwrap();
            assert_eq!(fams.len(), 1);
            let fam = &fams[0];
            assert_eq!(fam.shape(), (3, 2));
            for c in is_ito(&SuQ2, fam, &p, &r).unwrap() {
                assert!(c.passed, "{:?} {}", kind, c.detail);
            }
            assert!(ito_identity(&SuQ2, fam, &p, &r, kind).passed);
            assert!(!ito_identity(&SuQ2, fam, &p, &r, kind.other()).passed);
            for c in is_ito(&SuQ2, &fam.with_kind(kind.other()), &p, &r).unwrap() {
                assert!(!c.passed);
            }
        }
    }

    #[test]
    fn triangle_failure_gives_no_family() {
        assert!(build_ito(Kind::Ordinary, h(0), h(1), h(0)).unwrap().is_empty());
    }

    #[test]
    fn identity_operator_transforms_trivially() {
        let p = standard_corep(h(1));
        for kind in [Kind::Ordinary, Kind::Twisted] {
            let fam = identity_family(&SuQ2, kind, &p);
            assert!(is_ito(&SuQ2, &fam, &p, &p).unwrap().iter().all(|c| c.passed));
        }
    }

    #[test]
    fn trivial_blocks_collapse() {
        let t = Corep::trivial(&SuQ2);
        let img = coaction_on_ops(&SuQ2, Kind::Ordinary, &t, &t, &OpMatrix::identity(1)).unwrap();
        assert_eq!(img.leg(0, 0), &SuQ2.one());
    }

    #[test]
    fn numeric_multiplicity_matches_triangle() {
        let p = standard_corep(h(1));
        let r = standard_corep(h(2));
        for (qt, expected) in [(1, 1), (3, 1), (0, 0), (2, 0)] {
            let q = standard_corep(h(qt));
            for kind in [Kind::Ordinary, Kind::Twisted] {
                let n = numeric_multiplicity(&SuQ2, kind, &p, &q, &r, &normalization_q()).unwrap();
                assert_eq!(n, expected, "q = {qt}/2 {:?}", kind);
            }
        }
    }

    #[test]
    fn operator_coactions_are_comodules_and_match_tensor_products() {
        let p = standard_corep(h(1));
        let r = standard_corep(h(2));
        for kind in [Kind::Ordinary, Kind::Twisted] {
            for c in check_op_coaction_axioms(&SuQ2, kind, &p, &r) {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
        for c in check_identifications(&SuQ2, &p, &r) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
