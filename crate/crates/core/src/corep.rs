//! Finite-dimensional corepresentations over any [`HopfAlgebra`] backend,
//! operator spaces `L^{pr}` and direct sums of carrier spaces.
//!
//! Indices are 0-based. For SU_q(2) blocks, index `i` is the magnetic label
//! `m = j - i` (rows and columns run `m = j, ..., -j`). Composite indices of
//! tensor products are flattened row-major: `(s, t) -> s * d2 + t`.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{tensor, HopfAlgebra, LinComb, Pair};
use crate::scalar::QScalar;
use crate::suq2::HalfInt;

/// `pi(v_i) = sum_k v_k (x) coeffs[k][i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Corep<B: Ord> {
    label: String,
    spin: Option<HalfInt>,
    coeffs: Vec<Vec<LinComb<B>>>,
}

impl<B: Ord + Clone> Corep<B> {
    /// Fails unless `coeffs` is a nonempty square array.
    pub fn new(label: impl Into<String>, coeffs: Vec<Vec<LinComb<B>>>) -> Result<Self> {
        let d = coeffs.len();
        if d == 0 {
            return Err(Error::ShapeMismatch { expected: "nonempty square array".into(), got: "0 rows".into() });
        }
        if let Some(row) = coeffs.iter().find(|row| row.len() != d) {
            return Err(Error::ShapeMismatch {
                expected: format!("{d} columns"),
                got: format!("{} columns", row.len()),
            });
        }
        Ok(Corep { label: label.into(), spin: None, coeffs })
    }

    /// The one-dimensional corepresentation `v -> v (x) 1`.
    pub fn trivial<A: HopfAlgebra<Basis = B>>(alg: &A) -> Self {
        Corep { label: "trivial".into(), spin: Some(HalfInt::ZERO), coeffs: vec![vec![alg.one()]] }
    }

    /// Tags the corepresentation with the SU_q(2) label it is equal to.
    pub fn with_spin(mut self, j: HalfInt) -> Self {
        self.spin = Some(j);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn spin(&self) -> Option<HalfInt> {
        self.spin
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, j: usize, k: usize) -> &LinComb<B> {
        &self.coeffs[j][k]
    }

    pub fn coeffs(&self) -> &[Vec<LinComb<B>>] {
        &self.coeffs
    }

    /// Entrywise image under a linear map.
    pub fn map_entries<F: FnMut(&LinComb<B>) -> LinComb<B>>(&self, label: String, mut f: F) -> Self {
        let coeffs = self.coeffs.iter().map(|row| row.iter().map(&mut f).collect()).collect();
        Corep { label, spin: None, coeffs }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, dim: self.dim() })
        }
    }
}

/// Element of `V (x) A`: basis index to algebra leg, zero legs absent.
pub type VectorTensor<B> = BTreeMap<usize, LinComb<B>>;

/// `out[k] += c * x`, dropping legs that cancel.
pub fn vt_add<B: Ord + Clone>(out: &mut VectorTensor<B>, k: usize, x: &LinComb<B>, c: &QScalar) {
    let leg = out.entry(k).or_default();
    leg.add_scaled(x, c);
    if leg.is_zero() {
        out.remove(&k);
    }
}

/// `pi(v_i) = sum_k v_k (x) pi_{ki}`.
pub fn coaction_apply<B: Ord + Clone>(c: &Corep<B>, i: usize) -> Result<VectorTensor<B>> {
    c.check_index(i)?;
    Ok((0..c.dim())
        .filter(|&k| !c.coeffs[k][i].is_zero())
        .map(|k| (k, c.coeffs[k][i].clone()))
        .collect())
}

/// An entry `(j, k)` of a corepresentation violating a comodule condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryFailure {
    pub row: usize,
    pub col: usize,
    pub condition: &'static str,
}

/// Checks `Delta(pi_{jk}) = sum_l pi_{jl} (x) pi_{lk}` and `eps(pi_{jk}) = delta_{jk}`.
pub fn check_comodule<A: HopfAlgebra>(alg: &A, c: &Corep<A::Basis>) -> Vec<EntryFailure> {
    let d = c.dim();
    let mut failures = Vec::new();
    for j in 0..d {
        for k in 0..d {
            let lhs = alg.coproduct(&c.coeffs[j][k]);
            let mut rhs: LinComb<Pair<A::Basis>> = LinComb::zero();
            for l in 0..d {
                rhs.add_assign(&tensor(&c.coeffs[j][l], &c.coeffs[l][k]));
            }
            if lhs != rhs {
                failures.push(EntryFailure { row: j, col: k, condition: "coproduct" });
            }
            let expected = if j == k { QScalar::one() } else { QScalar::zero() };
            if alg.counit(&c.coeffs[j][k]) != expected {
                failures.push(EntryFailure { row: j, col: k, condition: "counit" });
            }
        }
    }
    failures
}

fn tensor_with<A: HopfAlgebra>(
    alg: &A,
    c1: &Corep<A::Basis>,
    c2: &Corep<A::Basis>,
    twisted: bool,
) -> Corep<A::Basis> {
    let (d1, d2) = (c1.dim(), c2.dim());
    let mut coeffs = vec![vec![LinComb::zero(); d1 * d2]; d1 * d2];
    for s in 0..d1 {
        for t in 0..d2 {
            for j in 0..d1 {
                for k in 0..d2 {
                    let (a, b) = (&c1.coeffs[s][j], &c2.coeffs[t][k]);
                    coeffs[s * d2 + t][j * d2 + k] = if twisted { alg.mul(b, a) } else { alg.mul(a, b) };
                }
            }
        }
    }
    let op = if twisted { "(x)~" } else { "(x)" };
    Corep { label: format!("{} {} {}", c1.label, op, c2.label), spin: None, coeffs }
}

/// `(c1 (x) c2)_{st,jk} = c1_{sj} c2_{tk}`.
pub fn tensor_ordinary<A: HopfAlgebra>(alg: &A, c1: &Corep<A::Basis>, c2: &Corep<A::Basis>) -> Corep<A::Basis> {
    tensor_with(alg, c1, c2, false)
}

/// `(c1 (x)~ c2)_{st,jk} = c2_{tk} c1_{sj}`.
pub fn tensor_twisted<A: HopfAlgebra>(alg: &A, c1: &Corep<A::Basis>, c2: &Corep<A::Basis>) -> Corep<A::Basis> {
    tensor_with(alg, c1, c2, true)
}

/// Coefficients `(pi_{jk})*`.
pub fn conjugate<A: HopfAlgebra>(alg: &A, c: &Corep<A::Basis>) -> Corep<A::Basis> {
    c.map_entries(format!("bar({})", c.label), |x| alg.star(x))
}

/// Coefficients `S^2(pi_{jk})`.
pub fn double_contragredient<A: HopfAlgebra>(alg: &A, c: &Corep<A::Basis>) -> Corep<A::Basis> {
    c.map_entries(format!("{}++", c.label), |x| alg.antipode(&alg.antipode(x)))
}

/// Pairs `(w, v)` of basis indices where `S(pi_{wv}) != (pi_{vw})*`, the
/// coefficient form of unitarity with an orthonormal basis.
pub fn check_unitarity<A: HopfAlgebra>(alg: &A, c: &Corep<A::Basis>) -> Vec<(usize, usize)> {
    let d = c.dim();
    let mut bad = Vec::new();
    for w in 0..d {
        for v in 0..d {
            if alg.antipode(&c.coeffs[w][v]) != alg.star(&c.coeffs[v][w]) {
                bad.push((w, v));
            }
        }
    }
    bad
}

/// Checks that the `d_t x d_q` scalar array `c` intertwines `t` with `q`:
/// `sum_b t_{ab} c_{bj} = sum_k c_{ak} q_{kj}`. Returns the failing `(a, j)`.
pub fn check_intertwiner<B: Ord + Clone>(t: &Corep<B>, c: &[Vec<QScalar>], q: &Corep<B>) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for a in 0..t.dim() {
        for j in 0..q.dim() {
            let mut lhs = LinComb::zero();
            for (b, row) in c.iter().enumerate() {
                lhs.add_scaled(&t.coeffs[a][b], &row[j]);
            }
            let mut rhs = LinComb::zero();
            for k in 0..q.dim() {
                rhs.add_scaled(&q.coeffs[k][j], &c[a][k]);
            }
            if lhs != rhs {
                bad.push((a, j));
            }
        }
    }
    bad
}

/// A linear map `V^p -> V^r` as a `rows x cols` array, `rows = d_r`, `cols = d_p`.
/// Entry `(n, i)` is `<v^r_n, Q(v^p_i)>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QScalar>,
}

impl OpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        OpMatrix { rows, cols, entries: vec![QScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QScalar::one());
        }
        m
    }

    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(row, col, QScalar::one());
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> QScalar>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        OpMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &QScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QScalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QScalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &QScalar)> {
        let cols = self.cols;
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn add(&self, o: &OpMatrix) -> OpMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in OpMatrix::add");
        OpMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> OpMatrix {
        OpMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a.mul(c)).collect() }
    }

    /// Composition `self . o`.
    pub fn compose(&self, o: &OpMatrix) -> Result<OpMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.cols),
                got: format!("{} rows", o.rows),
            });
        }
        let mut out = OpMatrix::zeros(self.rows, o.cols);
        for (r, k, a) in self.nonzero() {
            for c in 0..o.cols {
                let b = o.get(k, c);
                if !b.is_zero() {
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Places `self` at `(row_off, col_off)` inside a `rows x cols` zero matrix.
    pub fn embed(&self, rows: usize, cols: usize, row_off: usize, col_off: usize) -> OpMatrix {
        let mut out = OpMatrix::zeros(rows, cols);
        for (r, c, v) in self.nonzero() {
            out.set(r + row_off, c + col_off, v.clone());
        }
        out
    }

    /// The `rows x cols` sub-block starting at `(row_off, col_off)`.
    pub fn block(&self, row_off: usize, col_off: usize, rows: usize, cols: usize) -> OpMatrix {
        OpMatrix::from_fn(rows, cols, |r, c| self.get(r + row_off, c + col_off).clone())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[QScalar] {
        &self.entries
    }

    /// `Q(v)` for a coordinate vector `v`.
    pub fn apply(&self, v: &BTreeMap<usize, QScalar>) -> BTreeMap<usize, QScalar> {
        let mut out = BTreeMap::new();
        for (&k, x) in v {
            for n in 0..self.rows {
                let a = self.get(n, k);
                if !a.is_zero() {
                    let e: &mut QScalar = out.entry(n).or_insert_with(QScalar::zero);
                    *e = e.add(&a.mul(x));
                }
            }
        }
        out.retain(|_, x: &mut QScalar| !x.is_zero());
        out
    }
}

/// `P^{pr}_{ij}`: sends `v^p_i` to `v^r_j` and the other basis vectors to zero.
pub fn projector<B: Ord + Clone>(p: &Corep<B>, r: &Corep<B>, i: usize, j: usize) -> Result<OpMatrix> {
    p.check_index(i)?;
    r.check_index(j)?;
    Ok(OpMatrix::unit(r.dim(), p.dim(), j, i))
}

/// Direct sum of carrier spaces, with a block-diagonal coaction.
#[derive(Clone, Debug)]
pub struct BigSpace<B: Ord> {
    blocks: Vec<Corep<B>>,
    offsets: Vec<usize>,
    dim: usize,
}

impl<B: Ord + Clone> BigSpace<B> {
    pub fn new(blocks: Vec<Corep<B>>) -> Self {
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut dim = 0;
        for b in &blocks {
            offsets.push(dim);
            dim += b.dim();
        }
        BigSpace { blocks, offsets, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[Corep<B>] {
        &self.blocks
    }

    pub fn offset(&self, block: usize) -> usize {
        self.offsets[block]
    }

    /// Block number and local index of a global index.
    pub fn locate(&self, idx: usize) -> Result<(usize, usize)> {
        if idx >= self.dim {
            return Err(Error::IndexOutOfRange { index: idx, dim: self.dim });
        }
        let b = self.offsets.partition_point(|&o| o <= idx) - 1;
        Ok((b, idx - self.offsets[b]))
    }

    /// The coaction on a global basis vector, with global indices.
    pub fn coaction_apply(&self, idx: usize) -> Result<VectorTensor<B>> {
        let (b, i) = self.locate(idx)?;
        let off = self.offsets[b];
        Ok(coaction_apply(&self.blocks[b], i)?.into_iter().map(|(k, x)| (k + off, x)).collect())
    }

    /// Embeds a map `block from -> block to` as an operator on the whole space.
    pub fn embed_op(&self, op: &OpMatrix, from: usize, to: usize) -> OpMatrix {
        op.embed(self.dim, self.dim, self.offsets[to], self.offsets[from])
    }
}

/// Serialized form of a corepresentation with coefficients in canonical text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorepJson {
    pub label: String,
    pub dim: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl<B: Ord + Clone + Display> Corep<B> {
    pub fn to_json(&self) -> CorepJson {
        CorepJson {
            label: self.label.clone(),
            dim: self.dim(),
            coeffs: self.coeffs.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suq2::{parse_alg, standard_corep, Gen, SuQ2};

    fn spin(twice: i32) -> Corep<crate::suq2::PbwMonomial> {
        standard_corep(HalfInt::from_twice(twice))
    }

    #[test]
    fn coaction_on_top_vector() {
        let v = coaction_apply(&spin(1), 0).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[&0], SuQ2.gen(Gen::X));
        assert_eq!(v[&1], SuQ2.gen(Gen::V));
        assert!(coaction_apply(&spin(1), 2).is_err());
        let v = coaction_apply(&spin(2), 0).unwrap();
        assert_eq!(v[&1], parse_alg("q^(1/2)*sqrt(q+q^-1)*X*V").unwrap());
    }

    #[test]
    fn comodule_check_flags_corrupted_entry() {
        assert!(check_comodule(&SuQ2, &spin(1)).is_empty());
        let mut coeffs = spin(1).coeffs().to_vec();
        coeffs[0][0] = parse_alg("X + U").unwrap();
        let bad = Corep::new("bad", coeffs).unwrap();
        let failures = check_comodule(&SuQ2, &bad);
        assert!(failures.iter().any(|f| (f.row, f.col) == (0, 0)));
        assert!(failures.iter().all(|f| (f.row, f.col) == (0, 0) || f.condition == "coproduct"));
    }

    #[test]
    fn tensor_entries() {
        let h = spin(1);
        let o = tensor_ordinary(&SuQ2, &h, &h);
        assert_eq!(o.coeff(0, 0), &parse_alg("X^2").unwrap());
        assert_eq!(o.coeff(1, 0), &parse_alg("X*V").unwrap());
        let t = tensor_twisted(&SuQ2, &h, &h);
        assert_eq!(t.coeff(1, 0), &parse_alg("q*X*V").unwrap());
        let triv = Corep::trivial(&SuQ2);
        assert_eq!(tensor_ordinary(&SuQ2, &h, &triv).coeffs(), h.coeffs());
        assert_eq!(tensor_twisted(&SuQ2, &h, &triv).coeffs(), h.coeffs());
    }

    #[test]
    fn projector_shape() {
        let p = projector(&spin(1), &spin(2), 0, 2).unwrap();
        assert_eq!((p.rows(), p.cols()), (3, 2));
        assert_eq!(p.nonzero().map(|(r, c, _)| (r, c)).collect::<Vec<_>>(), vec![(2, 0)]);
        assert!(projector(&spin(1), &spin(2), 2, 0).is_err());
    }

    #[test]
    fn big_space_locates_blocks() {
        let s = BigSpace::new(vec![spin(0), spin(1), spin(2)]);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.locate(3).unwrap(), (2, 0));
        let v = s.coaction_apply(1).unwrap();
        assert_eq!(v.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
    }
}
