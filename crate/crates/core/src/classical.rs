//! The commutative Hopf *-algebra of functions on a finite group.
//!
//! Basis: the point functions `d_g`. Multiplication is pointwise,
//! `Delta(d_g) = sum_{hk = g} d_h (x) d_k`, `eps(d_g) = [g = e]` and
//! `S(d_g) = d_{g^-1}`. A matrix representation `Gamma` gives the
//! corepresentation with coefficients `pi_{jk} = sum_g Gamma(g)_{jk} d_g`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corep::{Corep, OpMatrix};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, LinComb, Pair};
use crate::ito::{is_ito, ItoFamily, Kind};
use crate::report::Check;
use crate::scalar::QScalar;
use crate::wigner::solve_exact;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

/// On-disk form `{order, mul, names}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if names.len() != n {
            return bad(format!("{} names for order {}", names.len(), n));
        }
        if mul.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not closed".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g)) else {
            return bad("no identity".into());
        };
        let mut inv = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == identity && mul[h][g] == identity) {
                Some(h) => inv.push(h),
                None => return bad(format!("{} has no inverse", names[g])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad(format!("not associative at ({}, {}, {})", names[a], names[b], names[c]));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, mul, inv, identity })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let g: GroupJson = serde_json::from_str(text).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        if g.order != g.mul.len() {
            return Err(Error::InvalidGroup(format!("order {} but {} rows", g.order, g.mul.len())));
        }
        let names = if g.names.is_empty() { (0..g.order).map(|i| format!("g{i}")).collect() } else { g.names };
        FiniteGroup::new(names, g.mul)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order(), mul: self.mul.clone(), names: self.names.clone() }
    }

    /// The cyclic group of order 2.
    pub fn z2() -> Self {
        FiniteGroup::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]).expect("valid table")
    }

    /// The symmetric group on three letters, as the symmetries of a triangle:
    /// elements `s^a r^b` with `r` the rotation by `2 pi / 3` and `s` a reflection.
    pub fn s3() -> Self {
        let names = ["e", "r", "r2", "s", "sr", "sr2"].map(String::from).to_vec();
        // s^a r^b * s^c r^d = s^{a+c} r^{(-1)^c b + d}
        let idx = |a: usize, b: usize| 3 * (a % 2) + b % 3;
        let mut mul = vec![vec![0; 6]; 6];
        for (x, row) in mul.iter_mut().enumerate() {
            for (y, out) in row.iter_mut().enumerate() {
                let (a, b, c, d) = (x / 3, x % 3, y / 3, y % 3);
                let b2 = if c == 1 { (3 - b) % 3 } else { b };
                *out = idx(a + c, b2 + d);
            }
        }
        FiniteGroup::new(names, mul).expect("valid table")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }
}

/// The point function `d_g`, identified by the index of `g`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point(pub usize);

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

pub type FnAlgElem = LinComb<Point>;

/// `Fun(G)` as a Hopf *-algebra.
#[derive(Clone, Debug)]
pub struct FunAlg {
    group: Arc<FiniteGroup>,
}

impl FunAlg {
    pub fn new(group: FiniteGroup) -> Self {
        FunAlg { group: Arc::new(group) }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The function with the given values.
    pub fn from_values(&self, values: &[QScalar]) -> Result<FnAlgElem> {
        if values.len() != self.group.order() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} values", self.group.order()),
                got: format!("{}", values.len()),
            });
        }
        Ok(LinComb::from_terms(values.iter().enumerate().map(|(g, v)| (Point(g), v.clone()))))
    }

    pub fn value(&self, f: &FnAlgElem, g: usize) -> QScalar {
        f.coeff(&Point(g))
    }
}

impl HopfAlgebra for FunAlg {
    type Basis = Point;

    fn name(&self) -> String {
        format!("Fun(G), |G| = {}", self.group.order())
    }

    fn one(&self) -> FnAlgElem {
        LinComb::from_terms((0..self.group.order()).map(|g| (Point(g), QScalar::one())))
    }

    fn mul_basis(&self, a: &Point, b: &Point) -> FnAlgElem {
        if a == b {
            LinComb::basis(*a)
        } else {
            LinComb::zero()
        }
    }

    fn coproduct_basis(&self, a: &Point) -> LinComb<Pair<Point>> {
        let n = self.group.order();
        LinComb::from_terms(
            (0..n).map(|h| (Point(h), Point(self.group.mul(self.group.inv(h), a.0)))).map(|p| (p, QScalar::one())),
        )
    }

    fn counit_basis(&self, a: &Point) -> QScalar {
        if a.0 == self.group.identity() {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    }

    fn antipode_basis(&self, a: &Point) -> FnAlgElem {
        LinComb::basis(Point(self.group.inv(a.0)))
    }

    fn antipode_inv_basis(&self, a: &Point) -> FnAlgElem {
        self.antipode_basis(a)
    }

    fn star_basis(&self, a: &Point) -> FnAlgElem {
        LinComb::basis(*a)
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// A matrix representation `g -> Gamma(g)` with real entries.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    pub label: String,
    pub mats: Vec<Vec<Vec<QScalar>>>,
}

fn mat_mul(a: &[Vec<QScalar>], b: &[Vec<QScalar>]) -> Vec<Vec<QScalar>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n).map(|j| row.iter().zip(b).fold(QScalar::zero(), |acc, (x, brow)| acc.add(&x.mul(&brow[j])))).collect()
        })
        .collect()
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, Vec::len)
    }

    pub fn at(&self, g: usize) -> &[Vec<QScalar>] {
        &self.mats[g]
    }

    /// Pairs `(x, y)` with `Gamma(x) Gamma(y) != Gamma(xy)`.
    pub fn homomorphism_failures(&self, group: &FiniteGroup) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for x in 0..group.order() {
            for y in 0..group.order() {
                if mat_mul(&self.mats[x], &self.mats[y]) != self.mats[group.mul(x, y)] {
                    bad.push((x, y));
                }
            }
        }
        bad
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        MatrixRep { label: "trivial".into(), mats: vec![vec![vec![QScalar::one()]]; group.order()] }
    }

    /// `Gamma(g)_{h', h} = [h' = g h]`.
    pub fn regular(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mats = (0..n)
            .map(|g| {
                (0..n)
                    .map(|hp| (0..n).map(|h| if group.mul(g, h) == hp { QScalar::one() } else { QScalar::zero() }).collect())
                    .collect()
            })
            .collect();
        MatrixRep { label: "regular".into(), mats }
    }

    /// Direct sum `self (+) other`.
    pub fn direct_sum(&self, other: &MatrixRep) -> MatrixRep {
        let (d1, d2) = (self.dim(), other.dim());
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                (0..d1 + d2)
                    .map(|i| {
                        (0..d1 + d2)
                            .map(|j| match (i < d1, j < d1) {
                                (true, true) => a[i][j].clone(),
                                (false, false) => b[i - d1][j - d1].clone(),
                                _ => QScalar::zero(),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        MatrixRep { label: format!("{}+{}", self.label, other.label), mats }
    }
}

/// Sign and standard two-dimensional representations of [`FiniteGroup::s3`],
/// the latter real orthogonal with `r` a rotation and `s = diag(1, -1)`.
pub fn s3_irreps() -> [MatrixRep; 3] {
    let g = FiniteGroup::s3();
    let half = QScalar::from_rat(crate::scalar::ratio(1, 2));
    let s3_half = QScalar::from_int(3).sqrt().expect("positive").mul(&half);
    let z = QScalar::zero;
    let rot = vec![vec![half.neg(), s3_half.neg()], vec![s3_half.clone(), half.neg()]];
    let refl = vec![vec![QScalar::one(), z()], vec![z(), QScalar::from_int(-1)]];
    let id = vec![vec![QScalar::one(), z()], vec![z(), QScalar::one()]];
    let rot2 = mat_mul(&rot, &rot);
    let rots = [id, rot, rot2];
    let mut standard = Vec::new();
    let mut sign = Vec::new();
    for a in 0..2 {
        for r in &rots {
            standard.push(if a == 0 { r.clone() } else { mat_mul(&refl, r) });
            sign.push(vec![vec![QScalar::sign(a as i64)]]);
        }
    }
    [
        MatrixRep::trivial(&g),
        MatrixRep { label: "sign".into(), mats: sign },
        MatrixRep { label: "standard".into(), mats: standard },
    ]
}

/// The corepresentation `pi_{jk} = sum_g Gamma(g)_{jk} d_g`; errors unless
/// `Gamma` is a representation.
pub fn corep_from_rep(alg: &FunAlg, rep: &MatrixRep) -> Result<Corep<Point>> {
    let g = alg.group();
    if rep.mats.len() != g.order() {
        return Err(Error::NotARepresentation(format!("{} matrices for order {}", rep.mats.len(), g.order())));
    }
    let d = rep.dim();
    if rep.mats.iter().any(|m| m.len() != d || m.iter().any(|r| r.len() != d)) {
        return Err(Error::NotARepresentation("matrices of unequal size".into()));
    }
    let bad = rep.homomorphism_failures(g);
    if let Some((x, y)) = bad.first() {
        return Err(Error::NotARepresentation(format!(
            "Gamma({})Gamma({}) != Gamma({}{})",
            g.name(*x),
            g.name(*y),
            g.name(*x),
            g.name(*y)
        )));
    }
    let coeffs = (0..d)
        .map(|j| {
            (0..d)
                .map(|k| LinComb::from_terms((0..g.order()).map(|x| (Point(x), rep.mats[x][j][k].clone()))))
                .collect()
        })
        .collect();
    Corep::new(rep.label.clone(), coeffs)
}

/// Components `j` with `Gamma^r(x) Q_j Gamma^p(x^-1) != sum_k Gamma^q(x)_{kj} Q_k` for some `x`.
pub fn pointwise_failures(
    group: &FiniteGroup,
    p: &MatrixRep,
    q: &MatrixRep,
    r: &MatrixRep,
    ops: &[OpMatrix],
) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    let as_rows = |o: &OpMatrix| -> Vec<Vec<QScalar>> {
        (0..o.rows()).map(|i| (0..o.cols()).map(|j| o.get(i, j).clone()).collect()).collect()
    };
    for x in 0..group.order() {
        let left: Vec<Vec<Vec<QScalar>>> =
            ops.iter().map(|o| mat_mul(&mat_mul(r.at(x), &as_rows(o)), p.at(group.inv(x)))).collect();
        for (j, lhs) in left.iter().enumerate() {
            let mut rhs = vec![vec![QScalar::zero(); p.dim()]; r.dim()];
            for (k, o) in ops.iter().enumerate() {
                let c = &q.at(x)[k][j];
                if c.is_zero() {
                    continue;
                }
                for (a, row) in rhs.iter_mut().enumerate() {
                    for (b, v) in row.iter_mut().enumerate() {
                        *v = v.add(&c.mul(o.get(a, b)));
                    }
                }
            }
            if *lhs != rhs {
                bad.push((x, j));
            }
        }
    }
    bad
}

/// The three verdicts on a family `V^p -> V^r` for `q`: the ordinary and
/// twisted coalgebra conditions and the pointwise group condition.
pub fn classical_equivalence_check(
    alg: &FunAlg,
    p: &MatrixRep,
    q: &MatrixRep,
    r: &MatrixRep,
    ops: &[OpMatrix],
) -> Result<[Check; 3]> {
    let (pc, qc, rc) = (corep_from_rep(alg, p)?, corep_from_rep(alg, q)?, corep_from_rep(alg, r)?);
    let mut verdicts = Vec::new();
    for kind in [Kind::Ordinary, Kind::Twisted] {
        let fam = ItoFamily::new(kind, qc.clone(), ops.to_vec(), 1)?;
        let checks = is_ito(alg, &fam, &pc, &rc)?;
        let passed = checks.iter().all(|c| c.passed);
        let detail = checks.iter().map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ");
        verdicts.push(Check::new(kind.as_str(), passed, detail));
    }
    let bad = pointwise_failures(alg.group(), p, q, r, ops);
    verdicts.push(Check::from_failures("pointwise", alg.group().order() * ops.len(), &bad));
    Ok(verdicts.try_into().expect("three verdicts"))
}

/// The group average `Q_j = (1/|G|) sum_y sum_k Gamma^q(y^-1)_{kj} Gamma^r(y) M_k Gamma^p(y^-1)`,
/// which turns any family `M` into one satisfying the pointwise condition.
pub fn twirl(group: &FiniteGroup, p: &MatrixRep, q: &MatrixRep, r: &MatrixRep, seeds: &[OpMatrix]) -> Vec<OpMatrix> {
    let n = QScalar::from_int(group.order() as i64).recip().expect("nonzero order");
    (0..q.dim())
        .map(|j| {
            let mut acc = OpMatrix::zeros(r.dim(), p.dim());
            for y in 0..group.order() {
                let yi = group.inv(y);
                for (k, m) in seeds.iter().enumerate() {
                    let c = &q.at(yi)[k][j];
                    if c.is_zero() {
                        continue;
                    }
                    let conj = OpMatrix::from_fn(r.dim(), p.dim(), |a, b| {
                        let mut v = QScalar::zero();
                        for (c1, ra) in r.at(y)[a].iter().enumerate() {
                            if ra.is_zero() {
                                continue;
                            }
                            for (c2, pb) in p.at(yi).iter().enumerate() {
                                v = v.add(&ra.mul(m.get(c1, c2)).mul(&pb[b]));
                            }
                        }
                        v
                    });
                    acc = acc.add(&conj.scale(c));
                }
            }
            acc.scale(&n)
        })
        .collect()
}

/// Nonzero families for `(p, q, r)` obtained by averaging matrix-unit seeds,
/// one per seed position that survives (duplicates up to scale removed).
pub fn built_families(group: &FiniteGroup, p: &MatrixRep, q: &MatrixRep, r: &MatrixRep) -> Vec<Vec<OpMatrix>> {
    let mut out: Vec<Vec<OpMatrix>> = Vec::new();
    for k in 0..q.dim() {
        for a in 0..r.dim() {
            for b in 0..p.dim() {
                let seeds: Vec<OpMatrix> = (0..q.dim())
                    .map(|kk| if kk == k { OpMatrix::unit(r.dim(), p.dim(), a, b) } else { OpMatrix::zeros(r.dim(), p.dim()) })
                    .collect();
                let fam = twirl(group, p, q, r, &seeds);
                if fam.iter().all(OpMatrix::is_zero) || out.iter().any(|f| proportional(f, &fam)) {
                    continue;
                }
                out.push(fam);
            }
        }
    }
    out
}

fn proportional(a: &[OpMatrix], b: &[OpMatrix]) -> bool {
    let first = a.iter().zip(b).find_map(|(x, y)| {
        x.nonzero().next().map(|(i, j, v)| (v.clone(), y.get(i, j).clone()))
    });
    let Some((va, vb)) = first else { return false };
    a.iter().zip(b).all(|(x, y)| x.scale(&vb) == y.scale(&va))
}

/// A family with integer entries in `[-2, 2]`, reproducible from `seed`.
pub fn random_family(seed: u64, dq: usize, dr: usize, dp: usize) -> Vec<OpMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..dq).map(|_| OpMatrix::from_fn(dr, dp, |_, _| QScalar::from_int(rng.gen_range(-2..=2)))).collect()
}

/// Haar functional as the coefficient of the trivial corepresentation when
/// `f` is expanded in the matrix coefficients of `irreps`. Errors if the
/// coefficients do not span `Fun(G)`.
pub fn haar_fun(alg: &FunAlg, irreps: &[MatrixRep], f: &FnAlgElem) -> Result<QScalar> {
    let g = alg.group();
    let mut cols: Vec<(bool, Vec<QScalar>)> = Vec::new();
    for rep in irreps {
        let trivial = rep.dim() == 1 && rep.mats.iter().all(|m| m[0][0].is_one());
        for j in 0..rep.dim() {
            for k in 0..rep.dim() {
                cols.push((trivial, (0..g.order()).map(|x| rep.mats[x][j][k].clone()).collect()));
            }
        }
    }
    if cols.len() != g.order() {
        return Err(Error::Domain(format!("{} coefficients for a group of order {}", cols.len(), g.order())));
    }
    let a: Vec<Vec<QScalar>> = (0..g.order()).map(|x| cols.iter().map(|(_, c)| c[x].clone()).collect()).collect();
    let b: Vec<QScalar> = (0..g.order()).map(|x| alg.value(f, x)).collect();
    let coeffs = solve_exact(a, b)?.ok_or_else(|| Error::Domain("coefficients do not span".into()))?;
    let pos = cols.iter().position(|(t, _)| *t).ok_or_else(|| Error::Domain("no trivial representation".into()))?;
    Ok(coeffs[pos].clone())
}

/// `(1/|G|) sum_x f(x)`.
pub fn uniform_average(alg: &FunAlg, f: &FnAlgElem) -> QScalar {
    let n = alg.group().order();
    let total = (0..n).fold(QScalar::zero(), |acc, x| acc.add(&alg.value(f, x)));
    total.mul(&QScalar::from_int(n as i64).recip().expect("nonzero order"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::check_comodule;
    use crate::hopf::{check_axioms, tensor};

    #[test]
    fn group_tables() {
        let s3 = FiniteGroup::s3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        // nonabelian
        assert_ne!(s3.mul(1, 3), s3.mul(3, 1));
        assert!(FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![1, 1]]).is_err());
        let round = FiniteGroup::from_json(&serde_json::to_string(&s3.to_json()).unwrap()).unwrap();
        assert_eq!(round, s3);
    }

    #[test]
    fn z2_coproduct_and_axioms() {
        let alg = FunAlg::new(FiniteGroup::z2());
        let d = alg.coproduct(&LinComb::basis(Point(0)));
        let mut expected = tensor(&LinComb::basis(Point(0)), &LinComb::basis(Point(0)));
        expected.add_assign(&tensor(&LinComb::basis(Point(1)), &LinComb::basis(Point(1))));
        assert_eq!(d, expected);
        let s3 = FunAlg::new(FiniteGroup::s3());
        for g in 0..6 {
            let x = LinComb::basis(Point(g));
            assert_eq!(s3.antipode(&s3.antipode(&x)), x);
            assert!(check_axioms(&s3, &x).is_empty());
        }
    }

    #[test]
    fn s3_representations_are_comodules() {
        let alg = FunAlg::new(FiniteGroup::s3());
        for rep in s3_irreps() {
            assert!(rep.homomorphism_failures(alg.group()).is_empty(), "{}", rep.label);
            let c = corep_from_rep(&alg, &rep).unwrap();
            assert!(check_comodule(&alg, &c).is_empty());
        }
        let mut broken = s3_irreps()[2].clone();
        broken.mats[1] = broken.mats[3].clone();
        assert!(matches!(corep_from_rep(&alg, &broken), Err(Error::NotARepresentation(_))));
    }

    #[test]
    fn verdicts_agree_for_built_and_random_families() {
        let alg = FunAlg::new(FiniteGroup::s3());
        let [_, sign, std] = s3_irreps();
        let fams = built_families(alg.group(), &std, &std, &std);
        assert_eq!(fams.len(), 1);
        for ops in [fams[0].clone(), random_family(7, 2, 2, 2)] {
            let v = classical_equivalence_check(&alg, &std, &std, &std, &ops).unwrap();
            assert!(v.iter().all(|c| c.passed == v[0].passed));
        }
        assert!(built_families(alg.group(), &sign, &sign, &std).is_empty());
    }

    #[test]
    fn haar_is_the_average() {
        let alg = FunAlg::new(FiniteGroup::s3());
        let irreps = s3_irreps();
        let values: Vec<QScalar> = (0..6).map(|i| QScalar::from_int(i * i - 2)).collect();
        let f = alg.from_values(&values).unwrap();
        assert_eq!(haar_fun(&alg, &irreps, &f).unwrap(), uniform_average(&alg, &f));
    }
}
