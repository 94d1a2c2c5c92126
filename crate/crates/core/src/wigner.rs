//! Wigner–Eckart factorization of tensor-operator matrix elements.
//!
//! For a family `Q_k: V^p -> V^r` the matrix elements are read directly from
//! the operators: `<v^r_l, Q_k v^p_j> = Q_k[l][j]`. They should factor as
//! `sum_alpha C_alpha(k, j, l) R_alpha`, where `C_alpha` is a Clebsch–Gordan
//! table (`(q k; p j | r l)` for ordinary families, `(p j; q k | r l)` for
//! twisted ones on SU_q(2)).

use serde::Serialize;

use crate::cg::{cg, CgKey};
use crate::error::{Error, Result};
use crate::ito::{normalization_q, ItoFamily, Kind};
use crate::report::Check;
use crate::scalar::{eval_numeric, QScalar, Rat};
use crate::suq2::{f_matrix, HalfInt, PbwMonomial};

/// Clebsch–Gordan table `entries[k][j][l]` for one multiplicity index.
#[derive(Clone, Debug, PartialEq)]
pub struct CgTable {
    pub entries: Vec<Vec<Vec<QScalar>>>,
}

impl CgTable {
    pub fn get(&self, k: usize, j: usize, l: usize) -> &QScalar {
        &self.entries[k][j][l]
    }

    /// `(d_q, d_p, d_r)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        let dq = self.entries.len();
        let dp = self.entries.first().map_or(0, Vec::len);
        let dr = self.entries.first().and_then(|x| x.first()).map_or(0, Vec::len);
        (dq, dp, dr)
    }
}

/// Everything the factorization needs besides the family: one table per
/// multiplicity index and the diagonal of `(F^r)^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerData {
    pub tables: Vec<CgTable>,
    pub finv: Vec<QScalar>,
}

/// Tables for SU_q(2) labels, with the argument order of `order`.
pub fn suq2_data(order: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<WignerData> {
    let mut entries = Vec::with_capacity(q.dim());
    for k in HalfInt::magnetic(q) {
        let mut by_j = Vec::with_capacity(p.dim());
        for j in HalfInt::magnetic(p) {
            let mut by_l = Vec::with_capacity(r.dim());
            for l in HalfInt::magnetic(r) {
                let key = match order {
                    Kind::Ordinary => CgKey::new(q, k, p, j, r, l),
                    Kind::Twisted => CgKey::new(p, j, q, k, r, l),
                };
                by_l.push(cg(key)?);
            }
            by_j.push(by_l);
        }
        entries.push(by_j);
    }
    let finv = f_matrix(r).iter().map(QScalar::recip).collect::<Result<Vec<_>>>()?;
    Ok(WignerData { tables: vec![CgTable { entries }], finv })
}

fn check_shapes<B: Ord + Clone>(family: &ItoFamily<B>, data: &WignerData) -> Result<()> {
    let (dr, dp) = family.shape();
    for t in &data.tables {
        if t.shape() != (family.ops.len(), dp, dr) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}x{}", family.ops.len(), dp, dr),
                got: format!("{:?}", t.shape()),
            });
        }
    }
    if data.finv.len() != dr {
        return Err(Error::ShapeMismatch { expected: format!("{dr} weights"), got: format!("{}", data.finv.len()) });
    }
    Ok(())
}

/// Reduced matrix elements, one per multiplicity index.
///
/// With a single table this is the weighted contraction
/// `sum_{t,s,u} Q_t[u][s] C(t, s, u) finv_u / tr(finv)`; with several tables
/// the factorization is solved exactly, and an error is returned when the
/// matrix elements are not a combination of the tables.
pub fn reduced_with<B: Ord + Clone>(family: &ItoFamily<B>, data: &WignerData) -> Result<Vec<QScalar>> {
    check_shapes(family, data)?;
    let (dr, dp) = family.shape();
    if data.tables.len() == 1 {
        let table = &data.tables[0];
        let trace = data.finv.iter().fold(QScalar::zero(), |a, x| a.add(x));
        let mut acc = QScalar::zero();
        for (t, op) in family.ops.iter().enumerate() {
            for (u, s, v) in op.nonzero() {
                let c = table.get(t, s, u);
                if !c.is_zero() {
                    acc = acc.add(&v.mul(c).mul(&data.finv[u]));
                }
            }
        }
        return Ok(vec![acc.div(&trace)?]);
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (k, op) in family.ops.iter().enumerate() {
        for j in 0..dp {
            for l in 0..dr {
                a.push(data.tables.iter().map(|t| t.get(k, j, l).clone()).collect());
                b.push(op.get(l, j).clone());
            }
        }
    }
    solve_exact(a, b)?.ok_or_else(|| Error::Domain("matrix elements do not factorize".into()))
}

/// Reduced matrix elements of an SU_q(2) family, using the order of its kind.
pub fn reduced_matrix_elements(family: &ItoFamily<PbwMonomial>, p: HalfInt, r: HalfInt) -> Result<Vec<QScalar>> {
    let q = spin_of(family)?;
    reduced_with(family, &suq2_data(family.kind, p, q, r)?)
}

fn spin_of(family: &ItoFamily<PbwMonomial>) -> Result<HalfInt> {
    family
        .qcorep
        .spin()
        .ok_or_else(|| Error::Domain(format!("corepresentation {} has no spin label", family.qcorep.label())))
}

/// Solves `a x = b` exactly. Pivots must be invertible single-term values;
/// returns `Ok(None)` when the system is inconsistent. Free unknowns are set to zero.
pub fn solve_exact(mut a: Vec<Vec<QScalar>>, mut b: Vec<QScalar>) -> Result<Option<Vec<QScalar>>> {
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let mut chosen = None;
        let mut blocked = false;
        for row in rank..a.len() {
            if a[row][col].is_zero() {
                continue;
            }
            match a[row][col].recip() {
                Ok(inv) => {
                    chosen = Some((row, inv));
                    break;
                }
                Err(Error::UnsupportedDivision(_)) => blocked = true,
                Err(e) => return Err(e),
            }
        }
        let Some((row, inv)) = chosen else {
            if blocked {
                return Err(Error::UnsupportedDivision(0));
            }
            continue;
        };
        a.swap(rank, row);
        b.swap(rank, row);
        let prow: Vec<QScalar> = a[rank].iter().map(|x| x.mul(&inv)).collect();
        let pb = b[rank].mul(&inv);
        a[rank] = prow.clone();
        b[rank] = pb.clone();
        for i in 0..a.len() {
            if i == rank || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for (x, y) in a[i].iter_mut().zip(&prow) {
                *x = x.sub(&f.mul(y));
            }
            b[i] = b[i].sub(&f.mul(&pb));
        }
        pivots.push(col);
        rank += 1;
    }
    if b[rank..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut x = vec![QScalar::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = b[i].clone();
    }
    Ok(Some(x))
}

/// One matrix element and its deviation from the factorized form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub k: usize,
    pub j: usize,
    pub l: usize,
    pub element: String,
    pub residual: String,
}

/// Result of a factorization check.
#[derive(Clone, Debug, Serialize)]
pub struct WignerReport {
    pub reduced_elements: Vec<String>,
    pub factorization: bool,
    pub entries: Vec<Residual>,
    pub checks: Vec<Check>,
}

/// Checks the factorization with the given tables. Checks reported:
/// `factorization` (exact, every entry), `round_trip` (the factorized family
/// has the same reduced elements) and `numeric` (entries at `q = 3/2`).
pub fn check_with<B: Ord + Clone>(family: &ItoFamily<B>, data: &WignerData) -> Result<WignerReport> {
    check_shapes(family, data)?;
    let (dr, dp) = family.shape();
    let reduced = match reduced_with(family, data) {
        Ok(r) => r,
        Err(Error::Domain(_)) => vec![QScalar::zero(); data.tables.len()],
        Err(e) => return Err(e),
    };
    let predicted = |k: usize, j: usize, l: usize| {
        data.tables.iter().zip(&reduced).fold(QScalar::zero(), |acc, (t, r)| acc.add(&t.get(k, j, l).mul(r)))
    };
    let mut entries = Vec::new();
    let mut bad = Vec::new();
    let mut numeric_bad = Vec::new();
    let qv = normalization_q();
    let tol = Rat::new(1.into(), num_bigint::BigInt::from(10).pow(20));
    for (k, op) in family.ops.iter().enumerate() {
        for j in 0..dp {
            for l in 0..dr {
                let element = op.get(l, j);
                let res = element.sub(&predicted(k, j, l));
                if !res.is_zero() {
                    bad.push((k, j, l));
                }
                let num = eval_numeric(&res, &qv, 30)?;
                if num.abs_upper() > tol {
                    numeric_bad.push((k, j, l));
                }
                entries.push(Residual { k, j, l, element: element.to_string(), residual: res.to_string() });
            }
        }
    }
    let total = family.ops.len() * dp * dr;
    let factorization = bad.is_empty();
    let mut checks = vec![
        Check::from_failures("factorization", total, &bad),
        Check::from_failures("numeric_at_3/2", total, &numeric_bad),
    ];
    let rebuilt = ItoFamily {
        ops: (0..family.ops.len())
            .map(|k| crate::corep::OpMatrix::from_fn(dr, dp, |l, j| predicted(k, j, l)))
            .collect(),
        ..family.clone()
    };
    let again = reduced_with(&rebuilt, data)?;
    checks.push(Check::new(
        "round_trip",
        again == reduced,
        format!("{} reduced elements", reduced.len()),
    ));
    Ok(WignerReport {
        reduced_elements: reduced.iter().map(|r| r.to_string()).collect(),
        factorization,
        entries,
        checks,
    })
}

/// Factorization check for an SU_q(2) family, with the Clebsch–Gordan
/// argument order of `order` (normally the family's own kind).
pub fn check_wigner_eckart(
    family: &ItoFamily<PbwMonomial>,
    p: HalfInt,
    r: HalfInt,
    order: Kind,
) -> Result<WignerReport> {
    let q = spin_of(family)?;
    check_with(family, &suq2_data(order, p, q, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::OpMatrix;
    use crate::ito::build_ito;
    use crate::scalar::q_int;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn built_families_factorize_in_their_own_order() {
        for kind in [Kind::Ordinary, Kind::Twisted] {
            let fam = &build_ito(kind, h(1), h(1), h(2)).unwrap()[0];
            let rep = check_wigner_eckart(fam, h(1), h(2), kind).unwrap();
            assert!(rep.factorization, "{:?}", kind);
            assert!(rep.checks.iter().all(|c| c.passed));
            let swapped = check_wigner_eckart(fam, h(1), h(2), kind.other()).unwrap();
            assert!(!swapped.factorization, "{:?}", kind);
        }
    }

    #[test]
    fn zero_family_and_scaling() {
        let fam = build_ito(Kind::Ordinary, h(2), h(2), h(2)).unwrap().remove(0);
        let zero = fam.scale(&QScalar::zero());
        assert!(reduced_matrix_elements(&zero, h(2), h(2)).unwrap()[0].is_zero());
        let lambda = q_int(3);
        let r = reduced_matrix_elements(&fam, h(2), h(2)).unwrap();
        let scaled = reduced_matrix_elements(&fam.scale(&lambda), h(2), h(2)).unwrap();
        assert_eq!(scaled[0], r[0].mul(&lambda));
    }

    #[test]
    fn exact_solver() {
        let one = QScalar::one;
        let a = vec![vec![one(), QScalar::zero()], vec![QScalar::zero(), q_int(2)], vec![one(), one()]];
        let b = vec![one(), q_int(2), one().add(&one())];
        assert_eq!(solve_exact(a.clone(), b).unwrap().unwrap(), vec![one(), one()]);
        let inconsistent = vec![one(), q_int(2), QScalar::zero()];
        assert!(solve_exact(a, inconsistent).unwrap().is_none());
    }

    #[test]
    fn two_tables_recover_both_reduced_elements() {
        // two independent tables of shape 1x1x2; the family is their combination
        let t1 = CgTable { entries: vec![vec![vec![QScalar::one(), QScalar::zero()]]] };
        let t2 = CgTable { entries: vec![vec![vec![QScalar::one(), QScalar::one()]]] };
        let data = WignerData { tables: vec![t1, t2], finv: vec![QScalar::one(); 2] };
        let op = OpMatrix::from_fn(2, 1, |l, _| if l == 0 { q_int(3) } else { q_int(2) });
        let fam = ItoFamily {
            kind: Kind::Ordinary,
            qcorep: crate::corep::Corep::trivial(&crate::suq2::SuQ2),
            ops: vec![op],
            alpha: 2,
        };
        let r = reduced_with(&fam, &data).unwrap();
        assert_eq!(r, vec![q_int(3).sub(&q_int(2)), q_int(2)]);
        assert!(check_with(&fam, &data).unwrap().factorization);
    }
}
