//! Verification suites. Each returns a [`Report`] whose checks are named by
//! what they verify; the command-line front end and the acceptance target
//! both run these.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cg::{cg, direct_product, expand_product, CgKey};
use crate::classical::{
    built_families, classical_equivalence_check, corep_from_rep, haar_fun, random_family, s3_irreps, twirl, uniform_average,
    FiniteGroup, FunAlg, MatrixRep,
};
use crate::corep::{check_comodule, check_unitarity, Corep};
use crate::error::Result;
use crate::fock::{block_family, collapse_lemma, verify_boson_ito, Variant};
use crate::haar::{haar, haar_triple, haar_with, DEFAULT_JMAX};
use crate::hopf::{check_axioms, HopfAlgebra, LinComb};
use crate::ito::{
    build_ito, check_identifications, check_op_coaction_axioms, identity_family, is_ito, ito_identity,
    normalization_q, numeric_multiplicity, triangle, ItoFamily, Kind,
};
use crate::report::{Check, Report};
use crate::scalar::{eval_numeric, q_int, ratio, QScalar, Rat};
use crate::suq2::{dfun, f_matrix, parse_alg, standard_corep, AlgElem, HalfInt, PbwMonomial, SuQ2};
use crate::wigner::{check_wigner_eckart, reduced_matrix_elements};

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

fn labels(jmax: HalfInt) -> Vec<HalfInt> {
    HalfInt::up_to(jmax).collect()
}

fn pm(j: HalfInt) -> Vec<HalfInt> {
    HalfInt::magnetic(j).collect()
}

// ---------------------------------------------------------------- hopf

/// Coproduct and counit on matrix coefficients, the star, antipode and
/// squared-antipode formulas on matrix coefficients, unitarity, the F-matrix
/// relation for `j <= jmax`, and the Hopf axioms on PBW monomials of degree
/// at most `max_degree`.
pub fn hopf_suite(jmax: HalfInt, max_degree: u32) -> Result<Report> {
    let alg = SuQ2;
    let mut report = Report::new("hopf", true);
    let mut comodule = Vec::new();
    let mut star_bad = Vec::new();
    let mut antipode_bad = Vec::new();
    let mut s2_bad = Vec::new();
    let mut unitary_bad = Vec::new();
    let mut f_bad = Vec::new();
    let mut cases = 0;
    for j in labels(jmax) {
        let c = standard_corep(j);
        comodule.extend(check_comodule(&alg, &c).into_iter().map(|f| (j.to_string(), f.row, f.col, f.condition)));
        unitary_bad.extend(check_unitarity(&alg, &c).into_iter().map(|(w, v)| (j.to_string(), w, v, "antipode")));
        unitary_bad.extend(unitarity_products(&alg, &c).into_iter().map(|(w, v, s)| (j.to_string(), w, v, s)));
        let f = f_matrix(j);
        for mp in pm(j) {
            for m in pm(j) {
                cases += 1;
                let d = dfun(j, mp, m)?;
                let diff = m.int_diff(mp).expect("same block");
                // (pi_{m'm})* = (-1)^{m-m'} q^{m-m'} pi_{-m',-m}
                let star = dfun(j, -mp, -m)?.scale(&QScalar::sign(diff as i64).mul(&QScalar::q_pow(diff)));
                if alg.star(&d) != star {
                    star_bad.push((j, mp, m));
                }
                // S(pi_{m'm}) = (-1)^{m'-m} q^{m'-m} pi_{-m,-m'}
                let s = dfun(j, -m, -mp)?.scale(&QScalar::sign(diff as i64).mul(&QScalar::q_pow(-diff)));
                let sd = alg.antipode(&d);
                if sd != s {
                    antipode_bad.push((j, mp, m));
                }
                // S^2(pi_{m'm}) = q^{-2(m-m')} pi_{m'm}
                let s2 = alg.antipode(&sd);
                if s2 != d.scale(&QScalar::q_pow(-2 * diff)) {
                    s2_bad.push((j, mp, m));
                }
                // F_{m'} pi_{m'm} = S^2(pi_{m'm}) F_m
                let (a, b) = (mp.index_in(j).unwrap(), m.index_in(j).unwrap());
                if d.scale(&f[a]) != s2.scale(&f[b]) {
                    f_bad.push((j, mp, m));
                }
            }
        }
    }
    report.push(Check::from_failures("coefficient_coproduct_counit", cases, &comodule));
    report.push(Check::from_failures("coefficient_star", cases, &star_bad));
    report.push(Check::from_failures("coefficient_antipode", cases, &antipode_bad));
    report.push(Check::from_failures("coefficient_antipode_squared", cases, &s2_bad));
    report.push(Check::from_failures("unitarity", cases, &unitary_bad));
    report.push(Check::from_failures("f_matrix_relation", cases, &f_bad));
    let mut axiom_bad = Vec::new();
    let monomials = PbwMonomial::up_to_degree(max_degree);
    for m in &monomials {
        for axiom in check_axioms(&alg, &LinComb::basis(*m)) {
            axiom_bad.push((m.to_string(), axiom));
        }
    }
    report.push(Check::from_failures("hopf_axioms_on_pbw_monomials", monomials.len(), &axiom_bad));
    Ok(report)
}

/// `sum_k pi_{ik} (pi_{jk})* = delta_{ij} = sum_k (pi_{ki})* pi_{kj}`.
fn unitarity_products<A: HopfAlgebra>(alg: &A, c: &Corep<A::Basis>) -> Vec<(usize, usize, &'static str)> {
    let mut bad = Vec::new();
    let n = c.dim();
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { alg.one() } else { LinComb::zero() };
            let mut rows = LinComb::zero();
            let mut cols = LinComb::zero();
            for k in 0..n {
                rows.add_assign(&alg.mul(c.coeff(i, k), &alg.star(c.coeff(j, k))));
                cols.add_assign(&alg.mul(&alg.star(c.coeff(k, i)), c.coeff(k, j)));
            }
            if rows != expected {
                bad.push((i, j, "rows"));
            }
            if cols != expected {
                bad.push((i, j, "columns"));
            }
        }
    }
    bad
}

// ---------------------------------------------------------------- cg

fn qint_f64(n: i64, q: f64) -> f64 {
    if (q - 1.0).abs() < 1e-15 {
        return n as f64;
    }
    (q.powi(n as i32) - q.powi(-n as i32)) / (q - 1.0 / q)
}

fn qfact_f64(n: i64, q: f64) -> f64 {
    (1..=n).map(|k| qint_f64(k, q)).product()
}

/// The two closed forms for coupling to spin 1/2 exactly as usually printed,
/// evaluated in floating point at `q`:
/// `(j+1/2 m+1/2; j -m | 1/2 1/2) = (-1)^{j-m} q^{-j+1/2+3m/2} [j+m+1]^{1/2} B`
/// and `(j+1/2 m-1/2; j -m | 1/2 -1/2) = (-1)^{j-m} q^{1/2+3m/2} [j-m+1]^{1/2} B`
/// with `B = ([2][2j]!/[2j+2]!)^{1/2}`.
pub fn printed_half_coupling(j: HalfInt, m: HalfInt, lower: bool, q: f64) -> f64 {
    let (jf, mf) = (j.twice() as f64 / 2.0, m.twice() as f64 / 2.0);
    let sign = if j.int_diff(m).unwrap_or(0) % 2 == 0 { 1.0 } else { -1.0 };
    let b = (qint_f64(2, q) * qfact_f64(j.twice() as i64, q) / qfact_f64(j.twice() as i64 + 2, q)).sqrt();
    let (expo, n) = if lower {
        (0.5 + 1.5 * mf, (j - m).twice() as i64 / 2 + 1)
    } else {
        (-jf + 0.5 + 1.5 * mf, (j + m).twice() as i64 / 2 + 1)
    };
    sign * q.powf(expo) * qint_f64(n, q).sqrt() * b
}

/// The same closed forms with the exponents `(3m - j)/2` and `(3m + j)/2`,
/// as exact values.
pub fn consistent_half_coupling(j: HalfInt, m: HalfInt, lower: bool) -> Result<QScalar> {
    let sign = QScalar::sign(j.int_diff(m).expect("m in block") as i64);
    let b = q_int(2)
        .mul(&crate::scalar::q_factorial(j.twice() as i64)?)
        .div(&crate::scalar::q_factorial(j.twice() as i64 + 2)?)?
        .sqrt()?;
    // t-exponents 3m - j and 3m + j
    let (e, n) = if lower {
        ((3 * m.twice() + j.twice()) / 2, (j - m).twice() as i64 / 2 + 1)
    } else {
        ((3 * m.twice() - j.twice()) / 2, (j + m).twice() as i64 / 2 + 1)
    };
    Ok(sign.mul(&QScalar::t_pow(e)).mul(&q_int(n).sqrt()?).mul(&b))
}

fn half_coupling_key(j: HalfInt, m: HalfInt, lower: bool) -> CgKey {
    let half = HalfInt::HALF;
    if lower {
        CgKey::new(j + half, m - half, j, -m, half, -half)
    } else {
        CgKey::new(j + half, m + half, j, -m, half, half)
    }
}

/// Classical coefficient by the Racah formula, as `(sign, square)`.
fn racah_classical(k: &CgKey) -> (i32, Rat) {
    let (j1, m1, j2, m2, j, m) = (k.j1.twice(), k.m1.twice(), k.j2.twice(), k.m2.twice(), k.j.twice(), k.m.twice());
    let f = |n: i32| -> BigInt { (1..=n as i64).fold(BigInt::from(1), |a, x| a * x) };
    let hh = |x: i32| x / 2;
    let square_pref = Rat::new(
        BigInt::from(j + 1) * f(hh(j1 + j2 - j)) * f(hh(j1 - j2 + j)) * f(hh(-j1 + j2 + j))
            * f(hh(j1 + m1)) * f(hh(j1 - m1)) * f(hh(j2 + m2)) * f(hh(j2 - m2)) * f(hh(j + m)) * f(hh(j - m)),
        f(hh(j1 + j2 + j) + 1),
    );
    let mut sum = Rat::zero();
    for a in 0.. {
        let args = [a, hh(j1 + j2 - j) - a, hh(j1 - m1) - a, hh(j2 + m2) - a, hh(j - j2 + m1) + a, hh(j - j1 - m2) + a];
        if args[1] < 0 || args[2] < 0 || args[3] < 0 {
            break;
        }
        if args[4] < 0 || args[5] < 0 {
            continue;
        }
        let den = args.iter().fold(BigInt::from(1), |acc, &n| acc * f(n));
        let term = Rat::new(BigInt::from(if a % 2 == 0 { 1 } else { -1 }), den);
        sum += term;
    }
    let sign = if sum.is_zero() { 0 } else if sum.is_positive() { 1 } else { -1 };
    (sign, square_pref * &sum * &sum)
}

/// Closed forms for coupling to spin 1/2 (printed and consistent),
/// orthogonality and completeness for `j1, j2 <= jmax`, the product expansion
/// of matrix coefficients for `j1, j2 <= product_jmax`, and the `q = 1` limit
/// against the classical Racah formula.
pub fn cg_suite(jmax: HalfInt, product_jmax: HalfInt) -> Result<Report> {
    let mut report = Report::new("cg", true);
    // closed forms
    let mut printed_bad = Vec::new();
    let mut consistent_bad = Vec::new();
    let mut closed_cases = 0;
    for j in labels(jmax) {
        for m in pm(j) {
            for lower in [false, true] {
                closed_cases += 1;
                let key = half_coupling_key(j, m, lower);
                let exact = cg(key)?;
                if exact != consistent_half_coupling(j, m, lower)? {
                    consistent_bad.push((j.to_string(), m.to_string(), lower));
                }
                for qv in [ratio(3, 2), ratio(2, 3)] {
                    let ours = eval_numeric(&exact, &qv, 30)?.to_f64();
                    let printed = printed_half_coupling(j, m, lower, crate::scalar::rat_to_f64(&qv));
                    if (ours - printed).abs() > 1e-12 * printed.abs().max(1.0) {
                        printed_bad.push((j.to_string(), m.to_string(), lower, crate::scalar::rat_to_decimal(&qv, 3)));
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("half_coupling_closed_form_printed", 2 * closed_cases, &printed_bad));
    report.push(Check::from_failures("half_coupling_closed_form_consistent", closed_cases, &consistent_bad));

    // orthogonality and completeness
    let mut orth_bad = Vec::new();
    let mut comp_bad = Vec::new();
    let mut orth_cases = 0;
    let mut comp_cases = 0;
    for j1 in labels(jmax) {
        for j2 in labels(jmax) {
            let js: Vec<HalfInt> = ((j1.twice() - j2.twice()).abs()..=j1.twice() + j2.twice()).step_by(2).map(h).collect();
            let coupled: Vec<(HalfInt, HalfInt)> = js.iter().flat_map(|&j| pm(j).into_iter().map(move |m| (j, m))).collect();
            let product: Vec<(HalfInt, HalfInt)> =
                pm(j1).into_iter().flat_map(|a| pm(j2).into_iter().map(move |b| (a, b))).collect();
            let table = |(a, b): (HalfInt, HalfInt), (j, m): (HalfInt, HalfInt)| cg(CgKey::new(j1, a, j2, b, j, m));
            for (x, &s) in coupled.iter().enumerate() {
                for &t in &coupled[x..] {
                    orth_cases += 1;
                    let mut acc = QScalar::zero();
                    for &pr in &product {
                        acc = acc.add(&table(pr, s)?.mul(&table(pr, t)?));
                    }
                    if acc != if s == t { QScalar::one() } else { QScalar::zero() } {
                        orth_bad.push((j1, j2, s, t));
                    }
                }
            }
            for (x, &a) in product.iter().enumerate() {
                for &b in &product[x..] {
                    comp_cases += 1;
                    let mut acc = QScalar::zero();
                    for &c in &coupled {
                        acc = acc.add(&table(a, c)?.mul(&table(b, c)?));
                    }
                    if acc != if a == b { QScalar::one() } else { QScalar::zero() } {
                        comp_bad.push((j1, j2, a, b));
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("orthogonality", orth_cases, &orth_bad));
    report.push(Check::from_failures("completeness", comp_cases, &comp_bad));

    // product expansion
    let mut prod_bad = Vec::new();
    let mut prod_cases = 0;
    for j1 in labels(product_jmax) {
        for j2 in labels(product_jmax) {
            for mp1 in pm(j1) {
                for m1 in pm(j1) {
                    for mp2 in pm(j2) {
                        for m2 in pm(j2) {
                            prod_cases += 1;
                            if expand_product(j1, mp1, m1, j2, mp2, m2)? != direct_product(j1, mp1, m1, j2, mp2, m2)? {
                                prod_bad.push((j1, mp1, m1, j2, mp2, m2));
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("product_expansion", prod_cases, &prod_bad));

    // classical limit, one sign per (j1, j2, j) block
    let one = Rat::from_integer(1.into());
    let tol = Rat::new(1.into(), BigInt::from(10).pow(25));
    let mut lim_bad = Vec::new();
    let mut lim_cases = 0;
    for j1 in labels(jmax) {
        for j2 in labels(jmax) {
            for jt in ((j1.twice() - j2.twice()).abs()..=j1.twice() + j2.twice()).step_by(2) {
                let j = h(jt);
                let mut block_sign = 0;
                for m1 in pm(j1) {
                    for m2 in pm(j2) {
                        let m = m1 + m2;
                        if m.index_in(j).is_none() {
                            continue;
                        }
                        lim_cases += 1;
                        let key = CgKey::new(j1, m1, j2, m2, j, m);
                        let x = eval_numeric(&cg(key)?, &one, 30)?;
                        let (sign, square) = racah_classical(&key);
                        let x2 = x.mul(&x, 200);
                        let close = (&x2.lo - &square).abs() <= tol && (&x2.hi - &square).abs() <= tol;
                        let ours_sign = if x.abs_upper() <= tol { 0 } else if x.mid().is_positive() { 1 } else { -1 };
                        let relative = ours_sign * sign;
                        let sign_ok = if sign == 0 || ours_sign == 0 {
                            sign == ours_sign || square <= tol
                        } else if block_sign == 0 {
                            block_sign = relative;
                            true
                        } else {
                            block_sign == relative
                        };
                        if !close || !sign_ok {
                            lim_bad.push(key);
                        }
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("classical_limit", lim_cases, &lim_bad));
    Ok(report)
}

// ---------------------------------------------------------------- haar

/// Invariance on PBW monomials of degree at most `max_degree`, the value on
/// `UV`, and the closed form for `h((pi^r_{ul})* pi^q_{tk} pi^p_{sj})`
/// against direct evaluation for labels up to `triple_jmax`.
pub fn haar_suite(max_degree: u32, triple_jmax: HalfInt) -> Result<Report> {
    let alg = SuQ2;
    let mut report = Report::new("haar", true);
    let mut inv_bad = Vec::new();
    let monomials = PbwMonomial::up_to_degree(max_degree);
    for m in &monomials {
        let x = LinComb::basis(*m);
        let hx = haar(&x)?;
        let expected = alg.scalar(hx);
        let mut left = AlgElem::zero();
        let mut right = AlgElem::zero();
        for ((a, b), c) in alg.coproduct(&x).terms() {
            left.add_scaled(&LinComb::basis(*b), &haar(&LinComb::basis(*a))?.mul(c));
            right.add_scaled(&LinComb::basis(*a), &haar(&LinComb::basis(*b))?.mul(c));
        }
        if left != expected {
            inv_bad.push((m.to_string(), "left"));
        }
        if right != expected {
            inv_bad.push((m.to_string(), "right"));
        }
    }
    report.push(Check::from_failures("two_sided_invariance", monomials.len(), &inv_bad));

    let uv = haar(&parse_alg("U*V")?)?;
    let expected = QScalar::one().div(&q_int(2))?.neg();
    report.push(Check::new("value_on_uv", uv == expected, format!("h(UV) = {}", uv)).with_sides(uv.to_string(), expected.to_string()));

    let mut triple_bad = Vec::new();
    let mut cases = 0;
    let ls = labels(triple_jmax);
    for &r in &ls {
        for &q in &ls {
            for &p in &ls {
                for u in pm(r) {
                    for l in pm(r) {
                        let star = alg.star(&dfun(r, u, l)?);
                        for t in pm(q) {
                            for k in pm(q) {
                                let left = alg.mul(&star, &dfun(q, t, k)?);
                                for s in pm(p) {
                                    for j in pm(p) {
                                        cases += 1;
                                        let closed = haar_triple(r, u, l, q, t, k, p, s, j)?;
                                        let direct = haar_with_room(&alg.mul(&left, &dfun(p, s, j)?))?;
                                        if closed != direct {
                                            triple_bad.push((r, u, l, q, t, k, p, s, j));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("triple_product_closed_form", cases, &triple_bad));
    Ok(report)
}

fn haar_with_room(x: &AlgElem) -> Result<QScalar> {
    let deg = x.keys().map(|m| m.degree()).max().unwrap_or(0) as i32;
    haar_with(x, h(deg.max(DEFAULT_JMAX.twice())))
}

// ---------------------------------------------------------------- ito

/// Coaction axioms and identifications for `p, r <= small_jmax`; for every
/// triple with labels up to `jmax`, existence against the triangle condition
/// (exact and numeric), the defining condition of the family's own kind on
/// the operator space and on vectors, and the matching identity.
pub fn ito_suite(jmax: HalfInt, small_jmax: HalfInt) -> Result<Report> {
    let alg = SuQ2;
    let mut report = Report::new("ito", true);
    let mut axiom_bad = Vec::new();
    let mut ident_bad = Vec::new();
    let mut small = 0;
    for p in labels(small_jmax) {
        for r in labels(small_jmax) {
            small += 1;
            let (pc, rc) = (standard_corep(p), standard_corep(r));
            for kind in [Kind::Ordinary, Kind::Twisted] {
                for c in check_op_coaction_axioms(&alg, kind, &pc, &rc) {
                    if !c.passed {
                        axiom_bad.push((p, r, c.name));
                    }
                }
            }
            for c in check_identifications(&alg, &pc, &rc) {
                if !c.passed {
                    ident_bad.push((p, r, c.name));
                }
            }
        }
    }
    report.push(Check::from_failures("operator_coaction_axioms", 2 * small, &axiom_bad));
    report.push(Check::from_failures("operator_coaction_identifications", small, &ident_bad));

    let half = standard_corep(HalfInt::HALF);
    let mut id_bad = Vec::new();
    for kind in [Kind::Ordinary, Kind::Twisted] {
        let fam = identity_family(&alg, kind, &half);
        if !is_ito(&alg, &fam, &half, &half)?.iter().all(|c| c.passed) {
            id_bad.push(kind);
        }
    }
    report.push(Check::from_failures("identity_operator_both_kinds", 2, &id_bad));

    let (mut exist_bad, mut numeric_bad, mut def_bad, mut identity_bad) = (vec![], vec![], vec![], vec![]);
    let mut triples = 0;
    let qv = normalization_q();
    for p in labels(jmax) {
        for q in labels(jmax) {
            for r in labels(jmax) {
                for kind in [Kind::Ordinary, Kind::Twisted] {
                    triples += 1;
                    let fams = build_ito(kind, p, q, r)?;
                    let expected = usize::from(triangle(q, p, r));
                    if fams.len() != expected {
                        exist_bad.push((kind, p, q, r));
                    }
                    let (pc, qc, rc) = (standard_corep(p), standard_corep(q), standard_corep(r));
                    if numeric_multiplicity(&alg, kind, &pc, &qc, &rc, &qv)? != expected {
                        numeric_bad.push((kind, p, q, r));
                    }
                    for fam in &fams {
                        if !is_ito(&alg, fam, &pc, &rc)?.iter().all(|c| c.passed) {
                            def_bad.push((kind, p, q, r));
                        }
                        if !ito_identity(&alg, fam, &pc, &rc, kind).passed {
                            identity_bad.push((kind, p, q, r));
                        }
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("existence_matches_triangle", triples, &exist_bad));
    report.push(Check::from_failures("existence_numeric_nullspace", triples, &numeric_bad));
    report.push(Check::from_failures("built_families_satisfy_definition", triples, &def_bad));
    report.push(Check::from_failures("built_families_satisfy_identity", triples, &identity_bad));

    // the two kinds differ at symbolic q
    let h1 = HalfInt::HALF;
    let fam = build_ito(Kind::Ordinary, h1, h1, HalfInt::ONE)?.remove(0);
    let (pc, rc) = (standard_corep(h1), standard_corep(HalfInt::ONE));
    let crossed = is_ito(&alg, &fam.with_kind(Kind::Twisted), &pc, &rc)?.iter().any(|c| !c.passed);
    report.push(Check::new("ordinary_family_fails_twisted_definition", crossed, "(1/2, 1/2, 1)"));
    let swapped = !ito_identity(&alg, &fam, &pc, &rc, Kind::Twisted).passed;
    report.push(Check::new("ordinary_family_fails_swapped_identity", swapped, "(1/2, 1/2, 1)"));
    Ok(report)
}

/// A single triple, for the command line.
pub fn ito_triple_suite(kind: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<Report> {
    let alg = SuQ2;
    let mut report = Report::new("ito", true);
    let fams = build_ito(kind, p, q, r)?;
    report.push(Check::new(
        "existence_matches_triangle",
        fams.len() == usize::from(triangle(q, p, r)),
        format!("{} families", fams.len()),
    ));
    let (pc, rc) = (standard_corep(p), standard_corep(r));
    for fam in &fams {
        report.extend(is_ito(&alg, fam, &pc, &rc)?);
        report.push(ito_identity(&alg, fam, &pc, &rc, kind));
    }
    Ok(report)
}

// ---------------------------------------------------------------- wigner

fn family_or_none(kind: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<Option<ItoFamily<PbwMonomial>>> {
    Ok(build_ito(kind, p, q, r)?.into_iter().next())
}

/// Factorization, round trip and numeric cross-check for every built family
/// with labels up to `jmax`, and failure of the swapped order for the
/// ordinary `(1/2, 1/2, 1)` family.
pub fn wigner_suite(jmax: HalfInt) -> Result<Report> {
    let mut report = Report::new("wigner-eckart", true);
    let (mut fact_bad, mut trip_bad, mut num_bad) = (vec![], vec![], vec![]);
    let mut n = 0;
    for p in labels(jmax) {
        for q in labels(jmax) {
            for r in labels(jmax) {
                for kind in [Kind::Ordinary, Kind::Twisted] {
                    let Some(fam) = family_or_none(kind, p, q, r)? else { continue };
                    n += 1;
                    let rep = check_wigner_eckart(&fam, p, r, kind)?;
                    for c in &rep.checks {
                        if !c.passed {
                            let bucket = match c.name.as_str() {
                                "factorization" => &mut fact_bad,
                                "round_trip" => &mut trip_bad,
                                _ => &mut num_bad,
                            };
                            bucket.push((kind, p, q, r));
                        }
                    }
                }
            }
        }
    }
    report.push(Check::from_failures("factorization_exact", n, &fact_bad));
    report.push(Check::from_failures("reduced_element_round_trip", n, &trip_bad));
    report.push(Check::from_failures("factorization_numeric_3/2", n, &num_bad));
    let h1 = HalfInt::HALF;
    let fam = build_ito(Kind::Ordinary, h1, h1, HalfInt::ONE)?.remove(0);
    let swapped = check_wigner_eckart(&fam, h1, HalfInt::ONE, Kind::Twisted)?;
    let nonzero = swapped.entries.iter().filter(|e| e.residual != "0").count();
    report.push(Check::new(
        "ordinary_family_fails_twisted_order",
        !swapped.factorization,
        format!("{nonzero} nonzero residuals"),
    ));
    Ok(report)
}

/// A single triple, for the command line.
pub fn wigner_triple(kind: Kind, p: HalfInt, q: HalfInt, r: HalfInt) -> Result<Option<crate::wigner::WignerReport>> {
    match family_or_none(kind, p, q, r)? {
        Some(fam) => Ok(Some(check_wigner_eckart(&fam, p, r, kind)?)),
        None => Ok(None),
    }
}

// ---------------------------------------------------------------- boson

/// The four operator pairs against both definitions at truncation `jmax`,
/// the collapse lemma for `j <= 3/2`, and block factorization of the
/// creation pair with a reduced element depending only on `j`.
pub fn boson_suite(jmax: HalfInt) -> Result<Report> {
    let mut report = Report::new("boson", true);
    for v in Variant::ALL {
        for kind in [Kind::Ordinary, Kind::Twisted] {
            let checks = verify_boson_ito(v, kind, jmax)?;
            let own = kind == v.expected_kind();
            for c in checks {
                if c.name.ends_with("_exact") {
                    let name = format!("{}_{}_{}", v.name(), kind.as_str(), if own { "holds" } else { "fails" });
                    report.push(Check::new(name, c.passed == own, c.detail));
                } else {
                    report.push(c);
                }
            }
        }
    }
    for jt in 0..=3 {
        report.push(collapse_lemma(h(jt))?);
    }
    let mut we_bad = Vec::new();
    for jt in 0..=3 {
        let (p, r) = (h(jt), h(jt + 1));
        let fam = block_family(Variant::A37, p, r)?;
        let rep = check_wigner_eckart(&fam, p, r, Kind::Ordinary)?;
        let reduced = reduced_matrix_elements(&fam, p, r)?;
        if !rep.factorization {
            we_bad.push((p.to_string(), reduced[0].to_string()));
        }
    }
    report.push(Check::from_failures("creation_pair_factorizes_by_block", 4, &we_bad));
    Ok(report)
}

// ---------------------------------------------------------------- classical

/// For S3: comodule checks on every irreducible, agreement of the three
/// verdicts on built and random families for every triple of irreducibles,
/// Haar against the uniform average, and the Z2 axioms.
pub fn classical_suite(seed: u64) -> Result<Report> {
    let mut report = Report::new("classical", true);
    let alg = FunAlg::new(FiniteGroup::s3());
    let irreps = s3_irreps();
    let mut comodule_bad = Vec::new();
    for rep in &irreps {
        if !check_comodule(&alg, &corep_from_rep(&alg, rep)?).is_empty() {
            comodule_bad.push(rep.label.clone());
        }
    }
    report.push(Check::from_failures("irreducibles_are_comodules", irreps.len(), &comodule_bad));

    let (mut disagree, mut built_fail, mut random_pass) = (vec![], vec![], vec![]);
    let (mut built, mut random) = (0, 0);
    let mut seed_i = seed;
    for p in &irreps {
        for q in &irreps {
            for r in &irreps {
                let label = format!("{}:{}->{}", q.label, p.label, r.label);
                for ops in built_families(alg.group(), p, q, r) {
                    built += 1;
                    let v = classical_equivalence_check(&alg, p, q, r, &ops)?;
                    if !v.iter().all(|c| c.passed == v[0].passed) {
                        disagree.push(label.clone());
                    }
                    if !v.iter().all(|c| c.passed) {
                        built_fail.push(label.clone());
                    }
                }
                random += 1;
                seed_i = seed_i.wrapping_add(1);
                let ops = random_family(seed_i, q.dim(), r.dim(), p.dim());
                // the group average fixes exactly the intertwining families
                let negative = twirl(alg.group(), p, q, r, &ops) != ops;
                let v = classical_equivalence_check(&alg, p, q, r, &ops)?;
                if !v.iter().all(|c| c.passed == v[0].passed) {
                    disagree.push(format!("random {label}"));
                }
                if v.iter().any(|c| c.passed) == negative {
                    random_pass.push(format!("random {label}"));
                }
            }
        }
    }
    report.push(Check::from_failures("verdicts_agree", built + random, &disagree));
    report.push(Check::from_failures("built_families_pass", built, &built_fail));
    report.push(Check::from_failures("random_families_match_projection", random, &random_pass));
    report.push(Check::new("family_count", built + random >= 20, format!("{built} built, {random} random")));

    let mut haar_bad = Vec::new();
    let mut rng_seed = seed;
    for _ in 0..10 {
        rng_seed = rng_seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let vals: Vec<QScalar> = random_family(rng_seed, 1, 1, 6)[0].entries().to_vec();
        let f = alg.from_values(&vals)?;
        if haar_fun(&alg, &irreps, &f)? != uniform_average(&alg, &f) {
            haar_bad.push(vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        }
    }
    report.push(Check::from_failures("haar_is_uniform_average", 10, &haar_bad));
    report.extend(group_checks("z2", &FunAlg::new(FiniteGroup::z2()))?);
    Ok(report)
}

/// Hopf axioms on point functions and comodule checks for the trivial and
/// regular representations of an arbitrary group.
pub fn group_checks(name: &str, alg: &FunAlg) -> Result<Vec<Check>> {
    let n = alg.group().order();
    let mut axiom_bad = Vec::new();
    for g in 0..n {
        for a in check_axioms(alg, &LinComb::basis(crate::classical::Point(g))) {
            axiom_bad.push((alg.group().name(g).to_string(), a));
        }
    }
    let mut rep_bad = Vec::new();
    for rep in [MatrixRep::trivial(alg.group()), MatrixRep::regular(alg.group())] {
        if !check_comodule(alg, &corep_from_rep(alg, &rep)?).is_empty() {
            rep_bad.push(rep.label);
        }
    }
    Ok(vec![
        Check::from_failures(format!("{name}_hopf_axioms"), n, &axiom_bad),
        Check::from_failures(format!("{name}_trivial_and_regular_comodules"), 2, &rep_bad),
    ])
}

/// Checks for a group loaded from a table.
pub fn loaded_group_suite(group: FiniteGroup) -> Result<Report> {
    let mut report = Report::new("classical", true);
    report.extend(group_checks("group", &FunAlg::new(group))?);
    Ok(report)
}

// ---------------------------------------------------------------- scalars

/// Ring laws, evaluation as a homomorphism at random rational `q`, and
/// stability of the canonical text form, on `samples` random triples.
pub fn scalar_suite(samples: usize, seed: u64) -> Result<Report> {
    use crate::scalar::sample::{random_q, random_scalar};
    use crate::scalar::parse_scalar;
    use rand::SeedableRng;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("scalar", true);
    let (mut ring_bad, mut hom_bad, mut canon_bad) = (vec![], vec![], vec![]);
    let tol = Rat::new(1.into(), BigInt::from(10).pow(20));
    for i in 0..samples {
        let (a, b, c) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
        let laws = [
            a.add(&b) == b.add(&a),
            a.mul(&b) == b.mul(&a),
            a.add(&b).add(&c) == a.add(&b.add(&c)),
            a.mul(&b).mul(&c) == a.mul(&b.mul(&c)),
            a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)),
            a.sub(&a).is_zero(),
            a.mul(&QScalar::one()) == a,
        ];
        if let Some(law) = laws.iter().position(|ok| !ok) {
            ring_bad.push((i, law));
        }
        let q = random_q(&mut rng);
        let ev = |x: &QScalar| eval_numeric(x, &q, 40).map(|v| v.mid());
        let (ea, eb) = (ev(&a)?, ev(&b)?);
        let sum_err = (ev(&a.add(&b))? - (&ea + &eb)).abs();
        let prod_err = (ev(&a.mul(&b))? - (&ea * &eb)).abs();
        let scale = Rat::from_integer(1.into()) + ea.abs() * eb.abs() + ea.abs() + eb.abs();
        if sum_err > &tol * &scale || prod_err > &tol * &scale {
            hom_bad.push((i, crate::scalar::rat_to_decimal(&q, 4)));
        }
        let text = a.to_string();
        let back = parse_scalar(&text)?;
        if back != a || back.to_string() != text {
            canon_bad.push((i, text));
        }
    }
    report.push(Check::from_failures("ring_laws", samples, &ring_bad));
    report.push(Check::from_failures("evaluation_is_homomorphism", samples, &hom_bad));
    report.push(Check::from_failures("canonical_form_idempotent", samples, &canon_bad));
    Ok(report)
}
