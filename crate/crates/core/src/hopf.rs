//! Hopf *-algebras with a distinguished linear basis.
//!
//! Elements are finite `QScalar` combinations of basis keys. A backend only
//! describes what happens to basis elements; everything else extends by
//! linearity here.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use crate::scalar::QScalar;

/// Finite linear combination of keys with nonzero `QScalar` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, QScalar>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, QScalar::one())
    }

    pub fn term(k: K, c: QScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, QScalar)>>(items: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in items {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &QScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> QScalar {
        self.terms.get(k).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn add_term(&mut self, k: K, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            return self.add_assign(other);
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &QScalar::from_int(-1));
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect() }
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<K2: Ord + Clone, F: FnMut(&K) -> LinComb<K2>>(&self, mut f: F) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a coefficient transformation, dropping zeros.
    pub fn map_coeffs<F: FnMut(&QScalar) -> QScalar>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }
}

impl<K: Ord + Clone + Display> Display for LinComb<K> {
    /// Canonical text: `coeff*key` terms joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let key = k.to_string();
            if c.is_one() {
                write!(f, "{}", key)?;
            } else if key == "1" {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, key)?;
            }
        }
        Ok(())
    }
}

/// Basis key of a tensor square.
pub type Pair<B> = (B, B);
/// Basis key of a tensor cube.
pub type Triple<B> = (B, B, B);

/// A Hopf *-algebra described on a linear basis. Star is antilinear, but the
/// scalars in use are real functions of real `q`, so coefficients pass through.
pub trait HopfAlgebra: Sync + Send {
    type Basis: Ord + Clone + Debug + Display + Hash + Send + Sync;

    fn name(&self) -> String;
    fn one(&self) -> LinComb<Self::Basis>;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct_basis(&self, a: &Self::Basis) -> LinComb<Pair<Self::Basis>>;
    fn counit_basis(&self, a: &Self::Basis) -> QScalar;
    fn antipode_basis(&self, a: &Self::Basis) -> LinComb<Self::Basis>;
    fn antipode_inv_basis(&self, a: &Self::Basis) -> LinComb<Self::Basis>;
    fn star_basis(&self, a: &Self::Basis) -> LinComb<Self::Basis>;
    fn is_commutative(&self) -> bool;

    fn scalar(&self, c: QScalar) -> LinComb<Self::Basis> {
        self.one().scale(&c)
    }

    fn mul(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_scaled(&self.mul_basis(a, b), &ca.mul(cb));
            }
        }
        out
    }

    fn coproduct(&self, x: &LinComb<Self::Basis>) -> LinComb<Pair<Self::Basis>> {
        x.map_linear(|a| self.coproduct_basis(a))
    }

    fn counit(&self, x: &LinComb<Self::Basis>) -> QScalar {
        let mut acc = QScalar::zero();
        for (a, c) in x.terms() {
            acc = acc.add(&self.counit_basis(a).mul(c));
        }
        acc
    }

    fn antipode(&self, x: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.map_linear(|a| self.antipode_basis(a))
    }

    fn antipode_inv(&self, x: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.map_linear(|a| self.antipode_inv_basis(a))
    }

    fn star(&self, x: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.map_linear(|a| self.star_basis(a))
    }

    /// Multiplication map `M: A (x) A -> A`.
    fn mul_tensor(&self, t: &LinComb<Pair<Self::Basis>>) -> LinComb<Self::Basis> {
        t.map_linear(|(a, b)| self.mul_basis(a, b))
    }

    /// Componentwise product in `A (x) A`.
    fn mul_pairs(
        &self,
        x: &LinComb<Pair<Self::Basis>>,
        y: &LinComb<Pair<Self::Basis>>,
    ) -> LinComb<Pair<Self::Basis>> {
        let mut out = LinComb::zero();
        for ((a1, a2), ca) in x.terms() {
            for ((b1, b2), cb) in y.terms() {
                let left = self.mul_basis(a1, b1);
                let right = self.mul_basis(a2, b2);
                let c = ca.mul(cb);
                for (l, cl) in left.terms() {
                    let clc = cl.mul(&c);
                    for (r, cr) in right.terms() {
                        out.add_term((l.clone(), r.clone()), clc.mul(cr));
                    }
                }
            }
        }
        out
    }
}

/// `x (x) y`.
pub fn tensor<B: Ord + Clone>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<Pair<B>> {
    let mut out = LinComb::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_term((a.clone(), b.clone()), ca.mul(cb));
        }
    }
    out
}

/// The flip `sigma(a (x) b) = b (x) a`.
pub fn flip<B: Ord + Clone>(t: &LinComb<Pair<B>>) -> LinComb<Pair<B>> {
    LinComb::from_terms(t.terms().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())))
}

/// Applies linear maps on each leg of a pair tensor.
pub fn map_legs<B, F, G>(t: &LinComb<Pair<B>>, mut f: F, mut g: G) -> LinComb<Pair<B>>
where
    B: Ord + Clone,
    F: FnMut(&B) -> LinComb<B>,
    G: FnMut(&B) -> LinComb<B>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in t.terms() {
        let fa = f(a);
        let gb = g(b);
        out.add_scaled(&tensor(&fa, &gb), c);
    }
    out
}

/// Checks coassociativity, the counit axioms and the antipode axioms on `x`.
/// Returns the list of axioms that fail (empty on success).
pub fn check_axioms<A: HopfAlgebra>(alg: &A, x: &LinComb<A::Basis>) -> Vec<&'static str> {
    let mut failed = Vec::new();
    let d = alg.coproduct(x);
    // (Delta (x) id) Delta vs (id (x) Delta) Delta
    let mut left: LinComb<Triple<A::Basis>> = LinComb::zero();
    let mut right: LinComb<Triple<A::Basis>> = LinComb::zero();
    for ((a, b), c) in d.terms() {
        for ((a1, a2), ca) in alg.coproduct_basis(a).terms() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), ca.mul(c));
        }
        for ((b1, b2), cb) in alg.coproduct_basis(b).terms() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), cb.mul(c));
        }
    }
    if left != right {
        failed.push("coassociativity");
    }
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    let mut l = LinComb::zero();
    let mut r = LinComb::zero();
    for ((a, b), c) in d.terms() {
        l.add_term(b.clone(), alg.counit_basis(a).mul(c));
        r.add_term(a.clone(), alg.counit_basis(b).mul(c));
    }
    if &l != x || &r != x {
        failed.push("counit");
    }
    // M (S (x) id) Delta = eps 1 = M (id (x) S) Delta
    let e = alg.scalar(alg.counit(x));
    let s_left = alg.mul_tensor(&map_legs(&d, |a| alg.antipode_basis(a), |b| LinComb::basis(b.clone())));
    let s_right = alg.mul_tensor(&map_legs(&d, |a| LinComb::basis(a.clone()), |b| alg.antipode_basis(b)));
    if s_left != e || s_right != e {
        failed.push("antipode");
    }
    failed
}
