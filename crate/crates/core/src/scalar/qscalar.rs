//! Rational functions in `t` extended by square roots of square-free polynomials.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::poly::{rat, LaurentPoly, Rat};
use super::radical::{sqrt_ratfn, Radicand};
use super::ratfn::RationalFn;
use crate::error::{Error, Result};

/// Canonical sum `sum_i c_i * sqrt(s_i)` with distinct square-free radicands,
/// sorted by radicand, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QScalar {
    terms: Vec<(Radicand, RationalFn)>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ratfn(RationalFn::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_ratfn(RationalFn::from_rat(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::from_ratfn(RationalFn::from_poly(p))
    }

    pub fn from_ratfn(r: RationalFn) -> Self {
        Self::term(r, Radicand::one())
    }

    pub fn term(coeff: RationalFn, radicand: Radicand) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            QScalar { terms: vec![(radicand, coeff)] }
        }
    }

    /// `t^k = q^{k/2}`.
    pub fn t_pow(k: i32) -> Self {
        Self::from_ratfn(RationalFn::t_pow(k))
    }

    /// `q^n`.
    pub fn q_pow(n: i32) -> Self {
        Self::t_pow(2 * n)
    }

    /// `(-1)^n`.
    pub fn sign(n: i64) -> Self {
        Self::from_int(if n.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RationalFn, &Radicand)> {
        self.terms.iter().map(|(s, c)| (c, s))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The rational-function value if there is no radical part.
    pub fn as_ratfn(&self) -> Option<RationalFn> {
        match self.terms.len() {
            0 => Some(RationalFn::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_ratfn().and_then(|r| r.as_constant())
    }

    /// `(coefficient, radicand)` of a single-term value.
    pub fn single_term(&self) -> Option<(&RationalFn, &Radicand)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].1, &self.terms[0].0))
        } else {
            None
        }
    }

    fn from_sorted_merge(mut items: Vec<(Radicand, RationalFn)>) -> Self {
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut terms: Vec<(Radicand, RationalFn)> = Vec::with_capacity(items.len());
        for (s, c) in items {
            match terms.last_mut() {
                Some((ls, lc)) if *ls == s => *lc = lc.add(&c),
                _ => terms.push((s, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        QScalar { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0) {
                out.push(self.terms[i].clone());
                i += 1;
            } else if i == self.terms.len() || other.terms[j].0 < self.terms[i].0 {
                out.push(other.terms[j].clone());
                j += 1;
            } else {
                let c = self.terms[i].1.add(&other.terms[j].1);
                if !c.is_zero() {
                    out.push((self.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
        QScalar { terms: out }
    }

    pub fn neg(&self) -> Self {
        QScalar { terms: self.terms.iter().map(|(s, c)| (s.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let (s1, c1) = &self.terms[0];
            let (s2, c2) = &other.terms[0];
            let (g, s) = s1.mul(s2);
            let c = c1.mul(c2);
            let c = if g.is_one() { c } else { c.mul_poly(&g) };
            return Self::term(c, s);
        }
        let mut items = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let (g, s) = s1.mul(s2);
                let c = c1.mul(c2);
                let c = if g.is_one() { c } else { c.mul_poly(&g) };
                items.push((s, c));
            }
        }
        Self::from_sorted_merge(items)
    }

    pub fn mul_ratfn(&self, r: &RationalFn) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QScalar { terms: self.terms.iter().map(|(s, c)| (s.clone(), c.mul(r))).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar { terms: self.terms.iter().map(|(s, x)| (s.clone(), x.scale(c))).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        QScalar { terms: self.terms.iter().map(|(s, x)| (s.clone(), x.shift(k))).collect() }
    }

    /// Inverse of a single-term value: `(r sqrt(s))^{-1} = sqrt(s) / (r s)`.
    pub fn recip(&self) -> Result<Self> {
        match self.terms.len() {
            0 => Err(Error::DivisionByZero),
            1 => {
                let (s, c) = &self.terms[0];
                let denom = c.mul_poly(s.poly());
                Ok(Self::term(denom.recip()?, s.clone()))
            }
            n => Err(Error::UnsupportedDivision(n)),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = other.as_ratfn() {
            return Ok(self.mul_ratfn(&r.recip()?));
        }
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Square root of a radical-free value that is positive for large `q`.
    pub fn sqrt(&self) -> Result<Self> {
        let r = self.as_ratfn().ok_or_else(|| {
            Error::UnsupportedSqrt(format!("argument has a radical part: {}", self))
        })?;
        let (c, s) = sqrt_ratfn(&r)?;
        Ok(Self::term(c, s))
    }

    /// Substitutes `q -> q^{-1}` (that is `t -> t^{-1}`).
    pub fn invert_q(&self) -> Result<Self> {
        let mut acc = Self::zero();
        for (s, c) in &self.terms {
            let (rc, rs) = s.invert_t()?;
            acc = acc.add(&Self::term(c.invert_t().mul(&rc), rs));
        }
        Ok(acc)
    }
}

/// `[n] = (q^n - q^{-n}) / (q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn q_int(n: i64) -> QScalar {
    QScalar::from_poly(q_int_poly(n))
}

pub(crate) fn q_int_poly(n: i64) -> LaurentPoly {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs() as i32;
    // exponents of q: n-1, n-3, ..., 1-n; in t they double
    LaurentPoly::from_terms((0..m).map(|k| (2 * (m - 1 - 2 * k), rat(sign))))
}

static FACTORIALS: Lazy<Mutex<HashMap<u32, LaurentPoly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

pub(crate) fn q_factorial_poly(n: u32) -> LaurentPoly {
    if let Some(p) = FACTORIALS.lock().get(&n) {
        return p.clone();
    }
    let p = if n == 0 { LaurentPoly::one() } else { &q_factorial_poly(n - 1) * &q_int_poly(n as i64) };
    FACTORIALS.lock().insert(n, p.clone());
    p
}

/// `[n]! = [n][n-1]...[1]`, `[0]! = 1`.
pub fn q_factorial(n: i64) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::Domain(format!("q-factorial of negative integer {}", n)));
    }
    Ok(QScalar::from_poly(q_factorial_poly(n as u32)))
}

impl fmt::Display for QScalar {
    /// Canonical text form: `coeff*sqrt(radicand)` terms joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if s.is_one() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "sqrt({})", s)?;
            } else if c.is_poly() && c.num().len() == 1 {
                write!(f, "{}*sqrt({})", c, s)?;
            } else if c.is_poly() {
                write!(f, "({})*sqrt({})", c, s)?;
            } else {
                write!(f, "{}*sqrt({})", c, s)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl<'a> $tr<&'a QScalar> for &'a QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                QScalar::$inner(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i32) -> QScalar {
        QScalar::q_pow(n)
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(2), &q(1) + &q(-1));
        assert_eq!(q_int(3), &(&q(2) + &QScalar::one()) + &q(-2));
        assert_eq!(q_int(-3), -&q_int(3));
    }

    #[test]
    fn q_factorials() {
        assert!(q_factorial(0).unwrap().is_one());
        assert_eq!(q_factorial(2).unwrap(), q_int(2));
        assert_eq!(q_factorial(3).unwrap(), &q_int(3) * &q_int(2));
        assert!(q_factorial(-1).is_err());
    }

    #[test]
    fn radicals_cancel_and_square() {
        let r = q_int(2).sqrt().unwrap();
        assert!((&r + &(-&r)).is_zero());
        assert_eq!(&r * &r, q_int(2));
        assert_eq!(&QScalar::t_pow(1) * &QScalar::t_pow(1), q(1));
    }

    #[test]
    fn division_rules() {
        let two = q_int(2);
        let inv = QScalar::one().div(&two).unwrap();
        assert_eq!(&inv * &two, QScalar::one());
        let r = two.sqrt().unwrap();
        assert!(r.div(&r).unwrap().is_one());
        assert_eq!(QScalar::one().div(&QScalar::zero()), Err(Error::DivisionByZero));
        let two_terms = &r + &QScalar::one();
        assert_eq!(QScalar::one().div(&two_terms), Err(Error::UnsupportedDivision(2)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(q(2).sqrt().unwrap(), q(1));
        assert_eq!((&q_int(2) * &q_int(2)).sqrt().unwrap(), q_int(2));
        let r = q_int(2).sqrt().unwrap();
        assert_eq!(r.num_terms(), 1);
        assert!(r.sqrt().is_err());
        assert!((&r + &QScalar::one()).sqrt().is_err());
    }

    #[test]
    fn invert_q_on_radicals() {
        let x = &q_int(3).sqrt().unwrap() * &QScalar::t_pow(3);
        let y = x.invert_q().unwrap();
        // [3] is palindromic, so only the prefactor flips
        assert_eq!(y, &q_int(3).sqrt().unwrap() * &QScalar::t_pow(-3));
        assert_eq!(y.invert_q().unwrap(), x);
    }
}
