//! Reduced rational functions in `t`.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{LaurentPoly, Rat};
use crate::error::{Error, Result};

/// `num / den`, reduced, with `den` monic and of lowest exponent zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFn { num, den: LaurentPoly::one() }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn t_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::t_pow(k))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = LaurentPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        Self::normalize_den(num, den)
    }

    /// Assumes `num`, `den` coprime; shifts and scales so `den` is monic with lowest exponent zero.
    fn normalize_den(num: LaurentPoly, den: LaurentPoly) -> Self {
        let shift = den.low();
        let lc = den.leading_coeff();
        let (num, den) = if lc.is_one() {
            (num.shift(-shift), den.shift(-shift))
        } else {
            let inv = lc.recip();
            (num.shift(-shift).scale(&inv), den.shift(-shift).scale(&inv))
        };
        RationalFn { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            if self.den.is_one() {
                return RationalFn { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = &(&self.num * &other.den) + &other.num;
            return RationalFn { num, den: other.den.clone() };
        }
        if other.den.is_one() {
            let num = &(&other.num * &self.den) + &self.num;
            return RationalFn { num, den: self.den.clone() };
        }
        let g = LaurentPoly::gcd(&self.den, &other.den);
        let (a, b) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.exact_div(&g), other.den.exact_div(&g))
        };
        // self.den = g a, other.den = g b
        let num = &(&self.num * &b) + &(&other.num * &a);
        let den = &(&a * &b) * &g;
        if g.is_one() {
            // num is coprime to a and b already
            return Self::normalize_den(num, den);
        }
        Self::reduce(num, den)
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RationalFn { num: &self.num * &other.num, den: LaurentPoly::one() };
        }
        let g1 = LaurentPoly::gcd(&self.num, &other.den);
        let g2 = LaurentPoly::gcd(&other.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1) };
        let d2 = if g1.is_one() { other.den.clone() } else { other.den.exact_div(&g1) };
        let n2 = if g2.is_one() { other.num.clone() } else { other.num.exact_div(&g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2) };
        Self::normalize_den(&n1 * &n2, &d1 * &d2)
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if p.is_monomial() || self.den.is_one() {
            if p.is_zero() {
                return Self::zero();
            }
            return RationalFn { num: &self.num * p, den: self.den.clone() };
        }
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift(&self, k: i32) -> Self {
        RationalFn { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
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

    /// Substitutes `t -> t^{-1}`.
    pub fn invert_t(&self) -> Self {
        Self::normalize_den(self.num.invert_t(), self.den.invert_t())
    }

    /// Exact evaluation in `Q(sqrt(q))`: returns `(x, y)` with value `x + y*t`, `t = sqrt(q)`.
    /// When `q` is a perfect square the caller should fold `y*t`; here `t` stays symbolic.
    /// `Err(Pole)` if the denominator vanishes identically at that point.
    pub fn eval_split(&self, q: &Rat, t_rational: Option<&Rat>) -> Result<(Rat, Rat)> {
        let (n0, n1) = self.num.eval_split(q);
        let (d0, d1) = self.den.eval_split(q);
        match t_rational {
            Some(t) => {
                let d = &d0 + &d1 * t;
                if d.is_zero() {
                    return Err(Error::Pole(super::poly::format_rat(q)));
                }
                Ok(((&n0 + &n1 * t) / d, Rat::zero()))
            }
            None => {
                // (n0 + n1 t)(d0 - d1 t) / (d0^2 - d1^2 q)
                let norm = &d0 * &d0 - &d1 * &d1 * q;
                if norm.is_zero() {
                    return Err(Error::Pole(super::poly::format_rat(q)));
                }
                let x = (&n0 * &d0 - &n1 * &d1 * q) / &norm;
                let y = (&n1 * &d0 - &n0 * &d1) / &norm;
                Ok((x, y))
            }
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::rat;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn reduces_common_factor_and_normalizes_den() {
        // (t^2 - 1) / (2 t^3 + 2 t^2) = (t - 1) / (2 t^2)  ->  num (1/2)(t^-1 - t^-2), den 1
        let r = RationalFn::new(p(&[(2, 1), (0, -1)]), p(&[(3, 2), (2, 2)])).unwrap();
        assert!(r.den().is_one());
        assert_eq!(r.num(), &LaurentPoly::from_terms(vec![(-1, Rat::new(1.into(), 2.into())), (-2, Rat::new((-1).into(), 2.into()))]));
    }

    #[test]
    fn add_and_mul_agree_with_pointwise_evaluation() {
        let a = RationalFn::new(p(&[(0, 1)]), p(&[(0, 1), (2, 1)])).unwrap();
        let b = RationalFn::new(p(&[(1, 3)]), p(&[(0, -1), (1, 1)])).unwrap();
        let x = rat(3);
        let ev = |r: &RationalFn| r.num().eval(&x) / r.den().eval(&x);
        assert_eq!(ev(&a.add(&b)), ev(&a) + ev(&b));
        assert_eq!(ev(&a.mul(&b)), ev(&a) * ev(&b));
        assert_eq!(a.mul(&a.recip().unwrap()), RationalFn::one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::DivisionByZero));
    }
}
