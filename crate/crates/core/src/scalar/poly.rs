//! Laurent polynomials in `t = q^{1/2}` with rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Dense Laurent polynomial: `coeffs[k]` multiplies `t^(low + k)`.
///
/// The first and last stored coefficients are nonzero; the zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: Rat, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(Rat::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rat)>>(terms: I) -> Self {
        let terms: Vec<(i32, Rat)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|(e, _)| *e).min().unwrap();
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rat::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i32, coeffs: Vec<Rat>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 if self.low == 0 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent; meaningless for the zero polynomial.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn dense(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> Rat {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rat::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn trailing_coeff(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_else(Rat::zero)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The polynomial part with the lowest power of `t` removed (lowest exponent zero).
    pub fn strip_low(&self) -> Self {
        LaurentPoly { low: 0, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn invert_t(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high(), coeffs }
    }

    /// True if all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True if the coefficient table is invariant under `t -> t^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_t()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative with respect to `t`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e - 1, c * rat(e as i64))))
    }

    /// Splits `self = c * P` where `P` has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive_part(&self) -> (Rat, LaurentPoly) {
        if self.is_zero() {
            return (Rat::zero(), Self::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            let scaled = (c * Rat::from_integer(den_lcm.clone())).to_integer();
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Schoolbook division on dense coefficient slices.
    fn divrem_dense(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut r: Vec<Rat> = a.to_vec();
        if a.len() < b.len() {
            return (Vec::new(), r);
        }
        let lb = b.last().unwrap();
        let lb_inv = lb.recip();
        let qlen = a.len() - b.len() + 1;
        let mut q = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &r[k + b.len() - 1];
            if top.is_zero() {
                continue;
            }
            let f = top * &lb_inv;
            for (i, bc) in b.iter().enumerate() {
                if !bc.is_zero() {
                    let d = &f * bc;
                    r[k + i] -= d;
                }
            }
            q[k] = f;
        }
        r.truncate(b.len() - 1);
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        (q, r)
    }

    /// Monic gcd of the polynomial parts, as a polynomial with lowest exponent zero.
    /// Powers of `t` are units and never contribute.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return b.strip_low().monic();
        }
        if b.is_zero() {
            return a.strip_low().monic();
        }
        if a.len() == 1 || b.len() == 1 {
            return Self::one();
        }
        let (mut x, mut y) = if a.len() >= b.len() {
            (a.coeffs.clone(), b.coeffs.clone())
        } else {
            (b.coeffs.clone(), a.coeffs.clone())
        };
        loop {
            let (_, r) = Self::divrem_dense(&x, &y);
            if r.is_empty() {
                return LaurentPoly::from_dense(0, y).strip_low().monic();
            }
            if r.len() == 1 {
                return Self::one();
            }
            // keep coefficient growth in check
            let lr = r.last().unwrap().recip();
            let r: Vec<Rat> = r.iter().map(|c| c * &lr).collect();
            x = y;
            y = r;
        }
    }

    pub fn monic(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading_coeff();
        self.scale(&l.recip())
    }

    /// Division of polynomial parts: `self = q * d + r` with exponents of `d`
    /// aligned at `d.low()`. Returns `(q, r)` as Laurent polynomials with `q`
    /// carrying the shift `self.low - d.low`.
    pub fn div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let (q, r) = Self::divrem_dense(&self.coeffs, &d.coeffs);
        (
            LaurentPoly::from_dense(self.low - d.low, q),
            LaurentPoly::from_dense(self.low, r),
        )
    }

    /// Exact quotient; panics if `d` does not divide `self` up to a unit `t^k`.
    pub fn exact_div(&self, d: &LaurentPoly) -> LaurentPoly {
        if d.is_monomial() {
            let c = d.coeffs[0].recip();
            return LaurentPoly { low: self.low - d.low, coeffs: self.coeffs.iter().map(|x| x * &c).collect() };
        }
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Evaluates at a rational point `t = x` (nonzero if negative exponents occur).
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low >= 0 {
            acc * x.pow(self.low)
        } else {
            acc / x.pow(-self.low)
        }
    }

    /// Writes `self(t) = even(q) + t * odd(q)` and evaluates both parts at `q`.
    pub fn eval_split(&self, q: &Rat) -> (Rat, Rat) {
        let mut even = Rat::zero();
        let mut odd = Rat::zero();
        for (e, c) in self.terms() {
            let half = e.div_euclid(2);
            let qp = if half >= 0 { q.pow(half) } else { q.recip().pow(-half) };
            if e.rem_euclid(2) == 0 {
                even += c * qp;
            } else {
                odd += c * qp;
            }
        }
        (even, odd)
    }

    /// Yun square-free decomposition of the polynomial part over the rationals:
    /// returns monic `f_1, f_2, ...` with `P = lc * t^low * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<LaurentPoly> {
        let f = self.strip_low().monic();
        if f.len() <= 1 {
            return Vec::new();
        }
        let df = f.derivative();
        let b = Self::gcd(&f, &df);
        let mut c = f.exact_div(&b);
        let mut d = (&df.exact_div(&b)) - &c.derivative();
        let mut out = Vec::new();
        while c.len() > 1 {
            let a = Self::gcd(&c, &d);
            c = c.exact_div(&a);
            d = (&d.exact_div(&a)) - &c.derivative();
            out.push(a);
        }
        while out.last().map_or(false, |p| p.is_one()) {
            out.pop();
        }
        out
    }

    /// Total order used for sorting radicands: constants first, then by span and coefficients.
    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then(self.low.cmp(&other.low))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high().max(b.high());
    let mut coeffs = vec![Rat::zero(); (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + k];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() {
            let mut p = self.scale(&rhs.coeffs[0]);
            p.low += rhs.low;
            return p;
        }
        if self.is_monomial() {
            let mut p = rhs.scale(&self.coeffs[0]);
            p.low += self.low;
            return p;
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn format_rat(c: &Rat) -> String {
    fmt_rat(c)
}

/// Canonical text: ascending exponents, `c*t^k`, joined by ` + `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", fmt_rat(c))?;
            } else if c.is_one() {
                write!(f, "t^{}", e)?;
            } else if *c == -Rat::one() {
                write!(f, "-t^{}", e)?;
            } else {
                write!(f, "{}*t^{}", fmt_rat(c), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn trims_and_prints_ascending() {
        let x = p(&[(3, 1), (-2, 2), (0, 0)]);
        assert_eq!(x.low(), -2);
        assert_eq!(x.high(), 3);
        assert_eq!(x.to_string(), "2*t^-2 + t^3");
        assert!(p(&[(1, 1), (1, -1)]).is_zero());
    }

    #[test]
    fn gcd_ignores_t_powers() {
        // (t^2 - 1)(t + 2) and t^5 (t^2 - 1)
        let a = &p(&[(2, 1), (0, -1)]) * &p(&[(1, 1), (0, 2)]);
        let b = p(&[(7, 1), (5, -1)]);
        assert_eq!(LaurentPoly::gcd(&a, &b), p(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn division_round_trip() {
        let a = p(&[(0, 1), (1, 3), (4, -2)]);
        let d = p(&[(0, 1), (2, 1)]);
        let prod = &a * &d;
        assert_eq!(prod.exact_div(&d), a);
    }

    #[test]
    fn squarefree_of_square_times_linear() {
        // (t + 1)^2 (t - 2)
        let lin = p(&[(0, 1), (1, 1)]);
        let x = &(&lin * &lin) * &p(&[(0, -2), (1, 1)]);
        let parts = x.squarefree_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], p(&[(0, -2), (1, 1)]));
        assert_eq!(parts[1], lin);
    }

    #[test]
    fn primitive_part_is_integral() {
        let x = LaurentPoly::from_terms(vec![(0, Rat::new(BigInt::from(-2), BigInt::from(3))), (1, Rat::new(BigInt::from(-4), BigInt::from(9)))]);
        let (c, prim) = x.primitive_part();
        assert_eq!(prim, p(&[(0, 3), (1, 2)]));
        assert_eq!(&prim.scale(&c), &x);
    }
}
