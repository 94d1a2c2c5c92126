//! Guaranteed numeric evaluation at rational `q`.
//!
//! Every rational function is evaluated exactly in `Q(sqrt(q))`; the only
//! inexact steps are square roots, which are enclosed by dyadic intervals.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{format_rat, Rat};
use super::qscalar::QScalar;
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` known to contain the exact value.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_scaled(x: &Rat, bits: u32) -> BigInt {
    (x * Rat::from_integer(pow2(bits))).floor().to_integer()
}

fn ceil_scaled(x: &Rat, bits: u32) -> BigInt {
    (x * Rat::from_integer(pow2(bits))).ceil().to_integer()
}

impl Interval {
    pub fn exact(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::exact(Rat::zero())
    }

    fn round_out(self, bits: u32) -> Self {
        let d = pow2(bits);
        Interval {
            lo: Rat::new(floor_scaled(&self.lo, bits), d.clone()),
            hi: Rat::new(ceil_scaled(&self.hi, bits), d),
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn mul(&self, o: &Interval, bits: u32) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }.round_out(bits)
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Enclosure of the principal square root; requires `lo >= 0`.
    pub fn sqrt(&self, bits: u32) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::Domain(format!(
                "square root of a possibly negative value near {}",
                format_rat(&self.lo)
            )));
        }
        let lo_s = floor_scaled(&self.lo, 2 * bits).sqrt();
        let hi_sc = ceil_scaled(&self.hi, 2 * bits);
        let mut hi_s = hi_sc.sqrt();
        if &hi_s * &hi_s < hi_sc {
            hi_s += 1;
        }
        let d = pow2(bits);
        Ok(Interval { lo: Rat::new(lo_s, d.clone()), hi: Rat::new(hi_s, d) })
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.mid())
    }

    /// Upper bound on `|x|` over the interval.
    pub fn abs_upper(&self) -> Rat {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Decimal rendering of the midpoint with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        rat_to_decimal(&self.mid(), digits)
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() && d != 0.0 {
        return n / d;
    }
    // fall back on a scaled integer for huge numerators/denominators
    let scaled = (x * Rat::from_integer(pow2(1100))).round().to_integer();
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-1100)
}

/// Decimal string with `digits` significant digits (rounded half away from zero).
pub fn rat_to_decimal(x: &Rat, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    // exponent e with 10^e <= a < 10^(e+1)
    let mut e: i64 = (a.numer().to_string().len() as i64) - (a.denom().to_string().len() as i64);
    let ten = Rat::from_integer(BigInt::from(10));
    let pow10 = |k: i64| -> Rat {
        if k >= 0 {
            ten.pow(k as i32)
        } else {
            ten.pow(-k as i32).recip()
        }
    };
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = (&a * pow10(shift)).round().to_integer();
    let mut s = scaled.to_string();
    let mut shift = shift;
    if s.len() as u32 > digits {
        // rounding carried into a new digit
        s.pop();
        shift -= 1;
    }
    let body = if shift <= 0 {
        let zeros = "0".repeat((-shift) as usize);
        format!("{}{}", s, zeros)
    } else if (shift as usize) < s.len() {
        let (i, f) = s.split_at(s.len() - shift as usize);
        format!("{}.{}", i, f)
    } else {
        format!("0.{}{}", "0".repeat(shift as usize - s.len()), s)
    };
    let body = if body.contains('.') {
        let t = body.trim_end_matches('0');
        t.trim_end_matches('.').to_string()
    } else {
        body
    };
    if neg {
        format!("-{}", body)
    } else {
        body
    }
}

fn exact_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

fn eval_with_bits(a: &QScalar, q: &Rat, t_exact: Option<&Rat>, bits: u32) -> Result<Interval> {
    let t_iv = match t_exact {
        Some(t) => Interval::exact(t.clone()),
        None => Interval::exact(q.clone()).sqrt(bits + 8)?,
    };
    let mut acc = Interval::zero();
    for (coeff, radicand) in a.terms() {
        let (x, y) = coeff.eval_split(q, t_exact)?;
        let c_iv = Interval::exact(x).add(&t_iv.scale(&y));
        if radicand.is_one() {
            acc = acc.add(&c_iv);
            continue;
        }
        let (r0, r1) = radicand.poly().eval_split(q);
        let r_iv = match t_exact {
            Some(t) => Interval::exact(&r0 + &r1 * t),
            None => Interval::exact(r0).add(&t_iv.scale(&r1)),
        };
        let s_iv = r_iv.sqrt(bits + 8)?;
        acc = acc.add(&c_iv.mul(&s_iv, bits + 8));
    }
    Ok(acc)
}

/// Evaluates `a` at `q = q_value` with at least `digits` correct significant
/// digits (absolute accuracy `10^-digits` for values below one).
pub fn eval_numeric(a: &QScalar, q_value: &Rat, digits: u32) -> Result<Interval> {
    if !q_value.is_positive() {
        return Err(Error::Domain(format!("q must be positive, got {}", format_rat(q_value))));
    }
    let t_exact = exact_sqrt(q_value);
    let ten = Rat::from_integer(BigInt::from(10));
    let target = ten.pow(digits as i32).recip();
    let mut bits = (digits as f64 * 3.33) as u32 + 64;
    loop {
        let iv = eval_with_bits(a, q_value, t_exact.as_ref(), bits)?;
        let scale = Rat::one().max(iv.abs_upper());
        if iv.width() <= &target * scale || bits > 1 << 16 {
            return Ok(iv);
        }
        bits *= 2;
    }
}

/// Parses `P/R` or `P` as a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse { pos: 0, msg: format!("expected a rational P/R, got {:?}", s) };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.sign() == Sign::NoSign {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q_int, rat};

    #[test]
    fn q_int_two_at_two() {
        let v = eval_numeric(&q_int(2), &rat(2), 30).unwrap();
        assert_eq!(v.lo, Rat::new(5.into(), 2.into()));
        assert_eq!(v.to_decimal(10), "2.5");
    }

    #[test]
    fn sqrt_q_int_two_at_two() {
        let v = eval_numeric(&q_int(2).sqrt().unwrap(), &rat(2), 30).unwrap();
        assert!(v.width() < Rat::new(1.into(), BigInt::from(10).pow(30)));
        assert_eq!(v.to_decimal(8), "1.5811388");
    }

    #[test]
    fn half_powers_at_non_square_q() {
        let v = eval_numeric(&QScalar::t_pow(1), &Rat::new(3.into(), 2.into()), 30).unwrap();
        assert_eq!(v.to_decimal(12), "1.22474487139");
    }

    #[test]
    fn poles_are_reported() {
        let x = QScalar::one().div(&(&QScalar::q_pow(1) - &QScalar::one())).unwrap();
        assert!(matches!(eval_numeric(&x, &rat(1), 30), Err(Error::Pole(_))));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rat_to_decimal(&Rat::new(1.into(), 3.into()), 5), "0.33333");
        assert_eq!(rat_to_decimal(&Rat::new((-2).into(), 3.into()), 3), "-0.667");
        assert_eq!(rat_to_decimal(&rat(12345), 3), "12300");
        assert_eq!(rat_to_decimal(&Rat::new(999.into(), 1000.into()), 2), "1");
    }
}
