//! Expression parsing and the human-oriented `q`-form printer.
//!
//! The grammar accepts both the canonical `t` form (`2*t^-2 + t^3`,
//! `(t^2)/(1 + t^4)*sqrt(1 + t^4)`) and the `q` form used for display
//! (`q^(1/2)*sqrt(q+q^-1)*X*U`).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{format_rat, LaurentPoly, Rat};
use super::qscalar::QScalar;
use super::ratfn::RationalFn;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    /// `t` or `q`.
    Var(char),
    /// An algebra generator such as `X`.
    Gen(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, Rat),
    Sqrt(Box<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    generators: &'a str,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<Rat> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let n = self.integer()?;
            let d = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
            self.expect(b')')?;
            if d.is_zero() {
                return self.err("zero denominator in exponent");
            }
            let r = Rat::new(n, d);
            return Ok(if neg { -r } else { r });
        }
        let neg = self.eat(b'-');
        let n = Rat::from_integer(self.integer()?);
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match word {
                    "sqrt" => {
                        self.expect(b'(')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Sqrt(Box::new(e)))
                    }
                    "t" | "q" => Ok(Expr::Var(word.as_bytes()[0] as char)),
                    w if w.len() == 1 && self.generators.contains(w) => Ok(Expr::Gen(w.as_bytes()[0] as char)),
                    _ => {
                        self.pos = start;
                        self.err(format!("unknown symbol {:?}", word))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression; `generators` lists the single-letter algebra
/// generators allowed (empty for pure scalars).
pub fn parse_expr(src: &str, generators: &str) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, generators };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    pub fn has_generators(&self) -> bool {
        match self {
            Expr::Gen(_) => true,
            Expr::Num(_) | Expr::Var(_) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.has_generators() || b.has_generators()
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) => a.has_generators(),
        }
    }

    pub fn eval_scalar(&self) -> Result<QScalar> {
        match self {
            Expr::Num(n) => Ok(QScalar::from_rat(Rat::from_integer(n.clone()))),
            Expr::Var('t') => Ok(QScalar::t_pow(1)),
            Expr::Var(_) => Ok(QScalar::t_pow(2)),
            Expr::Gen(g) => Err(Error::Domain(format!("generator {} in a scalar expression", g))),
            Expr::Add(a, b) => Ok(a.eval_scalar()?.add(&b.eval_scalar()?)),
            Expr::Sub(a, b) => Ok(a.eval_scalar()?.sub(&b.eval_scalar()?)),
            Expr::Mul(a, b) => Ok(a.eval_scalar()?.mul(&b.eval_scalar()?)),
            Expr::Div(a, b) => a.eval_scalar()?.div(&b.eval_scalar()?),
            Expr::Neg(a) => Ok(a.eval_scalar()?.neg()),
            Expr::Sqrt(a) => a.eval_scalar()?.sqrt(),
            Expr::Pow(base, e) => {
                if let Expr::Var(v) = **base {
                    let per = if v == 't' { 1 } else { 2 };
                    let k = e * Rat::from_integer(BigInt::from(per));
                    if k.is_integer() {
                        return Ok(QScalar::t_pow(to_i32(&k)?));
                    }
                    return Err(Error::Domain(format!("exponent {} of {} is not a multiple of 1/{}", format_rat(e), v, per)));
                }
                if !e.is_integer() {
                    return Err(Error::Domain("fractional powers are only supported on t and q".into()));
                }
                base.eval_scalar()?.pow(to_i32(e)?)
            }
        }
    }
}

fn to_i32(r: &Rat) -> Result<i32> {
    r.to_integer().to_i32().ok_or_else(|| Error::Domain("exponent out of range".into()))
}

/// Parses a scalar in either text form.
pub fn parse_scalar(src: &str) -> Result<QScalar> {
    parse_expr(src, "")?.eval_scalar()
}

/// Parses a Laurent polynomial (no radicals, no division by non-constants).
pub fn parse_poly(src: &str) -> Result<LaurentPoly> {
    let s = parse_scalar(src)?;
    let r = s.as_ratfn().ok_or_else(|| Error::Domain(format!("{:?} is not rational", src)))?;
    if !r.is_poly() {
        return Err(Error::Domain(format!("{:?} is not a Laurent polynomial", src)));
    }
    Ok(r.num().clone())
}

/// One term of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub num: String,
    pub den: String,
    pub radicand: String,
}

pub fn to_json_terms(x: &QScalar) -> Vec<JsonTerm> {
    x.terms()
        .map(|(c, s)| JsonTerm { num: c.num().to_string(), den: c.den().to_string(), radicand: s.to_string() })
        .collect()
}

pub fn from_json_terms(terms: &[JsonTerm]) -> Result<QScalar> {
    let mut acc = QScalar::zero();
    for t in terms {
        let c = RationalFn::new(parse_poly(&t.num)?, parse_poly(&t.den)?)?;
        let s = QScalar::from_poly(parse_poly(&t.radicand)?).sqrt()?;
        acc = acc.add(&s.mul_ratfn(&c));
    }
    Ok(acc)
}

fn q_power(k: i32) -> String {
    // k is an exponent of t
    if k % 2 != 0 {
        return format!("q^({}/2)", k);
    }
    match k / 2 {
        1 => "q".to_string(),
        n => format!("q^{}", n),
    }
}

/// `q`-form of a Laurent polynomial, descending powers, compact separators.
pub fn pretty_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let terms: Vec<(i32, &Rat)> = p.terms().collect();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if *e == 0 {
            out.push_str(&format_rat(&a));
        } else if a.is_one() {
            out.push_str(&q_power(*e));
        } else {
            out.push_str(&format!("{}*{}", format_rat(&a), q_power(*e)));
        }
    }
    out
}

fn paren_poly(p: &LaurentPoly) -> String {
    let s = pretty_poly(p);
    if p.len() > 1 && p.terms().count() > 1 {
        format!("({})", s)
    } else {
        s
    }
}

/// Shift exponent (even, in `t`) that centres `p` around `t^0` as well as possible.
fn centring_shift(p: &LaurentPoly) -> i32 {
    let s = p.low() + p.high();
    2 * (s as f64 / 4.0).round() as i32
}

/// Pretty rational function, parenthesised so it can be juxtaposed with `*`.
fn pretty_ratfn(r: &RationalFn) -> String {
    if r.is_poly() {
        return paren_poly(r.num());
    }
    let e = centring_shift(r.den());
    let num = r.num().shift(-e);
    let den = r.den().shift(-e);
    let ds = pretty_poly(&den);
    let ds = if den.terms().count() > 1 || ds.contains(['*', '/']) { format!("({})", ds) } else { ds };
    format!("{}/{}", paren_poly(&num), ds)
}

/// One factor string per radical term, each `c`, `sqrt(s)`, `-sqrt(s)` or `c*sqrt(s)`.
fn pretty_terms(x: &QScalar) -> Vec<String> {
    x.terms()
        .map(|(c, s)| {
            if s.is_one() {
                return pretty_ratfn(c);
            }
            let e = centring_shift(s.poly());
            let rad = pretty_poly(&s.poly().shift(-e));
            let coeff = c.shift(e / 2);
            if coeff.is_one() {
                format!("sqrt({})", rad)
            } else if coeff == RationalFn::one().neg() {
                format!("-sqrt({})", rad)
            } else {
                format!("{}*sqrt({})", pretty_ratfn(&coeff), rad)
            }
        })
        .collect()
}

fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 && !p.starts_with('-') {
            out.push('+');
        }
        out.push_str(p);
    }
    out
}

/// `q`-form of a scalar, e.g. `q^(1/2)*sqrt(q+q^-1)`.
pub fn pretty_scalar(x: &QScalar) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if let Some(r) = x.as_ratfn() {
        if r.is_poly() {
            return pretty_poly(r.num());
        }
    }
    join_signed(&pretty_terms(x))
}

/// Pretty coefficient prefix for juxtaposition with a monomial: empty for 1,
/// `-` for -1, otherwise a factor followed by `*`.
pub fn pretty_coefficient(x: &QScalar) -> String {
    if x.is_one() {
        return String::new();
    }
    if x.neg().is_one() {
        return "-".into();
    }
    let parts = pretty_terms(x);
    if parts.len() > 1 {
        format!("({})*", join_signed(&parts))
    } else {
        format!("{}*", parts[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_int;

    #[test]
    fn canonical_round_trip() {
        let x = &q_int(2).sqrt().unwrap() * &QScalar::t_pow(3);
        let y = &x + &QScalar::one().div(&q_int(3)).unwrap();
        assert_eq!(parse_scalar(&y.to_string()).unwrap(), y);
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(pretty_scalar(&q_int(2)), "q+q^-1");
        let x = &q_int(2).sqrt().unwrap() * &QScalar::t_pow(1);
        assert_eq!(pretty_scalar(&x), "q^(1/2)*sqrt(q+q^-1)");
        assert_eq!(pretty_scalar(&QScalar::one().div(&q_int(2)).unwrap()), "1/(q+q^-1)");
        assert_eq!(pretty_scalar(&q_int(3).sqrt().unwrap()), "sqrt(q^2+1+q^-2)");
        assert_eq!(parse_scalar("q^(1/2)*sqrt(q+q^-1)").unwrap(), x);
    }

    #[test]
    fn json_round_trip() {
        let x = &(&q_int(3).sqrt().unwrap() * &QScalar::t_pow(-1)) + &QScalar::from_int(7);
        let j = to_json_terms(&x);
        assert_eq!(from_json_terms(&j).unwrap(), x);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_scalar("1 + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {:?}", other),
        }
        assert!(parse_scalar("X").is_err());
    }
}
