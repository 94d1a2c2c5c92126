//! Text forms of algebra elements.

use num_traits::{Signed, ToPrimitive};

use super::{AlgElem, Gen, SuQ2};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::scalar::text::{parse_expr, pretty_coefficient, Expr};

fn eval(e: &Expr) -> Result<AlgElem> {
    let alg = SuQ2;
    if !e.has_generators() {
        return Ok(alg.scalar(e.eval_scalar()?));
    }
    match e {
        Expr::Gen(c) => Ok(alg.gen(Gen::from_char(*c).expect("parser admits XUVY only"))),
        Expr::Add(a, b) => Ok(eval(a)?.add(&eval(b)?)),
        Expr::Sub(a, b) => Ok(eval(a)?.sub(&eval(b)?)),
        Expr::Mul(a, b) => Ok(alg.mul(&eval(a)?, &eval(b)?)),
        Expr::Neg(a) => Ok(eval(a)?.neg()),
        Expr::Div(a, b) => {
            if b.has_generators() {
                return Err(Error::Domain("division by an algebra element".into()));
            }
            let inv = crate::scalar::QScalar::one().div(&b.eval_scalar()?)?;
            Ok(eval(a)?.scale(&inv))
        }
        Expr::Pow(base, k) => {
            if !k.is_integer() || k.is_negative() {
                return Err(Error::Domain("algebra elements take nonnegative integer powers only".into()));
            }
            let n = k.to_integer().to_u32().ok_or_else(|| Error::Domain("exponent too large".into()))?;
            let b = eval(base)?;
            let mut acc = alg.one();
            for _ in 0..n {
                acc = alg.mul(&acc, &b);
            }
            Ok(acc)
        }
        Expr::Sqrt(_) => Err(Error::Domain("square root of an algebra element".into())),
        Expr::Num(_) | Expr::Var(_) => unreachable!("scalar subexpressions handled above"),
    }
}

/// Parses an element of O(SU_q(2)) from either the canonical or the `q` form.
/// Products of generators are normal-ordered.
pub fn parse_alg(src: &str) -> Result<AlgElem> {
    eval(&parse_expr(src, "XUVY")?)
}

/// `q`-form, e.g. `q^(1/2)*sqrt(q+q^-1)*X*U`.
pub fn pretty_alg(x: &AlgElem) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in x.terms().enumerate() {
        let term = if *m == super::PbwMonomial::ONE {
            crate::scalar::pretty_scalar(c)
        } else {
            format!("{}{}", pretty_coefficient(c), m)
        };
        if i > 0 {
            if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
                continue;
            }
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suq2::dfun::dfun_twice;

    #[test]
    fn pretty_entry() {
        assert_eq!(pretty_alg(&dfun_twice(2, 2, 0)), "q^(1/2)*sqrt(q+q^-1)*X*U");
    }

    #[test]
    fn parse_round_trips() {
        for (j, mp, m) in [(2, 2, 0), (2, 0, 0), (3, 1, -1), (3, -3, 1)] {
            let x = dfun_twice(j, mp, m);
            assert_eq!(parse_alg(&pretty_alg(&x)).unwrap(), x);
            assert_eq!(parse_alg(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn parse_applies_relations() {
        let lhs = parse_alg("X*Y - q^-1*U*V").unwrap();
        assert_eq!(lhs, SuQ2.one());
        assert!(parse_alg("X/Y").is_err());
    }
}
