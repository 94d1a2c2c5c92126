//! Exact scalars: Laurent polynomials and rational functions in `t = q^{1/2}`
//! extended by square roots.

mod numeric;
mod poly;
mod qscalar;
mod radical;
mod ratfn;
pub mod sample;
pub mod text;

pub use numeric::{eval_numeric, parse_rat, rat_to_decimal, rat_to_f64, Interval};
pub use poly::{LaurentPoly, Rat};
#[allow(unused_imports)]
pub(crate) use poly::{format_rat, rat};
pub use qscalar::{q_factorial, q_int, QScalar};
pub use radical::{integer_squarefree, sqrt_ratfn, Radicand};
pub use ratfn::RationalFn;
pub use text::{parse_scalar, pretty_scalar};

/// `a / b` as an exact rational.
pub fn ratio(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}
