//! The quantized function algebra O(SU_q(2)) with generators X, U, V, Y.
//!
//! Relations: XU = q^{-1}UX, XV = q^{-1}VX, UY = q^{-1}YU, VY = q^{-1}YV,
//! UV = VU, XY - q^{-1}UV = 1, YX - qUV = 1. The PBW basis is
//! {X^a U^b V^c Y^d : a = 0 or d = 0}.

mod dfun;
mod halfint;
mod text;

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::Lazy;
use parking_lot::Mutex;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::hopf::{HopfAlgebra, LinComb, Pair};
use crate::scalar::{LaurentPoly, QScalar};

pub use dfun::{dfun, f_inv_trace, f_matrix, standard_corep};
pub use halfint::HalfInt;
pub use text::{parse_alg, pretty_alg};

/// Normal-ordered monomial `X^a U^b V^c Y^d` with `a == 0 || d == 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { a: 0, b: 0, c: 0, d: 0 };

    /// Returns `None` if both `X` and `Y` occur.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Option<Self> {
        if a > 0 && d > 0 {
            None
        } else {
            Some(PbwMonomial { a, b, c, d })
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// Torus weights `(m', m)` in twice-units: `X` carries (1,1), `U` (1,-1),
    /// `V` (-1,1), `Y` (-1,-1).
    pub fn weight_twice(&self) -> (i32, i32) {
        let (a, b, c, d) = (self.a as i32, self.b as i32, self.c as i32, self.d as i32);
        (a + b - c - d, a - b + c - d)
    }

    /// All normal monomials of total degree exactly `n`.
    pub fn of_degree(n: u32) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    let d = n - a - b - c;
                    if let Some(m) = PbwMonomial::new(a, b, c, d) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// All normal monomials of total degree at most `n`.
    pub fn up_to_degree(n: u32) -> Vec<PbwMonomial> {
        (0..=n).flat_map(PbwMonomial::of_degree).collect()
    }

    /// The generator word `X^a U^b V^c Y^d`.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat(Gen::X).take(self.a as usize));
        w.extend(std::iter::repeat(Gen::U).take(self.b as usize));
        w.extend(std::iter::repeat(Gen::V).take(self.c as usize));
        w.extend(std::iter::repeat(Gen::Y).take(self.d as usize));
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (g, e) in [("X", self.a), ("U", self.b), ("V", self.c), ("Y", self.d)] {
            match e {
                0 => {}
                1 => parts.push(g.to_string()),
                _ => parts.push(format!("{}^{}", g, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    X,
    U,
    V,
    Y,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X, Gen::U, Gen::V, Gen::Y];

    pub fn monomial(self) -> PbwMonomial {
        match self {
            Gen::X => PbwMonomial { a: 1, b: 0, c: 0, d: 0 },
            Gen::U => PbwMonomial { a: 0, b: 1, c: 0, d: 0 },
            Gen::V => PbwMonomial { a: 0, b: 0, c: 1, d: 0 },
            Gen::Y => PbwMonomial { a: 0, b: 0, c: 0, d: 1 },
        }
    }

    pub fn from_char(c: char) -> Option<Gen> {
        match c {
            'X' => Some(Gen::X),
            'U' => Some(Gen::U),
            'V' => Some(Gen::V),
            'Y' => Some(Gen::Y),
            _ => None,
        }
    }
}

/// Element of O(SU_q(2)).
pub type AlgElem = LinComb<PbwMonomial>;
/// Element of O(SU_q(2)) (x) O(SU_q(2)).
pub type TensorAlg = LinComb<Pair<PbwMonomial>>;

/// `m * g` as a list of `(monomial, t-exponent)` terms, each with coefficient `t^e`.
fn rmul_gen(m: &PbwMonomial, g: Gen) -> Vec<(PbwMonomial, i32)> {
    let PbwMonomial { a, b, c, d } = *m;
    let (b_i, c_i, d_i) = (b as i32, c as i32, d as i32);
    match g {
        // Y^d U = q^d U Y^d
        Gen::U => vec![(PbwMonomial { a, b: b + 1, c, d }, 2 * d_i)],
        Gen::V => vec![(PbwMonomial { a, b, c: c + 1, d }, 2 * d_i)],
        Gen::X if d == 0 => vec![(PbwMonomial { a: a + 1, b, c, d }, 2 * (b_i + c_i))],
        // Y X = 1 + q UV and Y^{d-1} UV = q^{2d-2} UV Y^{d-1}
        Gen::X => vec![
            (PbwMonomial { a, b, c, d: d - 1 }, 0),
            (PbwMonomial { a, b: b + 1, c: c + 1, d: d - 1 }, 2 * (2 * d_i - 1)),
        ],
        Gen::Y if a == 0 => vec![(PbwMonomial { a, b, c, d: d + 1 }, 0)],
        // U^b V^c Y = q^{-(b+c)} Y U^b V^c and X Y = 1 + q^{-1} UV
        Gen::Y => vec![
            (PbwMonomial { a: a - 1, b, c, d }, -2 * (b_i + c_i)),
            (PbwMonomial { a: a - 1, b: b + 1, c: c + 1, d }, -2 * (b_i + c_i) - 2),
        ],
    }
}

type PolyComb = HashMap<PbwMonomial, LaurentPoly>;

fn rmul_gen_comb(x: &PolyComb, g: Gen) -> PolyComb {
    let mut out: PolyComb = HashMap::with_capacity(x.len() * 2);
    for (m, p) in x {
        for (m2, e) in rmul_gen(m, g) {
            let term = p.shift(e);
            let slot = out.entry(m2).or_insert_with(LaurentPoly::zero);
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn poly_comb_to_elem(x: PolyComb) -> AlgElem {
    LinComb::from_terms(x.into_iter().map(|(m, p)| (m, QScalar::from_poly(p))))
}

/// Right-multiplies a normal monomial by a generator word.
fn monomial_times_word(m: &PbwMonomial, word: &[Gen]) -> AlgElem {
    let mut cur: PolyComb = HashMap::new();
    cur.insert(*m, LaurentPoly::one());
    for &g in word {
        cur = rmul_gen_comb(&cur, g);
    }
    poly_comb_to_elem(cur)
}

/// Normal form of `coeff * g_1 g_2 ... g_n`.
pub fn normal_form(word: &[Gen], coeff: &QScalar) -> AlgElem {
    monomial_times_word(&PbwMonomial::ONE, word).scale(coeff)
}

/// Order in which rewrite rules are applied by [`reduce_word`].
#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Rewrites a word to normal form with the string-rewriting system
/// UX -> qXU, VX -> qXV, YU -> qUY, YV -> qVY, VU -> UV, XY -> 1 + q^{-1}UV,
/// YX -> 1 + qUV, choosing redexes according to `strategy`. Independent of
/// [`normal_form`], so the two can cross-check each other.
pub fn reduce_word(word: &[Gen], strategy: Strategy) -> AlgElem {
    use rand::SeedableRng;
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(rand_chacha::ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    // pending words with t-exponent coefficients (integer multiplicity)
    let mut pending: Vec<(Vec<Gen>, i32)> = vec![(word.to_vec(), 0)];
    let mut done: HashMap<PbwMonomial, LaurentPoly> = HashMap::new();
    while let Some((w, e)) = pending.pop() {
        let redexes: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| matches!(
                (w[i], w[i + 1]),
                (Gen::U, Gen::X) | (Gen::V, Gen::X) | (Gen::Y, Gen::U) | (Gen::Y, Gen::V) | (Gen::V, Gen::U) | (Gen::X, Gen::Y) | (Gen::Y, Gen::X)
            ))
            .collect();
        if redexes.is_empty() {
            let mut m = PbwMonomial::ONE;
            for g in &w {
                match g {
                    Gen::X => m.a += 1,
                    Gen::U => m.b += 1,
                    Gen::V => m.c += 1,
                    Gen::Y => m.d += 1,
                }
            }
            let slot = done.entry(m).or_insert_with(LaurentPoly::zero);
            *slot = &*slot + &LaurentPoly::t_pow(e);
            continue;
        }
        let i = match (strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => redexes[0],
            (Strategy::Rightmost, _) => *redexes.last().unwrap(),
            (_, Some(r)) => redexes[r.gen_range(0..redexes.len())],
            _ => unreachable!(),
        };
        let (l, r) = (w[i], w[i + 1]);
        let splice = |mid: &[Gen]| {
            let mut nw = w[..i].to_vec();
            nw.extend_from_slice(mid);
            nw.extend_from_slice(&w[i + 2..]);
            nw
        };
        match (l, r) {
            (Gen::U, Gen::X) => pending.push((splice(&[Gen::X, Gen::U]), e + 2)),
            (Gen::V, Gen::X) => pending.push((splice(&[Gen::X, Gen::V]), e + 2)),
            (Gen::Y, Gen::U) => pending.push((splice(&[Gen::U, Gen::Y]), e + 2)),
            (Gen::Y, Gen::V) => pending.push((splice(&[Gen::V, Gen::Y]), e + 2)),
            (Gen::V, Gen::U) => pending.push((splice(&[Gen::U, Gen::V]), e)),
            (Gen::X, Gen::Y) => {
                pending.push((splice(&[]), e));
                pending.push((splice(&[Gen::U, Gen::V]), e - 2));
            }
            (Gen::Y, Gen::X) => {
                pending.push((splice(&[]), e));
                pending.push((splice(&[Gen::U, Gen::V]), e + 2));
            }
            _ => unreachable!(),
        }
    }
    done.retain(|_, p| !p.is_zero());
    poly_comb_to_elem(done)
}

/// The Hopf *-algebra O(SU_q(2)).
#[derive(Clone, Copy, Debug, Default)]
pub struct SuQ2;

static PRODUCTS: Lazy<Mutex<HashMap<(PbwMonomial, PbwMonomial), AlgElem>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static COPRODUCTS: Lazy<Mutex<HashMap<PbwMonomial, TensorAlg>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn q_pow_elem(e: i32, sign: i64, g: Gen) -> AlgElem {
    LinComb::term(g.monomial(), QScalar::t_pow(e).scale(&crate::scalar::rat(sign)))
}

impl SuQ2 {
    pub fn gen(&self, g: Gen) -> AlgElem {
        LinComb::basis(g.monomial())
    }

    fn generator_coproduct(&self, g: Gen) -> TensorAlg {
        let (x, u, v, y) = (Gen::X.monomial(), Gen::U.monomial(), Gen::V.monomial(), Gen::Y.monomial());
        let pairs = match g {
            Gen::X => [(x, x), (u, v)],
            Gen::U => [(x, u), (u, y)],
            Gen::V => [(v, x), (y, v)],
            Gen::Y => [(v, u), (y, y)],
        };
        LinComb::from_terms(pairs.into_iter().map(|p| (p, QScalar::one())))
    }

    /// Extends generator images as an antihomomorphism: `f(X^aU^bV^cY^d) = f(Y)^d f(V)^c f(U)^b f(X)^a`.
    fn anti_extend(&self, m: &PbwMonomial, images: [AlgElem; 4]) -> AlgElem {
        let mut acc = self.one();
        let [fx, fu, fv, fy] = images;
        for (img, e) in [(fy, m.d), (fv, m.c), (fu, m.b), (fx, m.a)] {
            for _ in 0..e {
                acc = self.mul(&acc, &img);
            }
        }
        acc
    }
}

impl HopfAlgebra for SuQ2 {
    type Basis = PbwMonomial;

    fn name(&self) -> String {
        "O(SU_q(2))".into()
    }

    fn one(&self) -> AlgElem {
        LinComb::basis(PbwMonomial::ONE)
    }

    fn mul_basis(&self, x: &PbwMonomial, y: &PbwMonomial) -> AlgElem {
        if *x == PbwMonomial::ONE {
            return LinComb::basis(*y);
        }
        if *y == PbwMonomial::ONE {
            return LinComb::basis(*x);
        }
        if let Some(hit) = PRODUCTS.lock().get(&(*x, *y)) {
            return hit.clone();
        }
        let out = monomial_times_word(x, &y.word());
        PRODUCTS.lock().insert((*x, *y), out.clone());
        out
    }

    fn coproduct_basis(&self, m: &PbwMonomial) -> TensorAlg {
        if let Some(hit) = COPRODUCTS.lock().get(m) {
            return hit.clone();
        }
        let mut acc: TensorAlg = LinComb::basis((PbwMonomial::ONE, PbwMonomial::ONE));
        for g in m.word() {
            acc = self.mul_pairs(&acc, &self.generator_coproduct(g));
        }
        COPRODUCTS.lock().insert(*m, acc.clone());
        acc
    }

    fn counit_basis(&self, m: &PbwMonomial) -> QScalar {
        if m.b == 0 && m.c == 0 {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    }

    fn antipode_basis(&self, m: &PbwMonomial) -> AlgElem {
        // S(X) = Y, S(U) = -qU, S(V) = -q^{-1}V, S(Y) = X
        self.anti_extend(m, [self.gen(Gen::Y), q_pow_elem(2, -1, Gen::U), q_pow_elem(-2, -1, Gen::V), self.gen(Gen::X)])
    }

    fn antipode_inv_basis(&self, m: &PbwMonomial) -> AlgElem {
        self.anti_extend(m, [self.gen(Gen::Y), q_pow_elem(-2, -1, Gen::U), q_pow_elem(2, -1, Gen::V), self.gen(Gen::X)])
    }

    fn star_basis(&self, m: &PbwMonomial) -> AlgElem {
        // X* = Y, U* = -q^{-1}V, V* = -qU, Y* = X
        self.anti_extend(m, [self.gen(Gen::Y), q_pow_elem(-2, -1, Gen::V), q_pow_elem(2, -1, Gen::U), self.gen(Gen::X)])
    }

    fn is_commutative(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_axioms;

    fn q(n: i32) -> QScalar {
        QScalar::q_pow(n)
    }

    fn m(a: u32, b: u32, c: u32, d: u32) -> PbwMonomial {
        PbwMonomial::new(a, b, c, d).unwrap()
    }

    #[test]
    fn rewrite_examples() {
        use Gen::*;
        assert_eq!(normal_form(&[U, X], &QScalar::one()), LinComb::term(m(1, 1, 0, 0), q(1)));
        let yx = LinComb::from_terms([(PbwMonomial::ONE, QScalar::one()), (m(0, 1, 1, 0), q(1))]);
        assert_eq!(normal_form(&[Y, X], &QScalar::one()), yx);
        let xyv = LinComb::from_terms([(m(0, 0, 1, 0), QScalar::one()), (m(0, 1, 2, 0), q(-1))]);
        assert_eq!(normal_form(&[X, Y, V], &QScalar::one()), xyv);
    }

    #[test]
    fn strategies_agree_with_normal_form() {
        use Gen::*;
        let word = [Y, U, X, V, Y, X, X, U];
        let nf = normal_form(&word, &QScalar::one());
        for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(7)] {
            assert_eq!(reduce_word(&word, s), nf);
        }
    }

    #[test]
    fn generator_tables() {
        let a = SuQ2;
        let x = a.gen(Gen::X);
        assert_eq!(a.coproduct(&x).len(), 2);
        assert!(a.counit(&x).is_one());
        assert!(a.counit(&a.mul(&a.gen(Gen::U), &a.gen(Gen::V))).is_zero());
        assert_eq!(a.antipode(&x), a.gen(Gen::Y));
        assert_eq!(a.antipode(&a.gen(Gen::U)), LinComb::term(m(0, 1, 0, 0), q(1).neg()));
        assert_eq!(a.star(&a.gen(Gen::U)), LinComb::term(m(0, 0, 1, 0), q(-1).neg()));
        let xu = a.mul(&x, &a.gen(Gen::U));
        assert_eq!(a.star(&xu), LinComb::term(m(0, 0, 1, 1), q(-1).neg()));
    }

    #[test]
    fn x_squared_coproduct() {
        let a = SuQ2;
        let x2 = LinComb::basis(m(2, 0, 0, 0));
        let expected = LinComb::from_terms([
            ((m(2, 0, 0, 0), m(2, 0, 0, 0)), QScalar::one()),
            ((m(1, 1, 0, 0), m(1, 0, 1, 0)), QScalar::one().add(&q(2))),
            ((m(0, 2, 0, 0), m(0, 0, 2, 0)), QScalar::one()),
        ]);
        assert_eq!(a.coproduct(&x2), expected);
    }

    #[test]
    fn axioms_on_low_degree() {
        let a = SuQ2;
        for mono in PbwMonomial::up_to_degree(2) {
            assert!(check_axioms(&a, &LinComb::basis(mono)).is_empty(), "{}", mono);
        }
    }

    #[test]
    fn antipode_inverse_round_trip() {
        let a = SuQ2;
        for mono in PbwMonomial::up_to_degree(3) {
            let x = LinComb::basis(mono);
            assert_eq!(a.antipode_inv(&a.antipode(&x)), x);
            assert_eq!(a.star(&a.star(&x)), x);
        }
    }
}
