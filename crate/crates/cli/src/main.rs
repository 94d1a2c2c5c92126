//! `qtensor`: compute d-functions, Clebsch–Gordan coefficients and Haar
//! values, and run the verification suites.
//!
//! Half-integers are passed as twice their value (`--j 3` means `j = 3/2`).

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit_report, emit_value, emit_rows, Format, ValueOut};
use qtensor::cg::{cg, couple, CgKey};
use qtensor::classical::FiniteGroup;
use qtensor::fock::{verify_boson_ito, Variant};
use qtensor::haar::haar_with;
use qtensor::ito::Kind;
use qtensor::report::{Check, Report};
use qtensor::scalar::{eval_numeric, parse_rat, parse_scalar, pretty_scalar, QScalar};
use qtensor::suites;
use qtensor::suq2::{dfun, parse_alg, pretty_alg, HalfInt};
use qtensor::Error;

#[derive(Parser, Debug)]
#[command(name = "qtensor", version, about = "Exact tensor-operator algebra for O(SU_q(2)) and finite groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest spin, as twice its value.
    #[arg(long, global = true)]
    jmax: Option<i32>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20240611)]
    seed: u64,
    /// Digits for numeric evaluation.
    #[arg(long, global = true, default_value_t = 30)]
    tol: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Clebsch–Gordan coefficients; all of them for `j1 (x) j2` unless the
    /// full set of labels is given.
    #[command(allow_negative_numbers = true)]
    Cg {
        #[arg(long)]
        j1: i32,
        #[arg(long)]
        j2: i32,
        #[arg(long)]
        j: Option<i32>,
        #[arg(long)]
        m1: Option<i32>,
        #[arg(long)]
        m2: Option<i32>,
        #[arg(long)]
        m: Option<i32>,
        /// Also evaluate at this rational q.
        #[arg(long)]
        q_num: Option<String>,
    },
    /// The matrix coefficient pi^j_{row,col}.
    #[command(allow_negative_numbers = true)]
    Dfun {
        #[arg(long)]
        j: i32,
        #[arg(long)]
        row: i32,
        #[arg(long)]
        col: i32,
    },
    /// Haar functional of an algebra element such as `X*Y - U*V`.
    Haar {
        #[arg(long)]
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Evaluate a scalar expression at a rational q.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        q_num: String,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    Hopf,
    Cg,
    Haar,
    Ito(TripleArgs),
    WignerEckart(TripleArgs),
    Boson {
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    Classical {
        /// `s3`, `z2` or a path to a JSON table `{order, mul, names}`.
        #[arg(long, default_value = "s3")]
        group: String,
    },
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    #[arg(long)]
    p: Option<i32>,
    #[arg(long)]
    q: Option<i32>,
    #[arg(long)]
    r: Option<i32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Ordinary,
    Twisted,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Ordinary => Kind::Ordinary,
            KindArg::Twisted => Kind::Twisted,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    A37,
    A38,
    A39,
    A40,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::A37 => Variant::A37,
            VariantArg::A38 => Variant::A38,
            VariantArg::A39 => Variant::A39,
            VariantArg::A40 => Variant::A40,
        }
    }
}

fn spin(twice: i32, what: &str) -> Result<HalfInt, Error> {
    if twice < 0 {
        return Err(Error::Domain(format!("{what} must be nonnegative, got {twice}")));
    }
    Ok(HalfInt::from_twice(twice))
}

fn numeric(x: &QScalar, q: Option<&String>, digits: u32) -> Result<Option<(String, String)>, Error> {
    match q {
        None => Ok(None),
        Some(q) => {
            let qv = parse_rat(q)?;
            Ok(Some((q.clone(), eval_numeric(x, &qv, digits)?.to_decimal(digits))))
        }
    }
}

/// Runs the command; `Ok(true)` when everything requested passed.
fn run(cli: Cli) -> Result<bool, Error> {
    let g = cli.global;
    match cli.command {
        Command::Cg { j1, j2, j, m1, m2, m, q_num } => {
            let (s1, s2) = (spin(j1, "j1")?, spin(j2, "j2")?);
            match (j, m1, m2, m) {
                (Some(j), Some(m1), Some(m2), Some(m)) => {
                    let v = cg(CgKey::twice(j1, m1, j2, m2, j, m))?;
                    emit_value(g.format, &ValueOut::scalar(&v, numeric(&v, q_num.as_ref(), g.tol)?));
                }
                (None, None, None, None) => {
                    let mut rows = Vec::new();
                    for state in couple(s1, s2)? {
                        for (a, b, c) in &state.components {
                            rows.push(vec![
                                s1.to_string(),
                                a.to_string(),
                                s2.to_string(),
                                b.to_string(),
                                state.j.to_string(),
                                state.m.to_string(),
                                pretty_scalar(c),
                            ]);
                        }
                    }
                    emit_rows(g.format, &["j1", "m1", "j2", "m2", "j", "m", "value"], &rows);
                }
                _ => return Err(Error::Domain("give all of --j --m1 --m2 --m, or none".into())),
            }
            Ok(true)
        }
        Command::Dfun { j, row, col } => {
            let x = dfun(spin(j, "j")?, HalfInt::from_twice(row), HalfInt::from_twice(col))?;
            emit_value(g.format, &ValueOut { value: pretty_alg(&x), canonical: x.to_string(), numeric_at: None });
            Ok(true)
        }
        Command::Haar { expr } => {
            let x = parse_alg(&expr)?;
            let jmax = spin(g.jmax.unwrap_or(6), "jmax")?;
            let v = haar_with(&x, jmax)?;
            emit_value(g.format, &ValueOut::scalar(&v, None));
            Ok(true)
        }
        Command::Eval { expr, q_num, digits } => {
            let x = parse_scalar(&expr)?;
            let (q, v) = numeric(&x, Some(&q_num), digits)?.expect("q given");
            emit_value(g.format, &ValueOut { value: v.clone(), canonical: x.to_string(), numeric_at: Some((q, v).into()) });
            Ok(true)
        }
        Command::Verify { suite } => verify(&g, suite),
    }
}

fn verify(g: &Global, suite: Suite) -> Result<bool, Error> {
    let jmax = |default: i32| spin(g.jmax.unwrap_or(default), "jmax");
    let report = match suite {
        Suite::Hopf => suites::hopf_suite(jmax(3)?, 4)?,
        Suite::Cg => suites::cg_suite(jmax(3)?, HalfInt::ONE.min(jmax(3)?))?,
        Suite::Haar => suites::haar_suite(4, HalfInt::ONE.min(jmax(2)?))?,
        Suite::Ito(t) => match (t.p, t.q, t.r) {
            (Some(p), Some(q), Some(r)) => {
                let kind = t.kind.map(Kind::from).unwrap_or(Kind::Ordinary);
                suites::ito_triple_suite(kind, spin(p, "p")?, spin(q, "q")?, spin(r, "r")?)?
            }
            (None, None, None) => suites::ito_suite(jmax(3)?, HalfInt::ONE.min(jmax(3)?))?,
            _ => return Err(Error::Domain("give all of --p --q --r, or none".into())),
        },
        Suite::WignerEckart(t) => match (t.p, t.q, t.r) {
            (Some(p), Some(q), Some(r)) => {
                let kind = t.kind.map(Kind::from).unwrap_or(Kind::Ordinary);
                let mut report = Report::new("wigner-eckart", true);
                return match suites::wigner_triple(kind, spin(p, "p")?, spin(q, "q")?, spin(r, "r")?)? {
                    None => {
                        report.push(Check::new("family_exists", false, "triangle condition fails"));
                        emit_report(g.format, &report, None);
                        Ok(false)
                    }
                    Some(we) => {
                        report.extend(we.checks.clone());
                        emit_report(g.format, &report, Some(&we));
                        Ok(report.passed())
                    }
                };
            }
            (None, None, None) => suites::wigner_suite(jmax(3)?)?,
            _ => return Err(Error::Domain("give all of --p --q --r, or none".into())),
        },
        Suite::Boson { variant, kind } => match (variant, kind) {
            (Some(v), k) => {
                let v = Variant::from(v);
                let kind = k.map(Kind::from).unwrap_or(v.expected_kind());
                let mut report = Report::new("boson", true);
                report.extend(verify_boson_ito(v, kind, jmax(4)?)?);
                report
            }
            (None, None) => suites::boson_suite(jmax(4)?)?,
            (None, Some(_)) => return Err(Error::Domain("--kind needs --variant".into())),
        },
        Suite::Classical { group } => match group.as_str() {
            "s3" => suites::classical_suite(g.seed)?,
            "z2" => suites::loaded_group_suite(FiniteGroup::z2())?,
            path => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
                suites::loaded_group_suite(FiniteGroup::from_json(&text)?)?
            }
        },
    };
    emit_report(g.format, &report, None);
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
