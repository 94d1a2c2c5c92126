//! Text, JSON and CSV rendering.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use qtensor::report::Report;
use qtensor::scalar::{pretty_scalar, QScalar};
use qtensor::wigner::WignerReport;

/// Like `println!`, but a closed pipe is not an error.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct NumericAt {
    pub q: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct ValueOut {
    pub value: String,
    pub canonical: String,
    pub numeric_at: Option<NumericAt>,
}

impl ValueOut {
    pub fn scalar(x: &QScalar, numeric: Option<(String, String)>) -> Self {
        ValueOut { value: pretty_scalar(x), canonical: x.to_string(), numeric_at: numeric.map(Into::into) }
    }
}

impl From<(String, String)> for NumericAt {
    fn from((q, value): (String, String)) -> Self {
        NumericAt { q, value }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn emit_value(format: Format, v: &ValueOut) {
    match format {
        Format::Text => match &v.numeric_at {
            Some(n) if n.value != v.value => say!("{}\n{} at q = {}", v.value, n.value, n.q),
            _ => say!("{}", v.value),
        },
        Format::Json => say!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Csv => {
            say!("value,canonical,q,numeric");
            let (q, n) = v.numeric_at.as_ref().map(|n| (n.q.as_str(), n.value.as_str())).unwrap_or(("", ""));
            say!("{},{},{},{}", csv_field(&v.value), csv_field(&v.canonical), csv_field(q), csv_field(n));
        }
    }
}

pub fn emit_rows(format: Format, header: &[&str], rows: &[Vec<String>]) {
    match format {
        Format::Text => {
            for r in rows {
                say!("({} {}; {} {} | {} {}) = {}", r[0], r[1], r[2], r[3], r[4], r[5], r[6]);
            }
        }
        Format::Json => {
            let objs: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|r| header.iter().zip(r).map(|(k, v)| (k.to_string(), serde_json::Value::from(v.clone()))).collect())
                .collect();
            say!("{}", serde_json::to_string_pretty(&objs).expect("serializable"));
        }
        Format::Csv => {
            say!("{}", header.join(","));
            for r in rows {
                say!("{}", r.iter().map(|s| csv_field(s)).collect::<Vec<_>>().join(","));
            }
        }
    }
}

#[derive(Serialize)]
struct WithWigner<'a> {
    #[serde(flatten)]
    report: &'a Report,
    reduced_elements: &'a [String],
    factorization: &'static str,
    entries: &'a [qtensor::wigner::Residual],
}

pub fn emit_report(format: Format, report: &Report, wigner: Option<&WignerReport>) {
    match format {
        Format::Text => {
            for c in &report.checks {
                say!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            if let Some(w) = wigner {
                say!("reduced elements: {}", w.reduced_elements.join(", "));
            }
            say!("{}: {}", report.suite, if report.passed() { "pass" } else { "fail" });
        }
        Format::Json => {
            let text = match wigner {
                Some(w) => serde_json::to_string_pretty(&WithWigner {
                    report,
                    reduced_elements: &w.reduced_elements,
                    factorization: if w.factorization { "pass" } else { "fail" },
                    entries: &w.entries,
                }),
                None => serde_json::to_string_pretty(report),
            };
            say!("{}", text.expect("serializable"));
        }
        Format::Csv => {
            say!("name,passed,detail");
            for c in &report.checks {
                say!("{},{},{}", csv_field(&c.name), c.passed, csv_field(&c.detail));
            }
        }
    }
}
