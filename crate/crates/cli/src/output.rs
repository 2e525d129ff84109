//! The result document printed on stdout, in plain, JSON, or LaTeX form.
//!
//! Big integers are always carried as decimal strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use hwv_core::identities::VerificationReport;
use hwv_core::{HilbertSeries, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Plain,
    Json,
    Latex,
}

/// Payload of one command.
pub enum Payload {
    Value {
        label: String,
        value: BigInt,
    },
    Row {
        label: String,
        coefficients: Vec<BigInt>,
        sum: BigInt,
    },
    Hilbert {
        series: HilbertSeries,
        expansion: TruncatedSeries<BigInt>,
    },
    Verify {
        suite: String,
        reports: Vec<VerificationReport>,
        verbose: bool,
    },
}

#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub format: Format,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pole_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<VerificationReport>>,
}

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(BigInt::to_string).collect()
}

fn joined(xs: &[BigInt]) -> String {
    strings(xs).join(" ")
}

impl OutputDocument {
    pub fn new(
        command: &str,
        params: BTreeMap<String, String>,
        format: Format,
        payload: &Payload,
    ) -> Self {
        let mut doc = OutputDocument {
            command: command.to_string(),
            params,
            format,
            result: Value::Null,
            pole_order: None,
            numerator: None,
            reports: None,
        };
        match payload {
            Payload::Value { label, value } => {
                doc.result = json!({ "family": label, "value": value.to_string() });
            }
            Payload::Row {
                label,
                coefficients,
                sum,
            } => {
                doc.result = json!({
                    "family": label,
                    "coefficients": strings(coefficients),
                    "sum": sum.to_string(),
                });
            }
            Payload::Hilbert { series, expansion } => {
                doc.result = json!({
                    "degree": series.numerator_at_one().to_string(),
                    "expansion": {
                        "order": expansion.order(),
                        "coefficients": strings(expansion.coeffs()),
                    },
                });
                doc.pole_order = Some(series.pole_order());
                doc.numerator = Some(strings(series.numerator().coeffs()));
            }
            Payload::Verify { suite, reports, .. } => {
                let passed = reports.iter().filter(|r| r.passed()).count();
                doc.result = json!({
                    "suite": suite,
                    "total": reports.len(),
                    "passed": passed,
                    "failed": reports.len() - passed,
                });
                doc.reports = Some(reports.clone());
            }
        }
        doc
    }

    pub fn render(&self, payload: &Payload) -> String {
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            Format::Plain => render_plain(payload),
            Format::Latex => match payload {
                Payload::Hilbert { series, .. } => format!("{}\n", latex_hilbert(series)),
                other => render_plain(other),
            },
        }
    }
}

fn render_plain(payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Value { value, .. } => writeln!(out, "{value}").unwrap(),
        Payload::Row { coefficients, .. } => writeln!(out, "{}", joined(coefficients)).unwrap(),
        Payload::Hilbert { series, expansion } => {
            writeln!(out, "numerator: {}", joined(series.numerator().coeffs())).unwrap();
            writeln!(out, "pole order: {}", series.pole_order()).unwrap();
            writeln!(
                out,
                "expansion to t^{}: {}",
                expansion.order(),
                joined(expansion.coeffs())
            )
            .unwrap();
        }
        Payload::Verify {
            suite,
            reports,
            verbose,
        } => {
            for r in reports.iter().filter(|r| *verbose || !r.passed()) {
                writeln!(out, "{r}").unwrap();
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(
                out,
                "verify {suite}: {passed} passed, {} failed",
                reports.len() - passed
            )
            .unwrap();
        }
    }
    out
}

/// `\frac{c_0 + c_1 t + ...}{(1-t)^{D}}`.
pub fn latex_hilbert(h: &HilbertSeries) -> String {
    let mut num = String::new();
    for (i, c) in h.numerator().coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if num.is_empty() {
            if c.is_negative() {
                num.push('-');
            }
        } else {
            write!(num, " {sign} ").unwrap();
        }
        let abs = c.abs();
        let coeff = if abs.is_one() && i > 0 {
            String::new()
        } else {
            abs.to_string()
        };
        match i {
            0 => write!(num, "{abs}").unwrap(),
            1 => write!(num, "{coeff}t").unwrap(),
            _ => write!(num, "{coeff}t^{{{i}}}").unwrap(),
        }
    }
    if num.is_empty() {
        num.push('0');
    }
    format!("\\frac{{{num}}}{{(1-t)^{{{}}}}}", h.pole_order())
}
