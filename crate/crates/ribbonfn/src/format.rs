//! Output encodings: canonical text, JSON, LaTeX, and CSV tables.
//!
//! The JSON layout is a fixed contract: terms in canonical order (degree,
//! then lexicographic on parts), each coefficient as ascending
//! `[exponent, "integer"]` pairs with no zero entries.  Identical values
//! always serialize to identical bytes.

use serde::Serialize;

use ribbonfn_core::suite::{IdentityReport, SuiteBounds};
use ribbonfn_core::{Partition, QPoly, SymFunc};

#[derive(Serialize)]
pub struct JsonSymFunc {
    basis: &'static str,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonTerm {
    index: Vec<u32>,
    coeff: Vec<(u32, String)>,
}

fn json_coeff(c: &QPoly) -> Vec<(u32, String)> {
    c.terms().map(|(e, v)| (e, v.to_string())).collect()
}

impl JsonSymFunc {
    pub fn new(f: &SymFunc) -> Self {
        JsonSymFunc {
            basis: "schur",
            terms: f
                .terms()
                .map(|(lam, c)| JsonTerm {
                    index: lam.parts().to_vec(),
                    coeff: json_coeff(c),
                })
                .collect(),
        }
    }
}

/// Renders a symmetric function as compact JSON.
pub fn symfunc_json(f: &SymFunc) -> String {
    serde_json::to_string(&JsonSymFunc::new(f)).expect("serialization cannot fail")
}

/// Renders a symmetric function as LaTeX mirroring the text form:
/// `s_{1,1,1} + (q + q^2)\,s_{2,1} + q^{3}\,s_{3}`.
pub fn symfunc_latex(f: &SymFunc) -> String {
    let text = f.to_string();
    if text == "0" {
        return "0".to_string();
    }
    // The text form is already canonical; rewrite its tokens.
    let mut out = String::new();
    let mut rest = text.as_str();
    while let Some(pos) = rest.find("s[") {
        let (head, tail) = rest.split_at(pos);
        out.push_str(&latex_scalar(head));
        let close = tail.find(']').expect("display always closes its bracket");
        if head.ends_with('*') {
            // replace the `*` we just copied with a thin space
            out.truncate(out.len() - 1);
            out.push_str("\\,");
        }
        out.push_str("s_{");
        out.push_str(&tail[2..close]);
        out.push('}');
        rest = &tail[close + 1..];
    }
    out.push_str(&latex_scalar(rest));
    out
}

/// Rewrites `q^12` as `q^{12}` in coefficient text.
fn latex_scalar(text: &str) -> String {
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '^' {
            out.push(c);
            continue;
        }
        let mut digits = String::new();
        while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
            digits.push(chars.next().expect("peeked"));
        }
        out.push_str("^{");
        out.push_str(&digits);
        out.push('}');
    }
    out
}

#[derive(Serialize)]
struct JsonBounds {
    max_m: i64,
    max_k: u32,
    max_size: u32,
    window: Option<u32>,
}

#[derive(Serialize)]
struct JsonFailure {
    identity: String,
    inputs: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct JsonReport {
    suite: String,
    bounds: JsonBounds,
    cases: u64,
    failures: Vec<JsonFailure>,
}

/// Renders an identity report as compact JSON.
pub fn report_json(report: &IdentityReport) -> String {
    let b = report.bounds;
    let dto = JsonReport {
        suite: report.suite.clone(),
        bounds: JsonBounds {
            max_m: b.max_m,
            max_k: b.max_k,
            max_size: b.max_size,
            window: b.window,
        },
        cases: report.cases,
        failures: report
            .failures
            .iter()
            .map(|f| JsonFailure {
                identity: f.identity.clone(),
                inputs: f.inputs.clone(),
                lhs: f.lhs.clone(),
                rhs: f.rhs.clone(),
            })
            .collect(),
    };
    serde_json::to_string(&dto).expect("serialization cannot fail")
}

/// Renders an identity report for terminals: a summary line, any failures,
/// and a final verdict line.
pub fn report_text(report: &IdentityReport) -> String {
    let mut out = format!(
        "suite {}: {} cases, {} failures ({})\n",
        report.suite,
        report.cases,
        report.failures.len(),
        bounds_text(&report.bounds),
    );
    for f in &report.failures {
        out.push_str(&format!(
            "  {}\n    inputs: {}\n    lhs = {}\n    rhs = {}\n",
            f.identity, f.inputs, f.lhs, f.rhs
        ));
    }
    out.push_str(if report.pass() { "PASS\n" } else { "FAIL\n" });
    out
}

fn bounds_text(b: &SuiteBounds) -> String {
    let mut out = format!(
        "max-m {}, max-k {}, max-size {}",
        b.max_m, b.max_k, b.max_size
    );
    if let Some(w) = b.window {
        out.push_str(&format!(", window {w}"));
    }
    out
}

/// Writes a Kostka table as CSV with every field quoted; partitions are
/// comma-joined inside the quotes, so the header row is
/// `"lambda","mu","kostka_foulkes"`.
pub fn kostka_csv(lambda: &Partition, table: &[(Partition, QPoly)]) -> String {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_writer(Vec::new());
    w.write_record(["lambda", "mu", "kostka_foulkes"])
        .expect("in-memory write");
    for (mu, coeff) in table {
        w.write_record([lambda.to_string(), mu.to_string(), coeff.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[derive(Serialize)]
struct JsonKostkaEntry {
    mu: Vec<u32>,
    kostka_foulkes: Vec<(u32, String)>,
}

#[derive(Serialize)]
struct JsonKostkaTable {
    lambda: Vec<u32>,
    entries: Vec<JsonKostkaEntry>,
}

/// Renders a Kostka table as compact JSON.
pub fn kostka_json(lambda: &Partition, table: &[(Partition, QPoly)]) -> String {
    let dto = JsonKostkaTable {
        lambda: lambda.parts().to_vec(),
        entries: table
            .iter()
            .map(|(mu, c)| JsonKostkaEntry {
                mu: mu.parts().to_vec(),
                kostka_foulkes: json_coeff(c),
            })
            .collect(),
    };
    serde_json::to_string(&dto).expect("serialization cannot fail")
}
