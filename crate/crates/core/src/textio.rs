//! Text formats: the instance file grammar and the certificate JSON.
//!
//! Instance files are line oriented:
//!
//! ```text
//! leontief-lp v1
//! m <int> n <int>
//! b <m rationals>
//! c <n rationals>
//! A <nnz>
//! <i> <j> <rational>      (nnz lines, 1-based indices)
//! end
//! ```
//!
//! Unlisted entries are zero; a duplicate `(i, j)` is a parse error. Lines
//! whose first non-blank character is `#` are comments. Rationals use the
//! `p` / `p/q` grammar of [`crate::num::parse_rational`].
//!
//! Certificates are JSON objects with an `"outcome"` tag and the case's
//! vectors among `"x"`, `"y"`, `"z"`, `"r"` as arrays of rational strings,
//! so no precision is lost in transit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certify::Outcome;
use crate::model::Instance;
use crate::num::{format_rational, parse_rational, Rational};

/// A located instance-file parse error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line in the input.
    pub line: usize,
    /// 1-based column of the offending token (0 for whole-line errors).
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Lines<'a> {
    remaining: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { remaining: text.lines().enumerate() }
    }

    /// Next significant line as (1-based number, content).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, line) in self.remaining.by_ref() {
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            return Some((idx + 1, line));
        }
        None
    }
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return out;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        out.push((offset + 1, &trimmed[..end]));
        rest = &trimmed[end..];
        offset += end;
    }
}

fn fail<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, message: message.into() })
}

fn parse_count(line: usize, token: (usize, &str)) -> Result<usize, ParseError> {
    token
        .1
        .parse::<usize>()
        .or_else(|_| fail(line, token.0, format!("expected a nonnegative integer, got {:?}", token.1)))
}

fn parse_rat(line: usize, token: (usize, &str)) -> Result<Rational, ParseError> {
    parse_rational(token.1).or_else(|e| fail(line, token.0, e.to_string()))
}

/// Parses the instance grammar. The result is structurally valid (dimensions
/// agree, no duplicate entries) but not yet validated as a Leontief
/// substitution system; run [`crate::model::validate`] for that.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = Lines::new(text);

    let (no, line) = match lines.next() {
        Some(found) => found,
        None => return fail(1, 0, "empty input; expected header `leontief-lp v1`"),
    };
    if line.trim() != "leontief-lp v1" {
        return fail(no, 1, "expected header `leontief-lp v1`");
    }

    let (no, line) = match lines.next() {
        Some(found) => found,
        None => return fail(no, 0, "missing dimension line `m <int> n <int>`"),
    };
    let toks = tokens(line);
    if toks.len() != 4 || toks[0].1 != "m" || toks[2].1 != "n" {
        return fail(no, 1, "expected dimension line `m <int> n <int>`");
    }
    let m = parse_count(no, toks[1])?;
    let n = parse_count(no, toks[3])?;

    let mut vector_line = |name: &str, len: usize| -> Result<Vec<Rational>, ParseError> {
        let (no, line) = match lines.next() {
            Some(found) => found,
            None => return fail(0, 0, format!("missing `{}` line", name)),
        };
        let toks = tokens(line);
        if toks.is_empty() || toks[0].1 != name {
            return fail(no, 1, format!("expected `{}` line", name));
        }
        if toks.len() != len + 1 {
            return fail(
                no,
                toks[0].0,
                format!("`{}` carries {} values, expected {}", name, toks.len() - 1, len),
            );
        }
        toks[1..].iter().map(|t| parse_rat(no, *t)).collect()
    };
    let b = vector_line("b", m)?;
    let c = vector_line("c", n)?;

    let (no, line) = match lines.next() {
        Some(found) => found,
        None => return fail(0, 0, "missing `A <nnz>` line"),
    };
    let toks = tokens(line);
    if toks.len() != 2 || toks[0].1 != "A" {
        return fail(no, 1, "expected `A <nnz>` line");
    }
    let nnz = parse_count(no, toks[1])?;

    let mut entries = Vec::with_capacity(nnz);
    for _ in 0..nnz {
        let (no, line) = match lines.next() {
            Some(found) => found,
            None => return fail(0, 0, "unexpected end of input inside the entry list"),
        };
        let toks = tokens(line);
        if toks.len() != 3 {
            return fail(no, 1, "expected entry line `<i> <j> <rational>`");
        }
        let i = parse_count(no, toks[0])?;
        let j = parse_count(no, toks[1])?;
        if i == 0 || i > m {
            return fail(no, toks[0].0, format!("row index {} outside 1..={}", i, m));
        }
        if j == 0 || j > n {
            return fail(no, toks[1].0, format!("column index {} outside 1..={}", j, n));
        }
        let v = parse_rat(no, toks[2])?;
        if entries.iter().any(|(ei, ej, _)| *ei == i - 1 && *ej == j - 1) {
            return fail(no, toks[0].0, format!("duplicate entry ({}, {})", i, j));
        }
        entries.push((i - 1, j - 1, v));
    }

    let (no, line) = match lines.next() {
        Some(found) => found,
        None => return fail(0, 0, "missing final `end` line"),
    };
    if line.trim() != "end" {
        return fail(no, 1, "expected final `end` line");
    }
    if let Some((no, _)) = lines.next() {
        return fail(no, 1, "unexpected content after `end`");
    }

    Instance::from_triplets(m, n, &entries, b, c)
        .map_err(|e| ParseError { line: 0, col: 0, message: e.to_string() })
}

/// Emits the canonical text form: entries sorted by `(row, column)`,
/// rationals in lowest terms. Parsing the output reproduces the instance.
pub fn emit_instance(inst: &Instance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "leontief-lp v1").unwrap();
    writeln!(out, "m {} n {}", inst.rows(), inst.columns()).unwrap();
    let join = |values: &[Rational]| {
        values.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    };
    if inst.rows() == 0 {
        writeln!(out, "b").unwrap();
    } else {
        writeln!(out, "b {}", join(&inst.b)).unwrap();
    }
    if inst.columns() == 0 {
        writeln!(out, "c").unwrap();
    } else {
        writeln!(out, "c {}", join(&inst.c)).unwrap();
    }
    let triplets = inst.triplets();
    writeln!(out, "A {}", triplets.len()).unwrap();
    for (i, j, v) in &triplets {
        writeln!(out, "{} {} {}", i + 1, j + 1, format_rational(v)).unwrap();
    }
    writeln!(out, "end").unwrap();
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateParseError(pub String);

impl fmt::Display for CertificateParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid certificate: {}", self.0)
    }
}

impl std::error::Error for CertificateParseError {}

fn encode(values: &[Rational]) -> Option<Vec<String>> {
    Some(values.iter().map(format_rational).collect())
}

/// Serializes an outcome as its certificate JSON.
pub fn emit_certificate(outcome: &Outcome) -> String {
    let file = match outcome {
        Outcome::Optimal { x, y } => CertificateFile {
            outcome: "optimal".into(),
            x: encode(x),
            y: encode(y),
            z: None,
            r: None,
        },
        Outcome::PrimalInfeasible { z, y } => CertificateFile {
            outcome: "primal_infeasible".into(),
            x: None,
            y: encode(y),
            z: encode(z),
            r: None,
        },
        Outcome::DualInfeasible { x, r } => CertificateFile {
            outcome: "dual_infeasible".into(),
            x: encode(x),
            y: None,
            z: None,
            r: encode(r),
        },
        Outcome::BothInfeasible { z, r } => CertificateFile {
            outcome: "both_infeasible".into(),
            x: None,
            y: None,
            z: encode(z),
            r: encode(r),
        },
    };
    serde_json::to_string_pretty(&file).expect("certificate serializes")
}

/// Parses a certificate JSON back into an outcome. Vector dimensions are not
/// checked here; the verifier reports those against a concrete instance.
pub fn parse_certificate(text: &str) -> Result<Outcome, CertificateParseError> {
    let file: CertificateFile =
        serde_json::from_str(text).map_err(|e| CertificateParseError(e.to_string()))?;
    let decode = |field: &'static str, values: Option<Vec<String>>| {
        let values = values
            .ok_or_else(|| CertificateParseError(format!("missing field {:?}", field)))?;
        values
            .iter()
            .map(|s| parse_rational(s).map_err(|e| CertificateParseError(e.to_string())))
            .collect::<Result<Vec<Rational>, _>>()
    };
    match file.outcome.as_str() {
        "optimal" => {
            ensure_absent(&file.z, "z", "optimal")?;
            ensure_absent(&file.r, "r", "optimal")?;
            Ok(Outcome::Optimal { x: decode("x", file.x)?, y: decode("y", file.y)? })
        }
        "primal_infeasible" => {
            ensure_absent(&file.x, "x", "primal_infeasible")?;
            ensure_absent(&file.r, "r", "primal_infeasible")?;
            Ok(Outcome::PrimalInfeasible { z: decode("z", file.z)?, y: decode("y", file.y)? })
        }
        "dual_infeasible" => {
            ensure_absent(&file.y, "y", "dual_infeasible")?;
            ensure_absent(&file.z, "z", "dual_infeasible")?;
            Ok(Outcome::DualInfeasible { x: decode("x", file.x)?, r: decode("r", file.r)? })
        }
        "both_infeasible" => {
            ensure_absent(&file.x, "x", "both_infeasible")?;
            ensure_absent(&file.y, "y", "both_infeasible")?;
            Ok(Outcome::BothInfeasible { z: decode("z", file.z)?, r: decode("r", file.r)? })
        }
        other => Err(CertificateParseError(format!("unknown outcome {:?}", other))),
    }
}

fn ensure_absent(
    value: &Option<Vec<String>>,
    field: &str,
    outcome: &str,
) -> Result<(), CertificateParseError> {
    if value.is_some() {
        Err(CertificateParseError(format!(
            "field {:?} does not belong to outcome {:?}",
            field, outcome
        )))
    } else {
        Ok(())
    }
}
