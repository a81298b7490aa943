//! JSON manifold-spec files.
//!
//! ```json
//! {
//!   "dim": 4,
//!   "params": ["l1", "l2", "l3", "l4"],
//!   "J": [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
//!   "g": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
//!   "brackets": [
//!     { "i": 1, "j": 4, "coefficients": ["l1", "l2", "l3", "l4"] }
//!   ]
//! }
//! ```
//!
//! Column `j` of `J` holds the components of `J X_j`. Frame indices are
//! 1-based. Matrix entries and coefficients are integers or polynomial
//! strings.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::FrameSpec;
use crate::scalars::{vars, Polynomial, Vars};
use crate::tensor::{Tensor, Variance};

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    coefficients: Vec<Entry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDocument {
    dim: usize,
    #[serde(default)]
    params: Vec<String>,
    #[serde(rename = "J")]
    j: Vec<Vec<Entry>>,
    g: Vec<Vec<Entry>>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
}

fn entry(e: &Entry, params: &Vars, at: &str) -> Result<Polynomial> {
    match e {
        Entry::Int(n) => Ok(Polynomial::from_int(*n)),
        Entry::Text(s) => Polynomial::parse(s, params).map_err(|err| Error::SpecFile(format!("{at}: {err}"))),
    }
}

fn matrix(rows: &[Vec<Entry>], dim: usize, params: &Vars, name: &str) -> Result<Vec<Vec<Polynomial>>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::SpecFile(format!("{name} must be a {dim}×{dim} matrix")));
    }
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, e)| entry(e, params, &format!("{name}[{}][{}]", r + 1, c + 1)))
                .collect()
        })
        .collect()
}

/// Reads a spec without running the algebraic validation.
pub fn parse_spec_unvalidated(text: &str) -> Result<FrameSpec> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| {
        Error::SpecFile(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    let dim = doc.dim;
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(Error::SpecFile("dimension must be even".into()));
    }
    for (k, p) in doc.params.iter().enumerate() {
        let valid = p.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && p.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid || doc.params[..k].contains(p) {
            return Err(Error::SpecFile(format!("invalid or duplicate parameter name `{p}`")));
        }
    }
    let params = vars(&doc.params);
    let j = Tensor::endomorphism_from_matrix(&matrix(&doc.j, dim, &params, "J")?)?;
    let g = Tensor::bilinear_from_matrix(&matrix(&doc.g, dim, &params, "g")?)?;

    let mut brackets = Tensor::zeros(dim, Variance::vector_valued(2));
    let mut seen = std::collections::BTreeSet::new();
    for (n, b) in doc.brackets.iter().enumerate() {
        let at = format!("brackets[{}]", n + 1);
        if b.i == 0 || b.j == 0 || b.i > dim || b.j > dim {
            return Err(Error::SpecFile(format!("{at}: frame index out of range 1..{dim}")));
        }
        if b.i == b.j {
            return Err(Error::SpecFile(format!("{at}: [X{0}, X{0}] is always zero", b.i)));
        }
        let (lo, hi, sign) = if b.i < b.j { (b.i, b.j, 1) } else { (b.j, b.i, -1) };
        if !seen.insert((lo, hi)) {
            return Err(Error::SpecFile(format!("{at}: duplicate entry for [X{lo}, X{hi}]")));
        }
        if b.coefficients.len() != dim {
            return Err(Error::SpecFile(format!("{at}: expected {dim} coefficients")));
        }
        for (k, e) in b.coefficients.iter().enumerate() {
            let c = entry(e, &params, &format!("{at}.coefficients[{}]", k + 1))?;
            let c = if sign < 0 { -c } else { c };
            brackets.set(&[hi - 1, lo - 1, k], -c.clone());
            brackets.set(&[lo - 1, hi - 1, k], c);
        }
    }
    FrameSpec::new(params, brackets, j, g)
}

/// Reads and validates a spec.
pub fn parse_spec(text: &str) -> Result<FrameSpec> {
    parse_spec_unvalidated(text)?.validated()
}

fn atom(p: &Polynomial) -> String {
    match p.constant_value() {
        Some(c) if c.is_integer() => c.to_string(),
        _ => serde_json::to_string(&p.to_string()).expect("string serializes"),
    }
}

fn matrix_text(out: &mut String, name: &str, m: impl Fn(usize, usize) -> Polynomial, dim: usize) {
    let _ = writeln!(out, "  \"{name}\": [");
    for r in 0..dim {
        let row: Vec<String> = (0..dim).map(|c| atom(&m(r, c))).collect();
        let sep = if r + 1 < dim { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", row.join(", "));
    }
    let _ = writeln!(out, "  ],");
}

/// Writes a spec in the file format. Only nonzero `i < j` brackets appear.
pub fn emit_spec(spec: &FrameSpec) -> String {
    let dim = spec.dim();
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"dim\": {dim},");
    let params: Vec<String> = spec
        .params()
        .iter()
        .map(|p| serde_json::to_string(p).expect("string serializes"))
        .collect();
    let _ = writeln!(out, "  \"params\": [{}],", params.join(", "));
    matrix_text(&mut out, "J", |r, c| spec.j().get(&[c, r]).clone(), dim);
    matrix_text(&mut out, "g", |r, c| spec.g().get(&[r, c]).clone(), dim);
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let coeffs = spec.bracket(i, j);
            if coeffs.iter().all(Polynomial::is_zero) {
                continue;
            }
            let cs: Vec<String> = coeffs
                .iter()
                .map(|p| serde_json::to_string(&p.to_string()).expect("string serializes"))
                .collect();
            entries.push(format!(
                "    {{ \"i\": {}, \"j\": {}, \"coefficients\": [{}] }}",
                i + 1,
                j + 1,
                cs.join(", ")
            ));
        }
    }
    if entries.is_empty() {
        out.push_str("  \"brackets\": []\n");
    } else {
        let _ = writeln!(out, "  \"brackets\": [\n{}\n  ]", entries.join(",\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example::builtin_example;

    #[test]
    fn round_trip_builtin() {
        let spec = builtin_example();
        let text = emit_spec(&spec);
        assert_eq!(parse_spec(&text).unwrap(), spec);
    }

    #[test]
    fn odd_dimension() {
        let text = r#"{"dim": 3, "J": [[0,0,0],[0,0,0],[0,0,0]], "g": [[1,0,0],[0,1,0],[0,0,1]]}"#;
        let err = parse_spec(text).unwrap_err();
        assert!(err.to_string().contains("dimension must be even"), "{err}");
    }

    #[test]
    fn j_identity_fails_validation() {
        let text = r#"{"dim": 2, "J": [[1,0],[0,1]], "g": [[1,0],[0,-1]]}"#;
        let err = parse_spec(text).unwrap_err();
        assert!(err.to_string().contains("J²=−I fails"), "{err}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_spec("{\n  \"dim\": 2,\n  oops\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn reversed_bracket_is_negated() {
        let text = r#"{"dim": 2, "params": ["a"], "J": [[0,-1],[1,0]], "g": [[1,0],[0,-1]],
            "brackets": [{"i": 2, "j": 1, "coefficients": ["a", 0]}]}"#;
        let spec = parse_spec(text).unwrap();
        let a = Polynomial::parse("a", spec.params()).unwrap();
        assert_eq!(spec.bracket(0, 1), vec![-a, Polynomial::zero()]);
    }

    #[test]
    fn duplicate_and_diagonal_rejected() {
        let base = r#"{"dim": 2, "J": [[0,-1],[1,0]], "g": [[1,0],[0,-1]], "brackets": "#;
        let dup = format!(
            "{base}[{{\"i\":1,\"j\":2,\"coefficients\":[1,0]}},{{\"i\":2,\"j\":1,\"coefficients\":[1,0]}}]}}"
        );
        assert!(parse_spec(&dup).unwrap_err().to_string().contains("duplicate"));
        let diag = format!("{base}[{{\"i\":1,\"j\":1,\"coefficients\":[1,0]}}]}}");
        assert!(parse_spec(&diag).is_err());
    }
}
