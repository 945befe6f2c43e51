//! Exchange formats for complexes.
//!
//! Text: one simplex per line as `s v0 v1 ... vk` with integer vertices; blank
//! lines and lines starting with `#` are skipped. JSON:
//! `{"labels": ["a", ...], "simplices": [[0, 1], ...]}`.

use serde::{Deserialize, Serialize};

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Simplex> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        if parts.next() != Some("s") {
            return Err(Error::Parse(format!("line {}: expected `s v0 v1 ...`", lineno + 1)));
        }
        let s = parts
            .map(|p| p.parse::<usize>())
            .collect::<std::result::Result<Simplex, _>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if s.is_empty() {
            return Err(Error::Parse(format!("line {}: empty simplex", lineno + 1)));
        }
        facets.push(s);
    }
    let n = facets.iter().flatten().max().map(|m| m + 1).ok_or_else(|| Error::Parse("no simplices".into()))?;
    SimplicialComplex::from_facets(n, &facets)
}

/// Writes the facets, one per line.
pub fn complex_to_text(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in x.facets() {
        out.push('s');
        for v in f {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    labels: Vec<String>,
    simplices: Vec<Simplex>,
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let c: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    SimplicialComplex::with_labels(c.labels, &c.simplices)
}

pub fn complex_to_json(x: &SimplicialComplex) -> serde_json::Value {
    serde_json::to_value(ComplexJson {
        labels: x.labels().to_vec(),
        simplices: x.facets(),
    })
    .expect("plain data serializes")
}

/// Accepts either format, choosing JSON when the text starts with `{`.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_complex_json(text)
    } else {
        parse_complex_text(text)
    }
}
