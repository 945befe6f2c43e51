use super::perm::Perm;
use super::perm_group::{close_generators, PermGroup};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Names accepted by [`finite_group`].
pub const FINITE_GROUP_NAMES: &[&str] = &["1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "A4"];

/// Built-in finite permutation groups.
pub fn finite_group(name: &str) -> Result<PermGroup> {
    let (degree, gens): (usize, &[&str]) = match name {
        "1" | "trivial" => (1, &[]),
        "Z2" => (2, &["(1 2)"]),
        "Z3" => (3, &["(1 2 3)"]),
        "Z4" => (4, &["(1 2 3 4)"]),
        "Z2xZ2" => (4, &["(1 2)", "(3 4)"]),
        "S3" => (3, &["(1 2)", "(1 2 3)"]),
        "D4" => (4, &["(1 2 3 4)", "(1 3)"]),
        "A4" => (4, &["(1 2 3)", "(1 2)(3 4)"]),
        _ => return Err(Error::UnknownGroup(name.to_string())),
    };
    let gens = gens
        .iter()
        .map(|c| Perm::parse_cycles(c, degree))
        .collect::<Result<Vec<_>>>()?;
    close_generators(degree, &gens, &Limits::default())
}

/// Parses the generator text format: one `perm: (1 2)(3 4)` line per generator.
///
/// An optional `degree: n` line fixes the degree; otherwise it is the largest
/// point mentioned. Blank lines and `#` comments are ignored.
pub fn parse_group_text(text: &str, limits: &Limits) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut cycles: Vec<String> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `key: value`", lineno + 1)))?;
        match key.trim() {
            "perm" => cycles.push(value.trim().to_string()),
            "degree" => {
                degree = Some(value.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad degree `{}`", lineno + 1, value.trim()))
                })?)
            }
            other => {
                return Err(Error::Parse(format!("line {}: unknown key `{other}`", lineno + 1)))
            }
        }
    }
    let degree = degree.unwrap_or_else(|| cycles.iter().map(|c| Perm::max_point_in(c)).max().unwrap_or(1));
    let gens = cycles
        .iter()
        .map(|c| Perm::parse_cycles(c, degree))
        .collect::<Result<Vec<_>>>()?;
    close_generators(degree, &gens, limits)
}

/// Renders a group in the generator text format.
pub fn group_to_text(g: &PermGroup) -> String {
    let mut out = format!("degree: {}\n", g.degree());
    for p in g.generators() {
        out.push_str(&format!("perm: {p}\n"));
    }
    out
}
