//! Finite presentations.
//!
//! Text grammar: `gens: a b c; rel: aBab, c^3, a b A B`. Generator names start
//! with a lowercase letter. In a relator, a name with its first letter
//! capitalised is the inverse; `x^k` is a power (negative allowed). Tokens may
//! be separated by spaces or `*`; otherwise names are matched greedily.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{eliminate, SparseMatrix};

/// A word as signed one-based generator indices: `k` is generator `k-1`, `-k` its inverse.
pub type Word = Vec<i32>;

pub fn inverse_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Validates generator references and freely reduces relators, dropping empty ones.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generators.len() as i32;
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            if r.iter().any(|&x| x == 0 || x.abs() > n) {
                return Err(Error::InvalidInput(format!("relator {r:?} names an unknown generator")));
            }
            let r = free_reduce(&r);
            if !r.is_empty() {
                rels.push(r);
            }
        }
        Ok(Presentation {
            generators,
            relators: rels,
        })
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut rel_text = "";
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(rest) = part.strip_prefix("gens:") {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for nm in &names {
                    if !nm.starts_with(|c: char| c.is_ascii_lowercase())
                        || !nm.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(Error::Parse(format!("bad generator name `{nm}`")));
                    }
                }
                gens = Some(names);
            } else if let Some(rest) = part.strip_prefix("rel:") {
                rel_text = rest;
            } else {
                return Err(Error::Parse(format!("unexpected section `{part}`")));
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse("missing `gens:`".into()))?;
        let mut relators = Vec::new();
        for r in rel_text.split(',') {
            let r = r.trim();
            if !r.is_empty() {
                relators.push(parse_word(r, &gens)?);
            }
        }
        Presentation::new(gens, relators)
    }

    pub fn format_word(&self, w: &[i32]) -> String {
        let single = self.generators.iter().all(|g| g.len() == 1);
        let parts: Vec<String> = w
            .iter()
            .map(|&x| {
                let name = &self.generators[(x.unsigned_abs() - 1) as usize];
                if x > 0 {
                    name.clone()
                } else {
                    let mut c = name.chars();
                    let first = c.next().expect("names are nonempty").to_ascii_uppercase();
                    std::iter::once(first).chain(c).collect()
                }
            })
            .collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    /// Exponent-sum relation matrix reduced to invariant factors.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.generators.len();
        let columns: Vec<Vec<(u32, i64)>> = self
            .relators
            .iter()
            .map(|r| r.iter().map(|&x| (x.unsigned_abs() - 1, x.signum() as i64)).collect())
            .collect();
        let e = eliminate(&SparseMatrix::from_columns(n, columns), &[]);
        Abelianization {
            free_rank: n - e.rank,
            torsion: e.torsion,
        }
    }

    /// Presentation with extra relators appended.
    pub fn with_relators(&self, extra: &[Word]) -> Result<Self> {
        let mut rels = self.relators.clone();
        rels.extend_from_slice(extra);
        Presentation::new(self.generators.clone(), rels)
    }
}

fn parse_word(text: &str, gens: &[String]) -> Result<Word> {
    let mut word = Vec::new();
    let tokens: Vec<&str> = text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()).collect();
    for tok in tokens {
        let mut rest = tok;
        while !rest.is_empty() {
            // longest generator name (or its capitalised inverse) at the front
            let mut best: Option<(usize, i32)> = None;
            for (i, g) in gens.iter().enumerate() {
                let mut cap = g.clone();
                cap[..1].make_ascii_uppercase();
                for (cand, sign) in [(g.as_str(), 1), (cap.as_str(), -1)] {
                    if rest.starts_with(cand) && best.map_or(true, |(l, _)| cand.len() > l) {
                        best = Some((cand.len(), sign * (i as i32 + 1)));
                    }
                }
            }
            let (len, letter) = best.ok_or_else(|| Error::Parse(format!("cannot read `{rest}` in relator `{text}`")))?;
            rest = &rest[len..];
            let mut power = 1i32;
            if let Some(after) = rest.strip_prefix('^') {
                let end = after
                    .char_indices()
                    .find(|&(k, c)| !(c.is_ascii_digit() || (k == 0 && c == '-')))
                    .map_or(after.len(), |(k, _)| k);
                power = after[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
                rest = &after[end..];
            }
            let (l, p) = if power < 0 { (-letter, -power) } else { (letter, power) };
            for _ in 0..p {
                word.push(l);
            }
        }
    }
    Ok(word)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "gens: {}; rel: {}", self.generators.join(" "), rels.join(", "))
    }
}

/// A finitely generated abelian group `Z^free_rank + ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
