use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::sparse::{eliminate, rank_mod_p, SparseMatrix};
use crate::error::{Error, Result};

/// Coefficient ring for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Integers,
    /// The prime field `F_p`; the modulus is not checked for primality.
    Prime(u64),
}

/// Boundary maps `d_n : C_n -> C_{n-1}` for `1 <= n <= top`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
    reported_top: usize,
}

impl ChainComplex {
    /// `ranks[n]` is the rank of `C_n`; `boundaries[n - 1]` is `d_n`.
    ///
    /// Homology is reported in degrees `0..=reported_top`, which must be below
    /// `ranks.len()`. Degrees that need a missing `d_{n+1}` treat it as zero.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>, reported_top: usize) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidInput("chain complex without groups".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::InvalidInput(format!(
                "{} chain groups need {} boundary maps, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let n = k + 1;
            if b.rows() != ranks[n - 1] || b.cols() != ranks[n] {
                return Err(Error::InvalidInput(format!(
                    "d{n} has shape {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    ranks[n - 1],
                    ranks[n]
                )));
            }
        }
        if reported_top >= ranks.len() {
            return Err(Error::InvalidInput("reported degree beyond the complex".into()));
        }
        Ok(ChainComplex {
            ranks,
            boundaries,
            reported_top,
        })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn reported_top(&self) -> usize {
        self.reported_top
    }

    /// `d_n`, or `None` outside `1..=top`.
    pub fn boundary(&self, n: usize) -> Option<&SparseMatrix> {
        if n == 0 {
            None
        } else {
            self.boundaries.get(n - 1)
        }
    }

    /// Checks `d_n ∘ d_{n+1} = 0` for every `n`.
    pub fn check_boundary_condition(&self) -> Result<()> {
        for n in 1..self.boundaries.len() {
            if !self.boundaries[n - 1].composes_to_zero(&self.boundaries[n]) {
                return Err(Error::BoundaryConditionViolated { degree: n });
            }
        }
        Ok(())
    }

    /// Alternating sum of the chain ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Betti numbers and torsion coefficients per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub betti: Vec<usize>,
    /// Torsion coefficients per degree, each list a divisibility chain of integers > 1.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyResult {
    pub fn top_degree(&self) -> usize {
        self.betti.len().saturating_sub(1)
    }

    /// Betti numbers of reduced homology (degree 0 lowered by one).
    pub fn reduced_betti(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        if let Some(b0) = b.first_mut() {
            *b0 = b0.saturating_sub(1);
        }
        b
    }

    /// Reduced homology vanishes in every reported degree.
    pub fn is_reduced_acyclic(&self) -> bool {
        self.betti.first() == Some(&1)
            && self.betti[1..].iter().all(|&b| b == 0)
            && self.torsion.iter().all(Vec::is_empty)
    }

    /// Same as [`is_reduced_acyclic`](Self::is_reduced_acyclic), restricted to degrees `0..=top`.
    pub fn is_reduced_acyclic_through(&self, top: usize) -> bool {
        self.betti.len() > top
            && self.betti[0] == 1
            && (1..=top).all(|n| self.betti[n] == 0)
            && (0..=top).all(|n| self.torsion[n].is_empty())
    }

    /// Truncates to degrees `0..=top`.
    pub fn truncated(&self, top: usize) -> HomologyResult {
        let n = (top + 1).min(self.betti.len());
        HomologyResult {
            betti: self.betti[..n].to_vec(),
            torsion: self.torsion[..n].to_vec(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "betti": self.betti,
            "torsion": self.torsion.iter().map(|t| t.iter().map(big_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn big_to_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .betti
            .iter()
            .zip(&self.torsion)
            .enumerate()
            .map(|(n, (&b, t))| {
                let mut terms = Vec::new();
                if b == 1 {
                    terms.push("Z".to_string());
                } else if b > 1 {
                    terms.push(format!("Z^{b}"));
                }
                terms.extend(t.iter().map(|q| format!("Z/{q}")));
                let g = if terms.is_empty() { "0".to_string() } else { terms.join("+") };
                format!("H{n}={g}")
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Homology of `c` with the given coefficients, in degrees `0..=c.reported_top()`.
pub fn homology(c: &ChainComplex, coefficients: Coefficients) -> Result<HomologyResult> {
    c.check_boundary_condition()?;
    let top = c.reported_top;
    // ranks[n] = rank of d_n; computed from the highest needed map down, clearing as we go
    let highest = (top + 1).min(c.boundaries.len());
    let mut rank = vec![0usize; highest + 2];
    let mut torsion_of = vec![Vec::new(); highest + 2];
    let mut cleared: Vec<bool> = Vec::new();
    for n in (1..=highest).rev() {
        let d = &c.boundaries[n - 1];
        let cleared_here: Vec<bool> = if cleared.len() == d.cols() {
            std::mem::take(&mut cleared)
        } else {
            Vec::new()
        };
        let pivot_rows = match coefficients {
            Coefficients::Integers => {
                let e = eliminate(d, &cleared_here);
                rank[n] = e.rank;
                torsion_of[n] = e.torsion;
                e.pivot_rows
            }
            Coefficients::Prime(p) => {
                let (r, rows) = rank_mod_p(d, p, &cleared_here);
                rank[n] = r;
                rows
            }
        };
        let mut next = vec![false; d.rows()];
        for r in pivot_rows {
            next[r] = true;
        }
        cleared = next;
    }
    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let into = if n == 0 { 0 } else { rank[n] };
        let out = rank.get(n + 1).copied().unwrap_or(0);
        betti.push(c.ranks[n] - into - out);
        torsion.push(std::mem::take(&mut torsion_of[n + 1]));
    }
    Ok(HomologyResult { betti, torsion })
}
