//! Truncated nerves of finite categories.
//!
//! A nondegenerate `n`-cell (`n >= 1`) is a chain `x0 -f1-> x1 -> ... -fn-> xn` of
//! non-identity morphisms; 0-cells are objects. Cells of each degree are kept
//! in lexicographic order of their morphism lists, so faces are found by
//! binary search. The face `d_i` (`0 < i < n`) composes `f_i` and `f_{i+1}`; when
//! the composite is an identity the face is the degenerate simplex `s_{i-1}(y)`.

use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::homology::{homology, ChainComplex, Coefficients, HomologyResult, SparseMatrix};
use crate::limits::Limits;

const DEGENERATE: u32 = 1 << 31;

/// A face of an `n`-cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Face {
    /// An `(n-1)`-cell.
    Cell(usize),
    /// `s_j` applied to an `(n-2)`-cell.
    Degenerate { cell: usize, j: usize },
}

#[derive(Clone, Debug)]
pub struct TruncatedSimplicialSet {
    max_dim: usize,
    num_objects: usize,
    /// `chains[n]` holds the `n`-cells for `n >= 1`, flattened with stride `n`.
    chains: Vec<Vec<u32>>,
    /// `faces[n]` holds `n + 1` encoded faces per `n`-cell, `n >= 1`.
    faces: Vec<Vec<u32>>,
    is_identity: Vec<bool>,
}

impl TruncatedSimplicialSet {
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn count(&self, n: usize) -> usize {
        match n {
            0 => self.num_objects,
            _ if n > self.max_dim => 0,
            _ => self.chains[n].len() / n,
        }
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.max_dim).map(|n| self.count(n)).collect()
    }

    /// Morphisms of the `i`-th `n`-cell; empty for `n = 0`.
    pub fn chain(&self, n: usize, i: usize) -> &[u32] {
        if n == 0 {
            &[]
        } else {
            &self.chains[n][i * n..(i + 1) * n]
        }
    }

    /// The faces `d_0 .. d_n` of the `i`-th `n`-cell (`n >= 1`).
    pub fn faces(&self, n: usize, i: usize) -> Vec<Face> {
        self.faces[n][i * (n + 1)..(i + 1) * (n + 1)]
            .iter()
            .enumerate()
            .map(|(k, &code)| {
                if code & DEGENERATE != 0 {
                    Face::Degenerate {
                        cell: (code & !DEGENERATE) as usize,
                        j: k - 1,
                    }
                } else {
                    Face::Cell(code as usize)
                }
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn find(&self, chain: &[u32]) -> Option<usize> {
        find_chain(&self.chains[chain.len()], chain)
    }

    /// Normalized chain complex in degrees `0..=max_dim`, reporting through `max_dim - 1`.
    pub fn chain_complex(&self) -> ChainComplex {
        let ranks = self.counts();
        let mut boundaries = Vec::with_capacity(self.max_dim);
        for n in 1..=self.max_dim {
            let stride = n + 1;
            let cols = self.faces[n]
                .chunks(stride)
                .map(|fs| {
                    fs.iter()
                        .enumerate()
                        .filter(|(_, &c)| c & DEGENERATE == 0)
                        .map(|(i, &c)| (c, if i % 2 == 0 { 1 } else { -1 }))
                        .collect()
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(ranks[n - 1], cols));
        }
        let top = self.max_dim.saturating_sub(1);
        ChainComplex::new(ranks, boundaries, top).expect("shapes are consistent")
    }

    /// Exhaustive check of `d_i d_j = d_{j-1} d_i` for `i < j` on every cell, computed
    /// on raw chains (identities allowed) rebuilt from the stored faces.
    pub fn check_simplicial_identities(&self, c: &FiniteCategory) -> Result<()> {
        for n in 2..=self.max_dim {
            for x in 0..self.count(n) {
                let raw = RawSimplex {
                    start: c.source(self.chain(n, x)[0] as usize) as u32,
                    chain: self.chain(n, x).to_vec(),
                };
                let stored = self.faces(n, x);
                for j in 1..=n {
                    for i in 0..j {
                        let dj = self.rebuild(c, n - 1, stored[j]);
                        let di = self.rebuild(c, n - 1, stored[i]);
                        let direct_j = raw.face(c, j);
                        if dj != direct_j || di != raw.face(c, i) {
                            return Err(Error::InvalidCategory(format!(
                                "stored face disagrees with composition on {n}-cell {x}"
                            )));
                        }
                        if dj.face(c, i).normalize(self) != di.face(c, j - 1).normalize(self) {
                            return Err(Error::InvalidCategory(format!(
                                "simplicial identity fails for i={i}, j={j} on {n}-cell {x}"
                            )));
                        }
                    }
                }
            }
        }
        for x in 0..self.count(1) {
            let f = self.chain(1, x)[0] as usize;
            if self.faces(1, x) != [Face::Cell(c.target(f)), Face::Cell(c.source(f))] {
                return Err(Error::InvalidCategory(format!("endpoints of 1-cell {x} are wrong")));
            }
        }
        Ok(())
    }

    fn rebuild(&self, c: &FiniteCategory, dim: usize, face: Face) -> RawSimplex {
        match face {
            Face::Cell(i) if dim == 0 => RawSimplex {
                start: i as u32,
                chain: Vec::new(),
            },
            Face::Cell(i) => RawSimplex {
                start: c.source(self.chain(dim, i)[0] as usize) as u32,
                chain: self.chain(dim, i).to_vec(),
            },
            Face::Degenerate { cell, j } => {
                let mut base = self.rebuild(c, dim - 1, Face::Cell(cell));
                let vertex = base.vertex(c, j);
                base.chain.insert(j, c.identity(vertex as usize) as u32);
                base
            }
        }
    }
}

fn find_chain(flat: &[u32], chain: &[u32]) -> Option<usize> {
    let n = chain.len();
    let count = flat.len() / n;
    let (mut lo, mut hi) = (0, count);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match flat[mid * n..(mid + 1) * n].cmp(chain) {
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid,
            std::cmp::Ordering::Equal => return Some(mid),
        }
    }
    None
}

/// Any simplex of the nerve: a start object and a chain possibly containing identities.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RawSimplex {
    start: u32,
    chain: Vec<u32>,
}

impl RawSimplex {
    fn vertex(&self, c: &FiniteCategory, k: usize) -> u32 {
        if k == 0 {
            self.start
        } else {
            c.target(self.chain[k - 1] as usize) as u32
        }
    }

    fn face(&self, c: &FiniteCategory, i: usize) -> RawSimplex {
        let n = self.chain.len();
        let mut chain = self.chain.clone();
        if i == 0 {
            let start = self.vertex(c, 1);
            chain.remove(0);
            RawSimplex { start, chain }
        } else if i == n {
            chain.pop();
            RawSimplex {
                start: self.start,
                chain,
            }
        } else {
            let g = c.then(chain[i - 1] as usize, chain[i] as usize).expect("composable") as u32;
            chain.splice(i - 1..=i, [g]);
            RawSimplex {
                start: self.start,
                chain,
            }
        }
    }

    /// Nondegenerate part (by cell index) and positions of identities.
    fn normalize(&self, nerve: &TruncatedSimplicialSet) -> (u32, Option<usize>, Vec<usize>) {
        let ids: Vec<usize> = (0..self.chain.len())
            .filter(|&k| nerve.is_identity[self.chain[k] as usize])
            .collect();
        let core: Vec<u32> = self
            .chain
            .iter()
            .copied()
            .filter(|&m| !nerve.is_identity[m as usize])
            .collect();
        let idx = if core.is_empty() { None } else { nerve.find(&core) };
        (self.start, idx, ids)
    }
}

/// Nerve truncated at dimension `d`.
pub fn nerve_truncated(c: &FiniteCategory, d: usize, limits: &Limits) -> Result<TruncatedSimplicialSet> {
    let non_identity: Vec<Vec<u32>> = (0..c.num_objects())
        .map(|o| {
            let mut v: Vec<u32> = c.out_of(o).iter().filter(|&&f| !c.is_identity(f)).map(|&f| f as u32).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut total = c.num_objects();
    let mut chains: Vec<Vec<u32>> = vec![Vec::new()];
    if d >= 1 {
        let mut level: Vec<u32> = (0..c.num_morphisms() as u32).filter(|&f| !c.is_identity(f as usize)).collect();
        level.sort_unstable();
        chains.push(level);
        total += chains[1].len();
    }
    for n in 2..=d {
        let prev = &chains[n - 1];
        let mut next = Vec::new();
        for cell in prev.chunks(n - 1) {
            let last = *cell.last().unwrap() as usize;
            for &g in &non_identity[c.target(last)] {
                next.extend_from_slice(cell);
                next.push(g);
            }
            if total + next.len() / n > limits.max_cells {
                return Err(Error::SizeBoundExceeded {
                    what: "nerve cells",
                    bound: limits.max_cells,
                });
            }
        }
        total += next.len() / n;
        chains.push(next);
    }
    if total > limits.max_cells {
        return Err(Error::SizeBoundExceeded {
            what: "nerve cells",
            bound: limits.max_cells,
        });
    }
    let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::with_capacity(chains[n].len() / n * (n + 1));
        let mut buf: Vec<u32> = Vec::with_capacity(n);
        for cell in chains[n].chunks(n) {
            for i in 0..=n {
                let code = if n == 1 {
                    let f = cell[0] as usize;
                    (if i == 0 { c.target(f) } else { c.source(f) }) as u32
                } else if i == 0 {
                    find_chain(&chains[n - 1], &cell[1..]).expect("face chain") as u32
                } else if i == n {
                    find_chain(&chains[n - 1], &cell[..n - 1]).expect("face chain") as u32
                } else {
                    let g = c.then(cell[i - 1] as usize, cell[i] as usize).expect("composable");
                    buf.clear();
                    buf.extend_from_slice(&cell[..i - 1]);
                    if c.is_identity(g) {
                        buf.extend_from_slice(&cell[i + 1..]);
                        let idx = if n == 2 {
                            c.source(cell[0] as usize)
                        } else {
                            find_chain(&chains[n - 2], &buf).expect("face chain")
                        };
                        idx as u32 | DEGENERATE
                    } else {
                        buf.push(g as u32);
                        buf.extend_from_slice(&cell[i + 1..]);
                        find_chain(&chains[n - 1], &buf).expect("face chain") as u32
                    }
                };
                fs.push(code);
            }
        }
        faces.push(fs);
    }
    Ok(TruncatedSimplicialSet {
        max_dim: d,
        num_objects: c.num_objects(),
        chains,
        faces,
        is_identity: (0..c.num_morphisms()).map(|f| c.is_identity(f)).collect(),
    })
}

/// Homology of the nerve truncated at `d`, in degrees `0..d`.
pub fn homology_of_nerve(c: &FiniteCategory, d: usize, coefficients: Coefficients, limits: &Limits) -> Result<HomologyResult> {
    let nerve = nerve_truncated(c, d, limits)?;
    homology(&nerve.chain_complex(), coefficients)
}
