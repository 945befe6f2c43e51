use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::homology::{homology, ChainComplex, Coefficients, HomologyResult, SparseMatrix};

/// A simplex as its strictly increasing vertex list.
pub type Simplex = Vec<usize>;

/// A finite abstract simplicial complex on vertices `0..n`.
///
/// Simplices are kept per dimension in lexicographic order. Across dimensions
/// the global order is by dimension first, which is the order used for the
/// vertices of the barycentric subdivision and the objects of the simplex category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    by_dim: Vec<Vec<Simplex>>,
    lookup: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on `n` vertices labelled `0..n`.
    pub fn from_facets(n: usize, facets: &[Simplex]) -> Result<Self> {
        Self::with_labels((0..n).map(|i| i.to_string()).collect(), facets)
    }

    /// Downward closure of `facets`; every labelled vertex is a 0-simplex.
    pub fn with_labels(labels: Vec<String>, facets: &[Simplex]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("a complex needs at least one vertex".into()));
        }
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new()];
        for v in 0..n {
            sets[0].insert(vec![v]);
        }
        for f in facets {
            let mut s = f.clone();
            s.sort_unstable();
            if s.is_empty() {
                continue;
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("simplex {f:?} repeats a vertex")));
            }
            if s.iter().any(|&v| v >= n) {
                return Err(Error::InvalidInput(format!("simplex {f:?} uses an unknown vertex")));
            }
            let k = s.len();
            if sets.len() < k {
                sets.resize_with(k, BTreeSet::new);
            }
            if !sets[k - 1].insert(s.clone()) {
                continue;
            }
            // all nonempty subsets
            for mask in 1u64..(1u64 << k) - 1 {
                let sub: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                sets[sub.len() - 1].insert(sub);
            }
        }
        let by_dim: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut lookup = HashMap::new();
        for level in &by_dim {
            for (i, s) in level.iter().enumerate() {
                lookup.insert(s.clone(), i);
            }
        }
        Ok(SimplicialComplex {
            labels,
            by_dim,
            lookup,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// Simplices of dimension `d` (empty beyond the top dimension).
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn total_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Index of `s` within its dimension.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.lookup.contains_key(s)
    }

    /// Offset of dimension `d` in the global simplex order.
    pub fn offset(&self, d: usize) -> usize {
        self.by_dim[..d.min(self.by_dim.len())].iter().map(Vec::len).sum()
    }

    /// Position of `s` in the global (dimension, lexicographic) order.
    pub fn global_index(&self, s: &[usize]) -> Option<usize> {
        self.index_of(s).map(|i| self.offset(s.len() - 1) + i)
    }

    /// All simplices in the global order.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        let mut faces_of_higher: BTreeSet<Simplex> = BTreeSet::new();
        for d in (0..self.by_dim.len()).rev() {
            for s in &self.by_dim[d] {
                if !faces_of_higher.contains(s) {
                    out.push(s.clone());
                }
                if d > 0 {
                    for i in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(i);
                        faces_of_higher.insert(f);
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Simplicial chain complex, reporting homology in degrees `0..=dim`.
    pub fn chain_complex(&self) -> ChainComplex {
        let ranks: Vec<usize> = self.by_dim.iter().map(Vec::len).collect();
        let mut boundaries = Vec::new();
        for d in 1..self.by_dim.len() {
            let cols = self.by_dim[d]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            let row = self.lookup[&f] as u32;
                            (row, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(ranks[d - 1], cols));
        }
        let top = ranks.len() - 1;
        ChainComplex::new(ranks, boundaries, top).expect("shapes are consistent by construction")
    }

    pub fn homology(&self, coefficients: Coefficients) -> Result<HomologyResult> {
        homology(&self.chain_complex(), coefficients)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.num_vertices()];
        let mut out = Vec::new();
        for start in 0..self.num_vertices() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Sorted neighbour lists in the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for e in self.simplices(1) {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Barycentric subdivision. Vertex `i` of the result is the `i`-th simplex of
    /// `self` in the global order; simplices are chains under inclusion.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let mut facets: Vec<Simplex> = Vec::new();
        for f in self.facets() {
            let k = f.len();
            let mut perm: Vec<usize> = (0..k).collect();
            loop {
                let mut chain = Vec::with_capacity(k);
                let mut acc: Vec<usize> = Vec::with_capacity(k);
                for &p in &perm {
                    acc.push(f[p]);
                    let mut s = acc.clone();
                    s.sort_unstable();
                    chain.push(self.global_index(&s).expect("face of a simplex"));
                }
                chain.sort_unstable();
                facets.push(chain);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        let labels = self
            .all_simplices()
            .map(|s| {
                let names: Vec<&str> = s.iter().map(|&v| self.labels[v].as_str()).collect();
                format!("[{}]", names.join(" "))
            })
            .collect();
        SimplicialComplex::with_labels(labels, &facets).expect("chains form a simplicial complex")
    }

    /// Image of a simplex under a vertex map, sorted; `None` if vertices collide.
    pub fn map_simplex(s: &[usize], vertex_map: &[usize]) -> Option<Simplex> {
        let mut img: Simplex = s.iter().map(|&v| vertex_map[v]).collect();
        img.sort_unstable();
        if img.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(img)
        }
    }

    /// Replaces vertex labels.
    pub fn relabel(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.labels.len() {
            return Err(Error::InvalidInput("label count differs from vertex count".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

/// Lexicographic successor; `false` once the last permutation is reached.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
