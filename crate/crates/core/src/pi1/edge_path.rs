use std::collections::VecDeque;

use super::presentation::{Presentation, Word};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Edge-path presentation together with the spanning tree behind it.
#[derive(Clone, Debug)]
pub struct EdgePath {
    pub presentation: Presentation,
    pub basepoint: usize,
    /// Generator (one-based, positive) of each edge oriented low to high, or 0 for tree edges.
    pub edge_letter: Vec<i32>,
    /// Tree parent of each vertex (the basepoint is its own parent).
    pub parent: Vec<usize>,
}

impl EdgePath {
    /// Word for the edge `u -> v` (either orientation); empty for tree edges.
    pub fn edge_word(&self, x: &SimplicialComplex, u: usize, v: usize) -> Word {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let e = x.index_of(&[a, b]).expect("an edge of the complex");
        match self.edge_letter[e] {
            0 => Vec::new(),
            g if u < v => vec![g],
            g => vec![-g],
        }
    }
}

/// Presentation of the edge-path group at `basepoint`. A breadth-first spanning
/// tree (neighbours in increasing order) is collapsed; every other edge `[u, v]`
/// (`u < v`) becomes a generator `e{k}`, `k` its index among the edges, and every
/// triangle `[a, b, c]` gives the relator `ab · bc · (ac)^-1`.
pub fn edge_path(x: &SimplicialComplex, basepoint: usize) -> Result<EdgePath> {
    if basepoint >= x.num_vertices() {
        return Err(Error::InvalidInput("basepoint out of range".into()));
    }
    let adj = x.adjacency();
    let mut parent = vec![usize::MAX; x.num_vertices()];
    parent[basepoint] = basepoint;
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent.contains(&usize::MAX) {
        return Err(Error::DisconnectedComplex);
    }
    let mut generators = Vec::new();
    let mut edge_letter = vec![0i32; x.count(1)];
    for (k, e) in x.simplices(1).iter().enumerate() {
        let tree = parent[e[1]] == e[0] || parent[e[0]] == e[1];
        if !tree {
            generators.push(format!("e{k}"));
            edge_letter[k] = generators.len() as i32;
        }
    }
    let letter = |a: usize, b: usize| edge_letter[x.index_of(&[a, b]).expect("edge of a triangle")];
    let mut relators = Vec::new();
    for t in x.simplices(2) {
        let mut w = Vec::new();
        for (g, sign) in [(letter(t[0], t[1]), 1), (letter(t[1], t[2]), 1), (letter(t[0], t[2]), -1)] {
            if g != 0 {
                w.push(sign * g);
            }
        }
        relators.push(w);
    }
    Ok(EdgePath {
        presentation: Presentation::new(generators, relators)?,
        basepoint,
        edge_letter,
        parent,
    })
}

/// Edge-path presentation of `π₁(x, basepoint)`.
pub fn edge_path_presentation(x: &SimplicialComplex, basepoint: usize) -> Result<Presentation> {
    edge_path(x, basepoint).map(|e| e.presentation)
}
