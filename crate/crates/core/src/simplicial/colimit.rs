//! Product, wedge, pushout and telescope of simplicial complexes.

use std::collections::BTreeSet;

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Monotone lattice paths from `(0,0)` to `(p,q)`, as step sequences (`false` = advance first coordinate).
fn staircase_paths(p: usize, q: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(p + q);
    fn go(p: usize, q: usize, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if p == 0 && q == 0 {
            out.push(path.clone());
            return;
        }
        if p > 0 {
            path.push(false);
            go(p - 1, q, path, out);
            path.pop();
        }
        if q > 0 {
            path.push(true);
            go(p, q - 1, path, out);
            path.pop();
        }
    }
    go(p, q, &mut path, &mut out);
    out
}

/// Product triangulated by staircases. Vertex `(x, y)` gets index `x * |Y| + y`;
/// a simplex is a monotone path through a product of simplices in vertex order.
pub fn product(x: &SimplicialComplex, y: &SimplicialComplex) -> SimplicialComplex {
    let m = y.num_vertices();
    let mut facets = Vec::new();
    for a in x.facets() {
        for b in y.facets() {
            for path in staircase_paths(a.len() - 1, b.len() - 1) {
                let (mut i, mut j) = (0, 0);
                let mut s = vec![a[0] * m + b[0]];
                for step in path {
                    if step {
                        j += 1;
                    } else {
                        i += 1;
                    }
                    s.push(a[i] * m + b[j]);
                }
                facets.push(s);
            }
        }
    }
    let mut labels = Vec::with_capacity(x.num_vertices() * m);
    for lx in x.labels() {
        for ly in y.labels() {
            labels.push(format!("({lx},{ly})"));
        }
    }
    SimplicialComplex::with_labels(labels, &facets).expect("staircase simplices are valid")
}

/// One-point union identifying vertex `bx` of `x` with vertex `by` of `y`.
pub fn wedge(x: &SimplicialComplex, bx: usize, y: &SimplicialComplex, by: usize) -> Result<SimplicialComplex> {
    if bx >= x.num_vertices() || by >= y.num_vertices() {
        return Err(Error::InvalidInput("wedge basepoint out of range".into()));
    }
    let n = x.num_vertices();
    let ymap: Vec<usize> = (0..y.num_vertices())
        .map(|v| match v.cmp(&by) {
            std::cmp::Ordering::Less => n + v,
            std::cmp::Ordering::Equal => bx,
            std::cmp::Ordering::Greater => n + v - 1,
        })
        .collect();
    let mut labels: Vec<String> = x.labels().iter().map(|l| format!("x{l}")).collect();
    labels.extend(
        y.labels()
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != by)
            .map(|(_, l)| format!("y{l}")),
    );
    let mut facets = x.facets();
    for f in y.facets() {
        facets.push(f.iter().map(|&v| ymap[v]).collect());
    }
    SimplicialComplex::with_labels(labels, &facets)
}

/// A vertex map between complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub vertex_map: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(vertex_map: Vec<usize>) -> Self {
        SimplicialMap { vertex_map }
    }

    pub fn identity(n: usize) -> Self {
        SimplicialMap {
            vertex_map: (0..n).collect(),
        }
    }

    /// Errors unless every simplex of `source` maps onto a simplex of `target`.
    pub fn check(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<()> {
        if self.vertex_map.len() != source.num_vertices() {
            return Err(Error::NonSimplicialMap("vertex map has the wrong length".into()));
        }
        if self.vertex_map.iter().any(|&v| v >= target.num_vertices()) {
            return Err(Error::NonSimplicialMap("vertex image out of range".into()));
        }
        for s in source.facets() {
            let img: BTreeSet<usize> = s.iter().map(|&v| self.vertex_map[v]).collect();
            let img: Simplex = img.into_iter().collect();
            if !target.contains(&img) {
                return Err(Error::NonSimplicialMap(format!("{s:?} maps to a non-simplex")));
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<usize> = self.vertex_map.iter().copied().collect();
        set.len() == self.vertex_map.len()
    }

    fn check_injective(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<()> {
        self.check(source, target)?;
        if !self.is_injective() {
            return Err(Error::NonInjectiveMap(format!("{:?} identifies vertices", self.vertex_map)));
        }
        Ok(())
    }
}

/// Adds the simplices of the cylinder of `a` with ends sent through `bottom` and `top`.
/// Vertices of `a` are ordered by index; the prism over `[a0..ap]` contributes
/// `{bottom(a0..ai), top(ai..ap)}` for each `i`.
fn cylinder_facets(a: &SimplicialComplex, bottom: &[usize], top: &[usize], out: &mut Vec<Simplex>) {
    for f in a.facets() {
        for i in 0..f.len() {
            let mut s: Simplex = f[..=i].iter().map(|&v| bottom[v]).collect();
            s.extend(f[i..].iter().map(|&v| top[v]));
            out.push(s);
        }
    }
}

/// Homotopy pushout of `x <- a -> y` as a double mapping cylinder.
/// Both legs must be injective simplicial maps.
pub fn pushout(
    a: &SimplicialComplex,
    x: &SimplicialComplex,
    f: &SimplicialMap,
    y: &SimplicialComplex,
    g: &SimplicialMap,
) -> Result<SimplicialComplex> {
    f.check_injective(a, x)?;
    g.check_injective(a, y)?;
    let n = x.num_vertices();
    let top: Vec<usize> = g.vertex_map.iter().map(|&v| n + v).collect();
    let mut facets = x.facets();
    facets.extend(y.facets().into_iter().map(|s| s.iter().map(|&v| n + v).collect::<Simplex>()));
    cylinder_facets(a, &f.vertex_map, &top, &mut facets);
    let mut labels: Vec<String> = x.labels().iter().map(|l| format!("x{l}")).collect();
    labels.extend(y.labels().iter().map(|l| format!("y{l}")));
    SimplicialComplex::with_labels(labels, &facets)
}

/// Mapping telescope of `stages[0] -> stages[1] -> ...` along injective `maps`.
pub fn telescope(stages: &[SimplicialComplex], maps: &[SimplicialMap]) -> Result<SimplicialComplex> {
    if stages.is_empty() || maps.len() + 1 != stages.len() {
        return Err(Error::InvalidInput("telescope needs k stages and k-1 maps".into()));
    }
    let mut offsets = vec![0];
    for s in stages {
        offsets.push(offsets.last().unwrap() + s.num_vertices());
    }
    let mut facets = Vec::new();
    let mut labels = Vec::new();
    for (i, s) in stages.iter().enumerate() {
        facets.extend(s.facets().into_iter().map(|f| f.iter().map(|&v| offsets[i] + v).collect::<Simplex>()));
        labels.extend(s.labels().iter().map(|l| format!("{i}:{l}")));
    }
    for (i, m) in maps.iter().enumerate() {
        m.check_injective(&stages[i], &stages[i + 1])?;
        let bottom: Vec<usize> = (0..stages[i].num_vertices()).map(|v| offsets[i] + v).collect();
        let top: Vec<usize> = m.vertex_map.iter().map(|&v| offsets[i + 1] + v).collect();
        cylinder_facets(&stages[i], &bottom, &top, &mut facets);
    }
    SimplicialComplex::with_labels(labels, &facets)
}
