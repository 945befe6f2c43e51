use std::collections::BTreeSet;

use super::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Checks that `action` is a list of vertex permutations mapping simplices to simplices.
pub fn check_vertex_action(x: &SimplicialComplex, action: &[Vec<usize>]) -> Result<()> {
    let n = x.num_vertices();
    for g in action {
        if g.len() != n {
            return Err(Error::InvalidInput("vertex permutation has the wrong length".into()));
        }
        let mut seen = vec![false; n];
        for &v in g {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput("vertex map is not a permutation".into()));
            }
        }
        for s in x.all_simplices() {
            let img = SimplicialComplex::map_simplex(s, g).expect("permutations are injective");
            if !x.contains(&img) {
                return Err(Error::NonSimplicialMap(format!("{s:?} is sent to a non-simplex")));
            }
        }
    }
    Ok(())
}

/// Orbit id of every vertex under the group generated by `action`.
pub fn vertex_orbits(n: usize, action: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for g in action {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g[v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut ids = vec![usize::MAX; n];
    let mut out = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if ids[r] == usize::MAX {
            ids[r] = next;
            next += 1;
        }
        out[v] = ids[r];
    }
    out
}

/// Quotient of `x` by a group acting through vertex permutations.
///
/// `action` lists every group element (not just generators), since regularity
/// is a condition on each element. A simplex with two vertices in one orbit, or
/// one fixed setwise but not pointwise, makes the action non-regular.
pub fn quotient_complex(x: &SimplicialComplex, action: &[Vec<usize>]) -> Result<(SimplicialComplex, Vec<usize>)> {
    check_vertex_action(x, action)?;
    for g in action {
        for s in x.all_simplices() {
            let img = SimplicialComplex::map_simplex(s, g).expect("injective");
            if img == *s && s.iter().any(|&v| g[v] != v) {
                return Err(Error::NonRegularAction(format!(
                    "simplex {s:?} is fixed setwise but not pointwise"
                )));
            }
        }
    }
    let orbit = vertex_orbits(x.num_vertices(), action);
    let count = orbit.iter().max().map_or(0, |m| m + 1);
    let mut facets: BTreeSet<Simplex> = BTreeSet::new();
    for f in x.facets() {
        let img = SimplicialComplex::map_simplex(&f, &orbit).ok_or_else(|| {
            Error::NonRegularAction(format!("simplex {f:?} has two vertices in one orbit"))
        })?;
        facets.insert(img);
    }
    let mut labels = vec![String::new(); count];
    for v in (0..x.num_vertices()).rev() {
        labels[orbit[v]] = x.labels()[v].clone();
    }
    let facets: Vec<Simplex> = facets.into_iter().collect();
    Ok((SimplicialComplex::with_labels(labels, &facets)?, orbit))
}

/// Induced action on the barycentric subdivision: vertex `i` of the subdivision is
/// the `i`-th simplex of `x` in global order.
pub fn subdivide_action(x: &SimplicialComplex, g: &[usize]) -> Vec<usize> {
    x.all_simplices()
        .map(|s| {
            let img = SimplicialComplex::map_simplex(s, g).expect("permutation");
            x.global_index(&img).expect("action preserves simplices")
        })
        .collect()
}
