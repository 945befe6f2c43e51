use std::collections::HashMap;

use super::spec::{mat_vec, EuclideanGroupSpec, IntMat, Lattice};
use crate::error::{Error, Result};
use crate::simplicial::{quotient_complex, subdivide_action, Simplex, SimplicialComplex};

/// Number of barycentric subdivisions applied before taking the quotient.
pub const SUBDIVISIONS: usize = 2;

/// Smallest grid size at which the torus triangulations are simplicial complexes.
pub const MIN_REFINEMENT: usize = 3;

/// Quotient complex modelling the orbit space of the group acting on `R^d`.
#[derive(Clone, Debug)]
pub struct OrbifoldModel {
    pub group: String,
    /// Grid size actually used, after lifting and any retry.
    pub refinement: usize,
    pub subdivisions: usize,
    /// Vertex count of the torus triangulation before subdivision.
    pub torus_vertices: usize,
    pub torus_euler_characteristic: i64,
    pub complex: SimplicialComplex,
}

/// A triangulated torus `R^d / L` with vertices at grid points `v / m`.
#[derive(Clone, Debug)]
pub struct TorusTriangulation {
    /// Grid modulus: vertex coordinates are integers mod `modulus`.
    pub modulus: i64,
    pub coords: Vec<Vec<i64>>,
    pub complex: SimplicialComplex,
    pub scheme: &'static str,
}

impl TorusTriangulation {
    fn build(modulus: i64, scheme: &'static str, cells: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut coords = Vec::new();
        let mut facets = Vec::new();
        for cell in cells {
            let mut s: Simplex = cell
                .into_iter()
                .map(|c| {
                    let c: Vec<i64> = c.iter().map(|x| x.rem_euclid(modulus)).collect();
                    *index.entry(c.clone()).or_insert_with(|| {
                        coords.push(c);
                        coords.len() - 1
                    })
                })
                .collect();
            s.sort_unstable();
            facets.push(s);
        }
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})/{modulus}", parts.join(","))
            })
            .collect();
        let complex = SimplicialComplex::with_labels(labels, &facets)?;
        Ok(TorusTriangulation {
            modulus,
            coords,
            complex,
            scheme,
        })
    }

    fn vertex(&self, c: &[i64]) -> Option<usize> {
        let c: Vec<i64> = c.iter().map(|x| x.rem_euclid(self.modulus)).collect();
        self.coords.iter().position(|x| *x == c)
    }

    /// Vertex permutation induced by a lattice automorphism, if it maps the
    /// triangulation to itself.
    pub fn induced_permutation(&self, a: &IntMat) -> Option<Vec<usize>> {
        let perm: Vec<usize> = self
            .coords
            .iter()
            .map(|c| self.vertex(&mat_vec(a, c)))
            .collect::<Option<_>>()?;
        let top = self.complex.dim();
        let preserved = self
            .complex
            .simplices(top)
            .iter()
            .all(|s| SimplicialComplex::map_simplex(s, &perm).is_some_and(|t| self.complex.contains(&t)));
        preserved.then_some(perm)
    }
}

/// Circle cut into `n` edges.
pub fn circle_triangulation(n: usize) -> Result<TorusTriangulation> {
    let n = n as i64;
    TorusTriangulation::build(n, "segments", (0..n).map(|a| vec![vec![a], vec![a + 1]]).collect())
}

/// Torus from an `n x n` grid, each parallelogram split along a diagonal.
/// With `short` the split runs from `e1` to `e2`, otherwise from `0` to `e1 + e2`.
pub fn split_torus(n: usize, short: bool) -> Result<TorusTriangulation> {
    let n = n as i64;
    let mut cells = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let (p00, p10, p01, p11) = (vec![a, b], vec![a + 1, b], vec![a, b + 1], vec![a + 1, b + 1]);
            if short {
                cells.push(vec![p00, p10.clone(), p01.clone()]);
                cells.push(vec![p10, p11, p01]);
            } else {
                cells.push(vec![p00.clone(), p10, p11.clone()]);
                cells.push(vec![p00, p11, p01]);
            }
        }
    }
    TorusTriangulation::build(n, if short { "short-diagonal" } else { "long-diagonal" }, cells)
}

/// Torus from an `n x n` grid with every square coned off from its centre.
/// Coordinates are doubled so the centres are integral.
pub fn crossed_torus(n: usize) -> Result<TorusTriangulation> {
    let n = n as i64;
    let mut cells = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let corners = [
                vec![2 * a, 2 * b],
                vec![2 * a + 2, 2 * b],
                vec![2 * a + 2, 2 * b + 2],
                vec![2 * a, 2 * b + 2],
            ];
            let centre = vec![2 * a + 1, 2 * b + 1];
            for i in 0..4 {
                cells.push(vec![corners[i].clone(), corners[(i + 1) % 4].clone(), centre.clone()]);
            }
        }
    }
    TorusTriangulation::build(2 * n, "crossed", cells)
}

/// First candidate triangulation of the torus at grid size `n` on which the
/// whole point group acts simplicially, with the induced vertex permutations.
pub fn invariant_torus(spec: &EuclideanGroupSpec, n: usize) -> Result<(TorusTriangulation, Vec<Vec<usize>>)> {
    let candidates: Vec<TorusTriangulation> = match spec.lattice {
        Lattice::Line => vec![circle_triangulation(n)?],
        Lattice::Hexagonal => vec![split_torus(n, true)?],
        Lattice::Square => vec![split_torus(n, false)?, crossed_torus(n)?],
    };
    for t in candidates {
        let perms: Option<Vec<Vec<usize>>> = spec.point_group.iter().map(|a| t.induced_permutation(a)).collect();
        if let Some(perms) = perms {
            return Ok((t, perms));
        }
    }
    Err(Error::NonRegularAction(format!(
        "no candidate triangulation is invariant under the point group of {}",
        spec.name
    )))
}

fn model_at(spec: &EuclideanGroupSpec, n: usize) -> Result<OrbifoldModel> {
    let (torus, mut action) = invariant_torus(spec, n)?;
    let mut x = torus.complex.clone();
    for _ in 0..SUBDIVISIONS {
        action = action.iter().map(|g| subdivide_action(&x, g)).collect();
        x = x.barycentric_subdivision();
    }
    let (complex, _) = quotient_complex(&x, &action)?;
    Ok(OrbifoldModel {
        group: spec.name.clone(),
        refinement: n,
        subdivisions: SUBDIVISIONS,
        torus_vertices: torus.complex.num_vertices(),
        torus_euler_characteristic: torus.complex.euler_characteristic(),
        complex,
    })
}

/// Model of the orbit space: a torus (or circle) triangulated at grid size `k`,
/// subdivided twice and divided by the point group. Translations are already
/// divided out by the torus and the kernel acts trivially.
///
/// Grid sizes below [`MIN_REFINEMENT`] are lifted to it. A non-regular action
/// is retried once at `k + 1`.
pub fn bbar_model(spec: &EuclideanGroupSpec, k: usize) -> Result<OrbifoldModel> {
    if k == 0 {
        return Err(Error::InvalidInput("refinement must be at least 1".into()));
    }
    if !spec.is_symmorphic() {
        return Err(Error::UnsupportedGroupClass(format!("{} is not symmorphic", spec.name)));
    }
    let n = k.max(MIN_REFINEMENT);
    match model_at(spec, n) {
        Err(Error::NonRegularAction(_)) => model_at(spec, n + 1),
        other => other,
    }
}
