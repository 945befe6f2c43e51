//! Small named complexes used by tests, examples and the verification suite.

use super::complex::{Simplex, SimplicialComplex};

pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_facets(1, &[]).unwrap()
}

pub fn interval() -> SimplicialComplex {
    SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap()
}

/// Boundary of a triangle.
pub fn circle() -> SimplicialComplex {
    SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
}

/// Boundary of a square `0-1-2-3`.
pub fn square_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
}

/// The full simplex on `k + 1` vertices.
pub fn simplex(k: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(k + 1, &[(0..=k).collect()]).unwrap()
}

/// Boundary of the tetrahedron.
pub fn sphere() -> SimplicialComplex {
    let facets: Vec<Simplex> = (0..4).map(|skip| (0..4).filter(|&v| v != skip).collect()).collect();
    SimplicialComplex::from_facets(4, &facets).unwrap()
}

/// The six-vertex projective plane.
pub fn rp2() -> SimplicialComplex {
    let facets = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    let facets: Vec<Simplex> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(6, &facets).unwrap()
}

/// Torus from an `n x n` grid with opposite sides identified (`n >= 3`).
pub fn torus(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "the grid torus needs at least 3 cells per side");
    let v = |i: usize, j: usize| (i % n) * n + (j % n);
    let mut facets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_facets(n * n, &facets).unwrap()
}

/// A 2-complex with fundamental group `Z/3`: a 9-gon wound three times around a
/// triangle, then coned off. Vertices: circle `0..3`, 9-gon `3..12`, cone point `12`.
pub fn z3_presentation_complex() -> SimplicialComplex {
    let c = |i: usize| i % 3;
    let b = |i: usize| 3 + i % 9;
    let o = 12;
    let mut facets = Vec::new();
    for i in 0..9 {
        facets.push(vec![b(i), b(i + 1), c(i + 1)]);
        facets.push(vec![b(i), c(i), c(i + 1)]);
        facets.push(vec![o, b(i), b(i + 1)]);
    }
    SimplicialComplex::from_facets(13, &facets).unwrap()
}

/// Named fixtures: `point`, `interval`, `circle`, `square`, `simplex2`, `sphere`, `rp2`, `torus`, `z3`.
pub fn fixture(name: &str) -> Option<SimplicialComplex> {
    Some(match name {
        "point" => point(),
        "interval" => interval(),
        "circle" => circle(),
        "square" => square_boundary(),
        "simplex2" => simplex(2),
        "sphere" => sphere(),
        "rp2" => rp2(),
        "torus" => torus(3),
        "z3" => z3_presentation_complex(),
        _ => return None,
    })
}

pub const FIXTURE_NAMES: [&str; 9] = [
    "point", "interval", "circle", "square", "simplex2", "sphere", "rp2", "torus", "z3",
];
