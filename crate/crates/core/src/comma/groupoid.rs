use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pi1::{edge_path, tietze_with_images, todd_coxeter, Word};
use crate::simplicial::SimplicialComplex;

/// A morphism `source -> target` of the localization, normal-formed as the
/// group element of the loop through the spanning tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupoidMorphism {
    pub source: usize,
    pub target: usize,
    pub element: usize,
}

/// The localization of the simplex category of a complex with finite `π₁`.
///
/// Objects are the simplices of the complex in global order. Every hom-set is
/// a copy of `π₁`: a morphism `τ -> σ` is the tree path from the basepoint to
/// `τ`, the morphism, and the tree path back from `σ`, read as a loop.
#[derive(Clone, Debug)]
pub struct FiniteFundamentalGroupoid {
    complex: SimplicialComplex,
    /// `table[a][b]` is the product `a b` (read left to right along paths).
    table: Vec<Vec<u32>>,
    inverses: Vec<usize>,
    /// Element of each edge `u < v` of the subdivision, oriented `u -> v`.
    edge_elements: HashMap<(usize, usize), usize>,
    /// Presentation of `π₁` used for the table, for reporting.
    pub presentation: String,
}

/// Builds the localization of `Γ X` from the edge-path group of the barycentric
/// subdivision, whose vertices are the objects of `Γ X`. Requires a complete
/// coset table of order at most `max_group_order`.
pub fn localize_simplex_category(
    x: &SimplicialComplex,
    max_group_order: usize,
    limits: &Limits,
) -> Result<FiniteFundamentalGroupoid> {
    if x.num_vertices() == 0 {
        return Err(Error::InvalidInput("empty complex".into()));
    }
    let sd = x.barycentric_subdivision();
    let ep = edge_path(&sd, 0)?;
    let simplified = tietze_with_images(&ep.presentation, limits.tietze_budget);
    let bound = limits.max_cosets;
    let table = todd_coxeter(&simplified.presentation, &[], bound);
    let order = table.index().ok_or_else(|| {
        Error::InfiniteOrUncertifiedPi1(format!(
            "coset enumeration of {} did not complete within {bound} cosets",
            simplified.presentation
        ))
    })?;
    if order > max_group_order {
        return Err(Error::InfiniteOrUncertifiedPi1(format!(
            "fundamental group has order {order}, above the bound {max_group_order}"
        )));
    }
    let mul = table.multiplication_table();
    let inverses = (0..order)
        .map(|a| (0..order).find(|&b| mul[a][b] == 0).expect("group"))
        .collect();
    let image = |w: &Word| -> Word {
        let mut out = Vec::new();
        for &l in w {
            let img = &simplified.images[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                out.extend(img);
            } else {
                out.extend(img.iter().rev().map(|y| -y));
            }
        }
        out
    };
    let mut edge_elements = HashMap::new();
    for e in sd.simplices(1) {
        let w = ep.edge_word(&sd, e[0], e[1]);
        edge_elements.insert((e[0], e[1]), table.trace(0, &image(&w)));
    }
    Ok(FiniteFundamentalGroupoid {
        complex: x.clone(),
        table: mul,
        inverses,
        edge_elements,
        presentation: simplified.presentation.to_string(),
    })
}

impl FiniteFundamentalGroupoid {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn num_objects(&self) -> usize {
        self.complex.total_count()
    }

    /// Order of `π₁`.
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    pub fn identity(&self, o: usize) -> GroupoidMorphism {
        GroupoidMorphism {
            source: o,
            target: o,
            element: 0,
        }
    }

    /// All morphisms `a -> b`, one per group element.
    pub fn hom(&self, a: usize, b: usize) -> Vec<GroupoidMorphism> {
        (0..self.order())
            .map(|element| GroupoidMorphism {
                source: a,
                target: b,
                element,
            })
            .collect()
    }

    /// `g` then `h`; `None` unless `g` ends where `h` starts.
    pub fn compose(&self, g: &GroupoidMorphism, h: &GroupoidMorphism) -> Option<GroupoidMorphism> {
        (g.target == h.source).then(|| GroupoidMorphism {
            source: g.source,
            target: h.target,
            element: self.multiply(g.element, h.element),
        })
    }

    pub fn inverse(&self, g: &GroupoidMorphism) -> GroupoidMorphism {
        GroupoidMorphism {
            source: g.target,
            target: g.source,
            element: self.inverses[g.element],
        }
    }

    /// Image of the face inclusion `a -> b` (global simplex indices, `a` a face of `b`).
    pub fn face_map(&self, a: usize, b: usize) -> GroupoidMorphism {
        let element = if a == b {
            0
        } else if a < b {
            self.edge_elements[&(a, b)]
        } else {
            self.inverses[self.edge_elements[&(b, a)]]
        };
        GroupoidMorphism {
            source: a,
            target: b,
            element,
        }
    }

    /// Associativity on `samples` random composable triples.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, k) = (self.num_objects(), self.order());
        for _ in 0..samples {
            let o: Vec<usize> = (0..4).map(|_| rng.gen_range(0..n)).collect();
            let m: Vec<GroupoidMorphism> = (0..3)
                .map(|i| GroupoidMorphism {
                    source: o[i],
                    target: o[i + 1],
                    element: rng.gen_range(0..k),
                })
                .collect();
            let left = self.compose(&self.compose(&m[0], &m[1]).expect("composable"), &m[2]);
            let right = self.compose(&m[0], &self.compose(&m[1], &m[2]).expect("composable"));
            if left != right {
                return Err(Error::InvalidCategory(format!("composition not associative on {m:?}")));
            }
        }
        Ok(())
    }
}
