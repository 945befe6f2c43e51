use std::collections::HashMap;

use serde_json::json;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A category with finitely many objects and morphisms.
///
/// Morphisms are numbered `0..num_morphisms()`. Composition is stored per
/// morphism `f` as a row indexed by the position of `g` in the out-list of
/// `f`'s target, so `then(f, g)` is two array lookups.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    out: Vec<Vec<usize>>,
    out_pos: Vec<usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
    table: Vec<Vec<usize>>,
}

impl FiniteCategory {
    /// Builds a category from morphisms and a composition rule.
    ///
    /// `then(f, g)` must return the index of `g ∘ f` whenever `target(f) == source(g)`.
    /// Identity laws and hom-set consistency are checked here; associativity is
    /// checked by [`FiniteCategory::validate`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut then: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = objects.len();
        if identities.len() != n {
            return Err(Error::InvalidCategory("one identity per object is required".into()));
        }
        let mut out = vec![Vec::new(); n];
        let mut out_pos = vec![0; morphisms.len()];
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            if m.source >= n || m.target >= n {
                return Err(Error::InvalidCategory(format!("morphism {i} has an unknown endpoint")));
            }
            out_pos[i] = out[m.source].len();
            out[m.source].push(i);
            homs.entry((m.source, m.target)).or_default().push(i);
        }
        for (o, &id) in identities.iter().enumerate() {
            if id >= morphisms.len() || morphisms[id].source != o || morphisms[id].target != o {
                return Err(Error::InvalidCategory(format!("identity of object {o} is not an endomorphism of it")));
            }
        }
        let mut table = Vec::with_capacity(morphisms.len());
        for (f, mf) in morphisms.iter().enumerate() {
            let mut row = Vec::with_capacity(out[mf.target].len());
            for &g in &out[mf.target] {
                let h = then(f, g);
                if h >= morphisms.len()
                    || morphisms[h].source != mf.source
                    || morphisms[h].target != morphisms[g].target
                {
                    return Err(Error::InvalidCategory(format!("composite of {f} and {g} has the wrong endpoints")));
                }
                row.push(h);
            }
            table.push(row);
        }
        let cat = FiniteCategory {
            objects,
            morphisms,
            identities,
            out,
            out_pos,
            homs,
            table,
        };
        for f in 0..cat.morphisms.len() {
            let (s, t) = (cat.morphisms[f].source, cat.morphisms[f].target);
            if cat.then(cat.identities[s], f) != Some(f) || cat.then(f, cat.identities[t]) != Some(f) {
                return Err(Error::InvalidCategory(format!("identities are not units for morphism {f}")));
            }
        }
        Ok(cat)
    }

    /// A preorder category: `le(a, b)` says whether there is a (unique) morphism `a -> b`.
    pub fn from_preorder(objects: Vec<String>, le: impl Fn(usize, usize) -> bool, max_morphisms: usize) -> Result<Self> {
        let n = objects.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        let mut identities = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if a == b || le(a, b) {
                    if a == b {
                        identities[a] = morphisms.len();
                    }
                    index.insert((a, b), morphisms.len());
                    morphisms.push(Morphism {
                        source: a,
                        target: b,
                        label: format!("{a}<={b}"),
                    });
                    if morphisms.len() > max_morphisms {
                        return Err(Error::SizeBoundExceeded {
                            what: "morphisms",
                            bound: max_morphisms,
                        });
                    }
                }
            }
        }
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.source, m.target)).collect();
        let mut missing = None;
        let cat = FiniteCategory::new(objects, morphisms, identities, |f, g| {
            let (a, c) = (ends[f].0, ends[g].1);
            *index.get(&(a, c)).unwrap_or_else(|| {
                missing = Some((a, c));
                &usize::MAX
            })
        });
        if let Some((a, c)) = missing {
            return Err(Error::InvalidCategory(format!("relation is not transitive at ({a}, {c})")));
        }
        cat
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_label(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.objects
    }

    pub fn object_by_label(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|l| l == label)
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].target
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    /// Morphisms out of `o`.
    pub fn out_of(&self, o: usize) -> &[usize] {
        &self.out[o]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.homs.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// `g ∘ f` (first `f`, then `g`), if composable.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        if self.morphisms[f].target != self.morphisms[g].source {
            return None;
        }
        Some(self.table[f][self.out_pos[g]])
    }

    /// Exhaustive associativity check.
    pub fn validate(&self) -> Result<()> {
        for f in 0..self.morphisms.len() {
            for &g in &self.out[self.morphisms[f].target] {
                let fg = self.table[f][self.out_pos[g]];
                for &h in &self.out[self.morphisms[g].target] {
                    let left = self.then(fg, h);
                    let gh = self.table[g][self.out_pos[h]];
                    if left != self.then(f, gh) {
                        return Err(Error::InvalidCategory(format!("composition is not associative at ({f}, {g}, {h})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// True when every hom-set has at most one element.
    pub fn is_preorder(&self) -> bool {
        self.homs.values().all(|h| h.len() <= 1)
    }

    /// An object with exactly one morphism to every object.
    pub fn has_initial_object(&self) -> Option<usize> {
        (0..self.num_objects()).find(|&o| (0..self.num_objects()).all(|c| self.hom(o, c).len() == 1))
    }

    /// An object with exactly one morphism from every object.
    pub fn has_terminal_object(&self) -> Option<usize> {
        (0..self.num_objects()).find(|&o| (0..self.num_objects()).all(|c| self.hom(c, o).len() == 1))
    }

    /// Full subcategory on `objects` (in the given order), with the map from new
    /// morphism indices to old ones.
    pub fn full_subcategory(&self, objects: &[usize]) -> (FiniteCategory, Vec<usize>) {
        let mut new_obj = vec![usize::MAX; self.num_objects()];
        for (i, &o) in objects.iter().enumerate() {
            new_obj[o] = i;
        }
        let mut old = Vec::new();
        let mut new_mor = HashMap::new();
        let mut morphisms = Vec::new();
        for &a in objects {
            for &f in &self.out[a] {
                let m = &self.morphisms[f];
                if new_obj[m.target] != usize::MAX {
                    new_mor.insert(f, morphisms.len());
                    old.push(f);
                    morphisms.push(Morphism {
                        source: new_obj[m.source],
                        target: new_obj[m.target],
                        label: m.label.clone(),
                    });
                }
            }
        }
        let identities = objects.iter().map(|&o| new_mor[&self.identities[o]]).collect();
        let labels = objects.iter().map(|&o| self.objects[o].clone()).collect();
        let sub = FiniteCategory::new(labels, morphisms, identities, |f, g| {
            new_mor[&self.then(old[f], old[g]).expect("composable")]
        })
        .expect("full subcategories are categories");
        (sub, old)
    }

    /// JSON with objects, morphisms, identities and all composition triples `[f, g, g∘f]`.
    pub fn to_json(&self) -> serde_json::Value {
        let morphisms: Vec<_> = self
            .morphisms
            .iter()
            .map(|m| json!({"source": m.source, "target": m.target, "label": m.label}))
            .collect();
        let mut composition = Vec::new();
        for f in 0..self.morphisms.len() {
            for (k, &g) in self.out[self.morphisms[f].target].iter().enumerate() {
                composition.push([f, g, self.table[f][k]]);
            }
        }
        json!({
            "objects": self.objects,
            "morphisms": morphisms,
            "identities": self.identities,
            "composition": composition,
        })
    }

    /// One-object category on a group given by its multiplication table (`mul(a, b)` = a then b).
    pub fn one_object(order: usize, then: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let morphisms = (0..order)
            .map(|i| Morphism {
                source: 0,
                target: 0,
                label: format!("g{i}"),
            })
            .collect();
        FiniteCategory::new(vec!["*".into()], morphisms, vec![0], then)
    }

    /// Category with the given objects and only identities.
    pub fn discrete(objects: Vec<String>) -> Self {
        let n = objects.len();
        let morphisms = (0..n)
            .map(|o| Morphism {
                source: o,
                target: o,
                label: "id".into(),
            })
            .collect();
        FiniteCategory::new(objects, morphisms, (0..n).collect(), |f, _| f).expect("discrete category")
    }
}
