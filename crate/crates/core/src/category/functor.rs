use std::collections::HashMap;

use super::finite::{FiniteCategory, Morphism};
use crate::error::{Error, Result};

/// A functor between finite categories, as object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl CatFunctor {
    pub fn identity(c: &FiniteCategory) -> Self {
        CatFunctor {
            objects: (0..c.num_objects()).collect(),
            morphisms: (0..c.num_morphisms()).collect(),
        }
    }

    /// Exhaustive check of endpoints, identities and composition.
    pub fn check(&self, source: &FiniteCategory, target: &FiniteCategory) -> Result<()> {
        if self.objects.len() != source.num_objects() || self.morphisms.len() != source.num_morphisms() {
            return Err(Error::InvalidFunctor("maps have the wrong length".into()));
        }
        if self.objects.iter().any(|&o| o >= target.num_objects())
            || self.morphisms.iter().any(|&m| m >= target.num_morphisms())
        {
            return Err(Error::InvalidFunctor("image out of range".into()));
        }
        for (f, m) in source.morphisms().iter().enumerate() {
            let img = target.morphism(self.morphisms[f]);
            if img.source != self.objects[m.source] || img.target != self.objects[m.target] {
                return Err(Error::InvalidFunctor(format!("morphism {f} lands between the wrong objects")));
            }
        }
        for o in 0..source.num_objects() {
            if self.morphisms[source.identity(o)] != target.identity(self.objects[o]) {
                return Err(Error::InvalidFunctor(format!("identity of object {o} is not preserved")));
            }
        }
        for f in 0..source.num_morphisms() {
            for &g in source.out_of(source.target(f)) {
                let fg = source.then(f, g).expect("composable");
                if target.then(self.morphisms[f], self.morphisms[g]) != Some(self.morphisms[fg]) {
                    return Err(Error::InvalidFunctor(format!("composition of {f} and {g} is not preserved")));
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CatFunctor) -> CatFunctor {
        CatFunctor {
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        }
    }
}

/// A functor from a finite category into finite categories: a category per
/// object and a functor per morphism.
#[derive(Clone, Debug)]
pub struct CatValuedFunctor {
    pub categories: Vec<FiniteCategory>,
    pub functors: Vec<CatFunctor>,
}

impl CatValuedFunctor {
    /// Checks each functor and functoriality in the indexing category.
    pub fn check(&self, base: &FiniteCategory) -> Result<()> {
        if self.categories.len() != base.num_objects() || self.functors.len() != base.num_morphisms() {
            return Err(Error::InvalidFunctor("one category per object and one functor per morphism".into()));
        }
        for (u, m) in base.morphisms().iter().enumerate() {
            self.functors[u].check(&self.categories[m.source], &self.categories[m.target])?;
        }
        for o in 0..base.num_objects() {
            if self.functors[base.identity(o)] != CatFunctor::identity(&self.categories[o]) {
                return Err(Error::InvalidFunctor(format!("identity of object {o} is not sent to the identity functor")));
            }
        }
        for u in 0..base.num_morphisms() {
            for &w in base.out_of(base.target(u)) {
                let uw = base.then(u, w).expect("composable");
                if self.functors[u].then(&self.functors[w]) != self.functors[uw] {
                    return Err(Error::InvalidFunctor(format!("composite of {u} and {w} is not preserved")));
                }
            }
        }
        Ok(())
    }
}

/// Grothendieck construction: objects `(d, x)` with `x` in `F(d)`; a morphism
/// `(d, x) -> (d', x')` is `(u, v)` with `u: d -> d'` and `v: F(u)(x) -> x'`.
/// Composition: `(u', v') ∘ (u, v) = (u' ∘ u, v' ∘ F(u')(v))`.
pub fn grothendieck(base: &FiniteCategory, f: &CatValuedFunctor, max_morphisms: usize) -> Result<FiniteCategory> {
    let mut obj_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut objects = Vec::new();
    for d in 0..base.num_objects() {
        for x in 0..f.categories[d].num_objects() {
            obj_index.insert((d, x), objects.len());
            objects.push(format!("({}, {})", base.object_label(d), f.categories[d].object_label(x)));
        }
    }
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    let mut mor_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut morphisms = Vec::new();
    let mut identities = vec![0; objects.len()];
    for d in 0..base.num_objects() {
        for x in 0..f.categories[d].num_objects() {
            let src = obj_index[&(d, x)];
            for &u in base.out_of(d) {
                let d2 = base.target(u);
                let fx = f.functors[u].objects[x];
                let c2 = &f.categories[d2];
                for &v in c2.out_of(fx) {
                    if base.is_identity(u) && c2.is_identity(v) && fx == x {
                        identities[src] = morphisms.len();
                    }
                    mor_index.insert((src, u, v), morphisms.len());
                    pairs.push((src, u, v));
                    morphisms.push(Morphism {
                        source: src,
                        target: obj_index[&(d2, c2.target(v))],
                        label: format!("({}, {})", base.morphism(u).label, c2.morphism(v).label),
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
    }
    FiniteCategory::new(objects, morphisms, identities, |a, b| {
        let (src, u, v) = pairs[a];
        let (_, u2, v2) = pairs[b];
        let uu = base.then(u, u2).expect("composable in the base");
        let moved = f.functors[u2].morphisms[v];
        let vv = f.categories[base.target(u2)].then(moved, v2).expect("composable in the fibre");
        mor_index[&(src, uu, vv)]
    })
}
