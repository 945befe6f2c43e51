//! Orbit categories, the coset functor `R` and its Grothendieck construction.
//!
//! A morphism `G/K -> G/H` is the equivariant map `eK -> cH` for a coset `cH`
//! with `c^-1 K c ⊆ H`. It is stored under the least element of `cH` (elements
//! ordered lexicographically by permutation images). Composition of `eK -> cH`
//! with `eH -> c'L` is `eK -> cc'L`.

use std::collections::HashMap;

use super::finite::{FiniteCategory, Morphism};
use super::functor::{grothendieck, CatFunctor, CatValuedFunctor};
use crate::error::{Error, Result};
use crate::group::{FamilySpec, PermGroup, Subgroup};
use crate::limits::Limits;

/// An orbit category with the coset data behind each morphism.
#[derive(Clone, Debug)]
pub struct OrbitCategory {
    pub category: FiniteCategory,
    pub subgroups: Vec<Subgroup>,
    /// Least coset representative `c` for each morphism `eK -> cH`.
    pub reps: Vec<usize>,
}

fn subgroup_label(g: &PermGroup, h: &Subgroup) -> String {
    if h.order() == g.order() {
        "G/G".into()
    } else if h.order() == 1 {
        "G/e".into()
    } else {
        format!("G/{}", h.describe(g))
    }
}

/// `c^-1 K c ⊆ H`.
fn conjugates_into(g: &PermGroup, c: usize, k: &Subgroup, h: &Subgroup) -> bool {
    let ci = g.inv(c);
    k.elements().iter().all(|&x| h.contains(g.conjugate(ci, x)))
}

pub fn orbit_category(g: &PermGroup, family: &FamilySpec, limits: &Limits) -> Result<OrbitCategory> {
    let subs = family.members().to_vec();
    // the family may have been validated against a different group
    FamilySpec::new(g, subs.clone(), limits)?;
    let reps_of: Vec<Vec<usize>> = subs.iter().map(|h| g.coset_reps(h)).collect();
    let mut morphisms = Vec::new();
    let mut reps = Vec::new();
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut identities = vec![0; subs.len()];
    for (ki, k) in subs.iter().enumerate() {
        for (hi, h) in subs.iter().enumerate() {
            for &c in &reps_of[hi] {
                if conjugates_into(g, c, k, h) {
                    if ki == hi && c == g.identity() {
                        identities[ki] = morphisms.len();
                    }
                    index.insert((ki, hi, c), morphisms.len());
                    morphisms.push(Morphism {
                        source: ki,
                        target: hi,
                        label: format!("e->{}", g.describe_element(c)),
                    });
                    reps.push(c);
                    if morphisms.len() > limits.max_morphisms {
                        return Err(Error::SizeBoundExceeded {
                            what: "morphisms",
                            bound: limits.max_morphisms,
                        });
                    }
                }
            }
        }
    }
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m: &Morphism| (m.source, m.target)).collect();
    let objects = subs.iter().map(|h| subgroup_label(g, h)).collect();
    let category = FiniteCategory::new(objects, morphisms, identities, |f, f2| {
        let (k, _) = ends[f];
        let l = ends[f2].1;
        let c = g.coset_rep(g.mul(reps[f], reps[f2]), &subs[l]);
        index[&(k, l, c)]
    })?;
    Ok(OrbitCategory {
        category,
        subgroups: subs,
        reps,
    })
}

/// The functor sending `G/H` to the discrete category on its cosets and the
/// morphism `eK -> cH` to `aK -> acH`. Objects of `R(G/H)` are listed by
/// increasing least representative, so `eH` is object 0.
pub fn standard_r(g: &PermGroup, oc: &OrbitCategory) -> CatValuedFunctor {
    let reps_of: Vec<Vec<usize>> = oc.subgroups.iter().map(|h| g.coset_reps(h)).collect();
    let categories = reps_of
        .iter()
        .map(|reps| FiniteCategory::discrete(reps.iter().map(|&a| format!("{}H", g.describe_element(a))).collect()))
        .collect();
    let functors = oc
        .category
        .morphisms()
        .iter()
        .enumerate()
        .map(|(f, m)| {
            let h = &oc.subgroups[m.target];
            let objects: Vec<usize> = reps_of[m.source]
                .iter()
                .map(|&a| {
                    let r = g.coset_rep(g.mul(a, oc.reps[f]), h);
                    reps_of[m.target].binary_search(&r).expect("coset representative")
                })
                .collect();
            CatFunctor {
                morphisms: objects.clone(),
                objects,
            }
        })
        .collect();
    CatValuedFunctor { categories, functors }
}

/// `Gr(R)` with the index data needed by the group action.
#[derive(Clone, Debug)]
pub struct CosetGrothendieck {
    pub category: FiniteCategory,
    /// `(subgroup index, coset index)` per object.
    pub objects: Vec<(usize, usize)>,
    /// Orbit-category morphism underlying each morphism.
    pub base_morphism: Vec<usize>,
}

pub fn coset_grothendieck(g: &PermGroup, oc: &OrbitCategory, limits: &Limits) -> Result<CosetGrothendieck> {
    let r = standard_r(g, oc);
    let category = grothendieck(&oc.category, &r, limits.max_morphisms)?;
    let mut objects = Vec::new();
    for d in 0..oc.category.num_objects() {
        for x in 0..r.categories[d].num_objects() {
            objects.push((d, x));
        }
    }
    // the fibres are discrete, so out-morphisms of (d, x) follow out_of(d)
    let mut base_morphism = Vec::with_capacity(category.num_morphisms());
    for &(d, _) in &objects {
        base_morphism.extend_from_slice(oc.category.out_of(d));
    }
    Ok(CosetGrothendieck {
        category,
        objects,
        base_morphism,
    })
}

/// A group acting on a finite category by automorphisms, one functor per element.
#[derive(Clone, Debug)]
pub struct GroupActionOnCategory {
    pub functors: Vec<CatFunctor>,
}

impl GroupActionOnCategory {
    /// Each functor is an automorphism, the identity acts trivially and
    /// `(ab)·x = a·(b·x)` for all pairs.
    pub fn check(&self, g: &PermGroup, c: &FiniteCategory) -> Result<()> {
        if self.functors.len() != g.order() {
            return Err(Error::InvalidFunctor("one functor per group element is required".into()));
        }
        if self.functors[g.identity()] != CatFunctor::identity(c) {
            return Err(Error::InvalidFunctor("identity element does not act trivially".into()));
        }
        for f in &self.functors {
            f.check(c, c)?;
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if self.functors[b].then(&self.functors[a]) != self.functors[g.mul(a, b)] {
                    return Err(Error::InvalidFunctor(format!("action is not compatible at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }
}

/// Left multiplication on cosets: `g·(G/H, aH) = (G/H, gaH)`.
pub fn standard_action(g: &PermGroup, oc: &OrbitCategory, gr: &CosetGrothendieck) -> GroupActionOnCategory {
    let reps_of: Vec<Vec<usize>> = oc.subgroups.iter().map(|h| g.coset_reps(h)).collect();
    let obj_index: HashMap<(usize, usize), usize> = gr.objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut mor_index: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 0..gr.category.num_morphisms() {
        mor_index.insert((gr.category.source(f), gr.base_morphism[f]), f);
    }
    let functors = (0..g.order())
        .map(|x| {
            let objects: Vec<usize> = gr
                .objects
                .iter()
                .map(|&(d, i)| {
                    let h = &oc.subgroups[d];
                    let r = g.coset_rep(g.mul(x, reps_of[d][i]), h);
                    obj_index[&(d, reps_of[d].binary_search(&r).expect("representative"))]
                })
                .collect();
            let morphisms = (0..gr.category.num_morphisms())
                .map(|f| mor_index[&(objects[gr.category.source(f)], gr.base_morphism[f])])
                .collect();
            CatFunctor { objects, morphisms }
        })
        .collect();
    GroupActionOnCategory { functors }
}

/// Full subcategory on the objects fixed by every element of `k`.
pub fn fixed_subcategory(c: &FiniteCategory, action: &GroupActionOnCategory, k: &Subgroup) -> (FiniteCategory, Vec<usize>) {
    let fixed: Vec<usize> = (0..c.num_objects())
        .filter(|&o| k.elements().iter().all(|&x| action.functors[x].objects[o] == o))
        .collect();
    let (sub, _) = c.full_subcategory(&fixed);
    (sub, fixed)
}

/// The quotient of a category by a group action, with object and morphism orbit maps.
#[derive(Clone, Debug)]
pub struct QuotientCategory {
    pub category: FiniteCategory,
    pub object_orbit: Vec<usize>,
    pub morphism_orbit: Vec<usize>,
}

fn orbit_ids(n: usize, images: impl Fn(usize) -> Vec<usize>) -> (Vec<usize>, Vec<usize>) {
    let mut id = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if id[x] == usize::MAX {
            for y in images(x) {
                id[y] = reps.len();
            }
            reps.push(x);
        }
    }
    (id, reps)
}

/// Objects are orbits of objects, morphisms orbits of morphisms. The composite
/// of `[f]` and `[g]` is `[f then h·g]` for any `h` moving the source of `g` to the
/// target of `f`; every such choice is checked to give the same orbit.
pub fn quotient_category(c: &FiniteCategory, action: &GroupActionOnCategory) -> Result<QuotientCategory> {
    let (object_orbit, obj_reps) = orbit_ids(c.num_objects(), |x| action.functors.iter().map(|f| f.objects[x]).collect());
    let (morphism_orbit, mor_reps) =
        orbit_ids(c.num_morphisms(), |x| action.functors.iter().map(|f| f.morphisms[x]).collect());
    let morphisms: Vec<Morphism> = mor_reps
        .iter()
        .map(|&f| Morphism {
            source: object_orbit[c.source(f)],
            target: object_orbit[c.target(f)],
            label: c.morphism(f).label.clone(),
        })
        .collect();
    let identities: Vec<usize> = obj_reps.iter().map(|&o| morphism_orbit[c.identity(o)]).collect();
    for f in 0..c.num_morphisms() {
        if c.is_identity(f) != (identities[object_orbit[c.source(f)]] == morphism_orbit[f]) {
            return Err(Error::NonCompatibleAction("an identity shares an orbit with a non-identity".into()));
        }
    }
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 0..c.num_morphisms() {
        for &g in c.out_of(c.target(f)) {
            let key = (morphism_orbit[f], morphism_orbit[g]);
            let val = morphism_orbit[c.then(f, g).expect("composable")];
            if *table.entry(key).or_insert(val) != val {
                return Err(Error::NonCompatibleAction(format!("composite of orbits {key:?} is not well defined")));
            }
        }
    }
    let objects = obj_reps.iter().map(|&o| c.object_label(o).to_string()).collect();
    let category = FiniteCategory::new(objects, morphisms, identities, |a, b| {
        *table.get(&(a, b)).unwrap_or(&usize::MAX)
    })
    .map_err(|e| Error::NonCompatibleAction(e.to_string()))?;
    Ok(QuotientCategory {
        category,
        object_orbit,
        morphism_orbit,
    })
}

/// The isomorphism `Gr(R)/G -> O_F` sending the orbit of a morphism to the
/// orbit-category morphism underlying its representative out of `(G/K, eK)`.
/// The returned functor is checked and bijective.
pub fn quotient_to_orbit_category(
    oc: &OrbitCategory,
    gr: &CosetGrothendieck,
    q: &QuotientCategory,
) -> Result<CatFunctor> {
    let qc = &q.category;
    let mut objects = vec![usize::MAX; qc.num_objects()];
    let mut morphisms = vec![usize::MAX; qc.num_morphisms()];
    for (o, &(d, _)) in gr.objects.iter().enumerate() {
        let slot = &mut objects[q.object_orbit[o]];
        if *slot != usize::MAX && *slot != d {
            return Err(Error::NonCompatibleAction("an orbit meets two orbit-category objects".into()));
        }
        *slot = d;
    }
    for f in 0..gr.category.num_morphisms() {
        if gr.objects[gr.category.source(f)].1 == 0 {
            let slot = &mut morphisms[q.morphism_orbit[f]];
            if *slot != usize::MAX {
                return Err(Error::NonCompatibleAction("two morphisms out of a base object share an orbit".into()));
            }
            *slot = gr.base_morphism[f];
        }
    }
    let phi = CatFunctor { objects, morphisms };
    let bijective = |v: &[usize], n: usize| {
        let mut seen = vec![false; n];
        v.len() == n && v.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
    };
    if !bijective(&phi.objects, oc.category.num_objects()) || !bijective(&phi.morphisms, oc.category.num_morphisms()) {
        return Err(Error::NonCompatibleAction("orbit map is not a bijection onto the orbit category".into()));
    }
    phi.check(qc, &oc.category)?;
    Ok(phi)
}
