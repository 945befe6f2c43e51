use serde::Serialize;

use super::groupoid::{localize_simplex_category, FiniteFundamentalGroupoid, GroupoidMorphism};
use crate::category::{CatFunctor, FiniteCategory};
use crate::error::{Error, Result};
use crate::homology::{Coefficients, HomologyResult};
use crate::limits::Limits;
use crate::simplicial::{is_face, nerve_truncated, SimplicialComplex};

/// Nerve truncation used by the acyclicity check: homology in degrees `0..d`.
pub const DEFAULT_TRUNCATION: usize = 4;

/// The overcategory `L ↓ σ` of the localization functor `L : Γ X -> L(Γ X)`.
///
/// Object `τ * |π₁| + g` is the pair `(τ, φ)` with `φ : τ -> σ` carrying the
/// group element `g`. A face inclusion `ψ : τ -> τ'` is a morphism
/// `(τ, φ) -> (τ', φ')` exactly when `φ = φ' ∘ L(ψ)`.
#[derive(Clone, Debug)]
pub struct Overcategory {
    pub sigma: usize,
    pub category: FiniteCategory,
    pub objects: Vec<GroupoidMorphism>,
}

pub fn overcategory(l: &FiniteFundamentalGroupoid, sigma: usize, limits: &Limits) -> Result<Overcategory> {
    let x = l.complex();
    if sigma >= l.num_objects() {
        return Err(Error::InvalidInput(format!("no simplex with index {sigma}")));
    }
    let simplices: Vec<&Vec<usize>> = x.all_simplices().collect();
    let objects: Vec<GroupoidMorphism> = (0..l.num_objects()).flat_map(|t| l.hom(t, sigma)).collect();
    let labels = objects
        .iter()
        .map(|phi| {
            let v: Vec<String> = simplices[phi.source].iter().map(|v| x.labels()[*v].clone()).collect();
            format!("([{}], g{})", v.join(" "), phi.element)
        })
        .collect();
    let le = |a: usize, b: usize| {
        let (p, q) = (&objects[a], &objects[b]);
        is_face(simplices[p.source], simplices[q.source])
            && l.compose(&l.face_map(p.source, q.source), q) == Some(*p)
    };
    let category = FiniteCategory::from_preorder(labels, le, limits.max_morphisms)?;
    Ok(Overcategory {
        sigma,
        category,
        objects,
    })
}

/// The functor `T_g : L ↓ σ -> L ↓ σ'` sending `(τ, φ)` to `(τ, g ∘ φ)`.
pub fn transport(
    l: &FiniteFundamentalGroupoid,
    from: &Overcategory,
    to: &Overcategory,
    g: &GroupoidMorphism,
) -> Result<CatFunctor> {
    if g.source != from.sigma || g.target != to.sigma {
        return Err(Error::InvalidInput("transport needs a morphism between the two base simplices".into()));
    }
    let k = l.order();
    let objects: Vec<usize> = from
        .objects
        .iter()
        .map(|phi| {
            let img = l.compose(phi, g).expect("composable");
            img.source * k + img.element
        })
        .collect();
    let c = &from.category;
    let morphisms = (0..c.num_morphisms())
        .map(|f| {
            let (s, t) = (objects[c.source(f)], objects[c.target(f)]);
            to.category
                .hom(s, t)
                .first()
                .copied()
                .ok_or_else(|| Error::InvalidFunctor(format!("no morphism between images of {f}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatFunctor { objects, morphisms })
}

/// Per-degree homology of the nerve of `L ↓ σ`.
#[derive(Clone, Debug, Serialize)]
pub struct ContractibilityReport {
    pub sigma: usize,
    pub sigma_label: String,
    pub pi1_order: usize,
    pub objects: usize,
    pub morphisms: usize,
    /// Nondegenerate nerve cells per degree, `0..=truncation`.
    pub cell_counts: Vec<usize>,
    /// Homology in degrees `0..truncation`.
    pub homology: HomologyResult,
    pub truncation: usize,
    pub connected: bool,
    pub acyclic: bool,
}

/// Localizes `Γ X`, builds `L ↓ σ` and computes the homology of its nerve
/// truncated at `d`. Acyclicity through degree `d - 1` is what can be checked
/// with finitely many cells; the report says which degrees were covered.
pub fn check_contractible_overcategory(
    x: &SimplicialComplex,
    sigma: usize,
    d: usize,
    limits: &Limits,
) -> Result<ContractibilityReport> {
    if d == 0 {
        return Err(Error::InvalidInput("truncation must be at least 1".into()));
    }
    let l = localize_simplex_category(x, limits.max_order, limits)?;
    let o = overcategory(&l, sigma, limits)?;
    let nerve = nerve_truncated(&o.category, d, limits)?;
    let homology = crate::homology::homology(&nerve.chain_complex(), Coefficients::Integers)?;
    let simplex: Vec<String> = x
        .all_simplices()
        .nth(sigma)
        .expect("checked")
        .iter()
        .map(|v| x.labels()[*v].clone())
        .collect();
    Ok(ContractibilityReport {
        sigma,
        sigma_label: format!("[{}]", simplex.join(" ")),
        pi1_order: l.order(),
        objects: o.category.num_objects(),
        morphisms: o.category.num_morphisms(),
        cell_counts: nerve.counts(),
        connected: homology.betti.first() == Some(&1) && homology.torsion[0].is_empty(),
        acyclic: homology.is_reduced_acyclic(),
        homology,
        truncation: d,
    })
}
