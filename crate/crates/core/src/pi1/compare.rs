use std::collections::VecDeque;

use serde::Serialize;

use super::edge_path::edge_path_presentation;
use super::presentation::{Abelianization, Presentation, Word};
use super::tietze::tietze_simplify;
use super::todd_coxeter::todd_coxeter;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::group::{torsion_generated_subgroup, GroupSpec};
use crate::limits::Limits;
use crate::simplicial::SimplicialComplex;

/// Presentation of the fundamental group of the nerve of a connected category.
///
/// Generators are the non-identity morphisms off a breadth-first spanning tree
/// of the underlying graph (tree morphisms are trivial); each composable pair
/// `(f, g)` of non-identity morphisms gives the relator `f g (g∘f)^-1`.
pub fn category_presentation(c: &FiniteCategory) -> Result<Presentation> {
    let n = c.num_objects();
    if n == 0 {
        return Err(Error::InvalidInput("category without objects".into()));
    }
    let mut neighbours: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in 0..c.num_morphisms() {
        if !c.is_identity(f) {
            let (s, t) = (c.source(f), c.target(f));
            neighbours[s].push((t, f));
            neighbours[t].push((s, f));
        }
    }
    let mut seen = vec![false; n];
    let mut tree = vec![false; c.num_morphisms()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(o) = queue.pop_front() {
        for &(p, f) in &neighbours[o] {
            if !seen[p] {
                seen[p] = true;
                tree[f] = true;
                queue.push_back(p);
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::DisconnectedComplex);
    }
    let mut letter = vec![0i32; c.num_morphisms()];
    let mut names = Vec::new();
    for f in 0..c.num_morphisms() {
        if !c.is_identity(f) && !tree[f] {
            names.push(format!("m{f}"));
            letter[f] = names.len() as i32;
        }
    }
    let word = |f: usize| -> Word { if letter[f] == 0 { Vec::new() } else { vec![letter[f]] } };
    let mut rels = Vec::new();
    for f in 0..c.num_morphisms() {
        if c.is_identity(f) {
            continue;
        }
        for &g in c.out_of(c.target(f)) {
            if c.is_identity(g) {
                continue;
            }
            let h = c.then(f, g).expect("composable");
            let mut r = word(f);
            r.extend(word(g));
            r.extend(word(h).iter().rev().map(|x| -x));
            rels.push(r);
        }
    }
    Presentation::new(names, rels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pi1Verdict {
    Match,
    Mismatch,
}

/// Comparison of `π₁` of a model with `G/T`, `T` the torsion-generated subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct Pi1Comparison {
    pub model: String,
    pub quotient: String,
    pub model_abelianization: Abelianization,
    pub quotient_abelianization: Abelianization,
    /// Orders from completed coset tables; `None` for infinite groups.
    pub model_order: Option<usize>,
    pub quotient_order: Option<usize>,
    /// Rank of the model group when its simplified presentation has no relators.
    pub model_free_rank: Option<usize>,
    /// Both sides are finite of equal order or free of equal rank.
    pub certified: bool,
    pub verdict: Pi1Verdict,
}

fn is_free(p: &Presentation) -> bool {
    p.relators.is_empty()
}

/// Compares two presentations: abelianizations always, orders by coset
/// enumeration when the abelianizations are finite. An overflowing enumeration
/// is reported as `Inconclusive`.
pub fn compare_presentations(model: &Presentation, quotient: &Presentation, limits: &Limits) -> Result<Pi1Comparison> {
    let model = tietze_simplify(model, limits.tietze_budget);
    let quotient = tietze_simplify(quotient, limits.tietze_budget);
    let (am, aq) = (model.abelianization(), quotient.abelianization());
    let mut out = Pi1Comparison {
        model: model.to_string(),
        quotient: quotient.to_string(),
        model_abelianization: am.clone(),
        quotient_abelianization: aq.clone(),
        model_order: None,
        quotient_order: None,
        model_free_rank: is_free(&model).then(|| model.num_generators()),
        certified: false,
        verdict: Pi1Verdict::Mismatch,
    };
    if am != aq {
        return Ok(out);
    }
    if am.free_rank > 0 {
        // both infinite; only free groups of equal rank are certified isomorphic
        out.certified = is_free(&model) && is_free(&quotient) && model.num_generators() == quotient.num_generators();
        out.verdict = Pi1Verdict::Match;
        return Ok(out);
    }
    let order = |p: &Presentation, side: &str| -> Result<usize> {
        todd_coxeter(p, &[], limits.max_cosets).index().ok_or_else(|| {
            Error::Inconclusive(format!(
                "coset enumeration for the {side} overflowed {} cosets",
                limits.max_cosets
            ))
        })
    };
    let (m, q) = (order(&model, "model")?, order(&quotient, "quotient")?);
    out.model_order = Some(m);
    out.quotient_order = Some(q);
    out.certified = m == q;
    out.verdict = if m == q { Pi1Verdict::Match } else { Pi1Verdict::Mismatch };
    Ok(out)
}

/// Compares the edge-path group of `x` with the torsion quotient of `g`.
pub fn pi1_matches_torsion_quotient(g: &GroupSpec, x: &SimplicialComplex, limits: &Limits) -> Result<Pi1Comparison> {
    let model = edge_path_presentation(x, 0)?;
    let tq = torsion_generated_subgroup(g)?;
    compare_presentations(&model, &tq.quotient, limits)
}

/// Same comparison with the model given as the nerve of a category.
pub fn pi1_matches_torsion_quotient_for_category(
    g: &GroupSpec,
    c: &FiniteCategory,
    limits: &Limits,
) -> Result<Pi1Comparison> {
    let model = category_presentation(c)?;
    let tq = torsion_generated_subgroup(g)?;
    compare_presentations(&model, &tq.quotient, limits)
}
