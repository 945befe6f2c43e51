use serde::Serialize;

use super::model::{bbar_model, OrbifoldModel};
use super::spec::EuclideanGroupSpec;
use crate::error::Result;
use crate::group::{torsion_generated_subgroup, GroupSpec};
use crate::homology::{Coefficients, HomologyResult};
use crate::limits::Limits;
use crate::pi1::{pi1_matches_torsion_quotient, tietze_simplify, Abelianization, Pi1Comparison, Pi1Verdict};

/// Independent prediction `B(G/T_p)` for groups with a finite kernel.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientPrediction {
    pub presentation: String,
    pub abelianization: Abelianization,
    pub shape: String,
}

/// Homology, `π₁` comparison and verdict for one catalogue group.
#[derive(Clone, Debug, Serialize)]
pub struct NullificationReport {
    pub group: String,
    pub refinement: usize,
    pub vertices: usize,
    pub simplices: usize,
    pub homology: HomologyResult,
    pub pi1: Option<Pi1Comparison>,
    /// Set when the `π₁` comparison could not be completed.
    pub pi1_error: Option<String>,
    pub prediction: Option<QuotientPrediction>,
    pub shape: String,
    pub expected: String,
    pub consistent: bool,
    pub verdict: String,
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).expect("digit")).expect("subscript digit"))
        .collect()
}

fn pretty(shape: &str) -> &str {
    match shape {
        "S1" => "S¹",
        "S2" => "S²",
        "T2" => "T²",
        other => other,
    }
}

/// Homotopy type read off from homology and a certified `π₁`. A simply connected
/// complex of dimension at most 2 is a wedge of 2-spheres, and a graph is
/// determined by its fundamental group.
pub fn identify_shape(h: &HomologyResult, pi1: Option<&Pi1Comparison>, dimension: usize) -> String {
    let no_torsion = h.torsion.iter().all(Vec::is_empty);
    let betti = |n: usize| h.betti.get(n).copied().unwrap_or(0);
    let simply_connected = pi1.is_some_and(|p| p.model_order == Some(1));
    let shape = if dimension <= 2 && simply_connected && no_torsion && betti(1) == 0 {
        match betti(2) {
            0 => "point",
            1 => "S2",
            _ => "unidentified",
        }
    } else if dimension <= 1 && pi1.is_some_and(|p| p.model_free_rank == Some(1)) {
        "S1"
    } else if no_torsion && (betti(0), betti(1), betti(2)) == (1, 2, 1)
        && pi1.is_some_and(|p| p.model_abelianization.free_rank == 2)
    {
        "T2"
    } else {
        "unidentified"
    };
    shape.to_string()
}

/// Builds the model at refinement `k`, computes homology in degrees `0..=d`,
/// compares `π₁` with the torsion quotient and states a verdict.
pub fn nullification_report(spec: &EuclideanGroupSpec, k: usize, d: usize, limits: &Limits) -> Result<NullificationReport> {
    let model: OrbifoldModel = bbar_model(spec, k)?;
    let x = &model.complex;
    let mut homology = x.homology(Coefficients::Integers)?;
    while homology.betti.len() <= d {
        homology.betti.push(0);
        homology.torsion.push(Vec::new());
    }
    let homology = homology.truncated(d);
    let group = GroupSpec::Euclidean(spec.clone());
    let (pi1, pi1_error) = match pi1_matches_torsion_quotient(&group, x, limits) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let shape = identify_shape(&homology, pi1.as_ref(), x.dim());
    let prediction = if spec.kernel_order > 1 {
        let q = tietze_simplify(&torsion_generated_subgroup(&group)?.quotient, limits.tietze_budget);
        let abelianization = q.abelianization();
        let shape = if q.relators.is_empty() {
            match q.num_generators() {
                0 => "point",
                1 => "S1",
                _ => "unidentified",
            }
        } else {
            "unidentified"
        };
        Some(QuotientPrediction {
            presentation: q.to_string(),
            abelianization,
            shape: shape.to_string(),
        })
    } else {
        None
    };
    let pi1_ok = pi1.as_ref().is_some_and(|p| p.verdict == Pi1Verdict::Match);
    let prediction_ok = prediction.as_ref().map_or(true, |p| p.shape == shape);
    let consistent = pi1_ok && prediction_ok && shape == spec.expected_quotient;
    let primes = spec.torsion_primes();
    let prefix = if primes.is_empty() {
        format!("B {}", spec.name)
    } else {
        let wedge: Vec<String> = primes.iter().map(|p| format!("BZ/{p}")).collect();
        format!("P_{{{}}}B {}", wedge.join(" ∨ "), spec.name)
    };
    let mut claim = format!("{prefix} ≃ {}", pretty(&shape));
    if spec.kernel_order > 1 {
        claim.push_str(&format!(" = B(G/T{})", subscript(spec.kernel_order)));
    }
    let status = if consistent {
        "consistent"
    } else if pi1_error.is_some() {
        "inconclusive"
    } else {
        "inconsistent"
    };
    Ok(NullificationReport {
        group: spec.name.clone(),
        refinement: model.refinement,
        vertices: x.num_vertices(),
        simplices: x.total_count(),
        homology,
        pi1,
        pi1_error,
        prediction,
        shape,
        expected: spec.expected_quotient.to_string(),
        consistent,
        verdict: format!("{claim}: {status}"),
    })
}
