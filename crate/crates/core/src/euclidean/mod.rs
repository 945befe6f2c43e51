//! Line and wallpaper groups, and quotient models of their actions on `R^d`.

mod model;
mod report;
mod spec;

pub use model::{
    bbar_model, circle_triangulation, crossed_torus, invariant_torus, split_torus, OrbifoldModel, TorusTriangulation,
    MIN_REFINEMENT, SUBDIVISIONS,
};
pub use report::{identify_shape, nullification_report, NullificationReport, QuotientPrediction};
pub use spec::{catalogue_group, mat_mul, mat_vec, EuclideanGroupSpec, IntMat, Lattice, CATALOGUE_NAMES};

/// Catalogue names with a concrete prime substituted into `ZxZp(p)`.
pub fn catalogue_examples() -> Vec<String> {
    ["Z", "Dinf", "ZxZp(3)", "ZxZp(5)", "p1", "pmm", "p3", "p3m1", "H_even"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}
