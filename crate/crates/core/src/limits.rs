//! Resource bounds shared by the constructions.

/// Environment variable overriding [`Limits::max_cells`].
pub const MAX_CELLS_ENV: &str = "PROPERCLASS_MAX_CELLS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest permutation degree accepted by `close_generators`.
    pub max_degree: usize,
    /// Largest group order materialized by closure.
    pub max_order: usize,
    /// Largest total morphism count of a constructed finite category.
    pub max_morphisms: usize,
    /// Largest number of nondegenerate cells in a truncated nerve.
    pub max_cells: usize,
    /// Coset limit for Todd–Coxeter enumeration.
    pub max_cosets: usize,
    /// Move budget for Tietze simplification.
    pub tietze_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 12,
            max_order: 10_000,
            max_morphisms: 200_000,
            max_cells: 5_000_000,
            max_cosets: 100_000,
            tietze_budget: 100_000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_cells` taken from `PROPERCLASS_MAX_CELLS` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_CELLS_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            limits.max_cells = v;
        }
        limits
    }
}
