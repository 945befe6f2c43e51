//! Localization of simplex categories and overcategories of the localization functor.

mod groupoid;
mod over;

pub use groupoid::{localize_simplex_category, FiniteFundamentalGroupoid, GroupoidMorphism};
pub use over::{
    check_contractible_overcategory, overcategory, transport, ContractibilityReport, Overcategory,
    DEFAULT_TRUNCATION,
};
