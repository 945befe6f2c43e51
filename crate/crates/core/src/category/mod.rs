//! Finite categories, functors, orbit categories and Grothendieck constructions.

mod finite;
mod functor;
mod orbit;

pub use finite::{FiniteCategory, Morphism};
pub use functor::{grothendieck, CatFunctor, CatValuedFunctor};
pub use orbit::{
    coset_grothendieck, fixed_subcategory, orbit_category, quotient_category, quotient_to_orbit_category,
    standard_action, standard_r, CosetGrothendieck, GroupActionOnCategory, OrbitCategory, QuotientCategory,
};
