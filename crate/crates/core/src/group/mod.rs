//! Finite permutation groups, their subgroup lattices and families of subgroups.

mod catalogue;
mod perm;
mod perm_group;
mod torsion;

pub use catalogue::{finite_group, group_to_text, parse_group_text, FINITE_GROUP_NAMES};
pub use perm::Perm;
pub use perm_group::{all_subgroups, close_generators, finite_family, FamilySpec, PermGroup, Subgroup};
pub use torsion::{cayley_presentation, perm_group_presentation, torsion_generated_subgroup, GroupSpec, TorsionQuotient};
