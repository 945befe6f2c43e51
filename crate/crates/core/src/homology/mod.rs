//! Exact integer linear algebra: Smith normal form and chain-complex homology
//! over the integers and prime fields.

mod chain;
mod matrix;
mod sparse;

pub use chain::{homology, ChainComplex, Coefficients, HomologyResult};
pub use matrix::{invariant_factors, smith_normal_form, IntMatrix, SmithForm};
pub use sparse::{eliminate, rank_mod_p, Elimination, SparseMatrix, DENSE_THRESHOLD};
