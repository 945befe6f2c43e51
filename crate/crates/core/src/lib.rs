pub mod category;
pub mod cli;
pub mod comma;
pub mod error;
pub mod euclidean;
pub mod group;
pub mod homology;
pub mod limits;
pub mod pi1;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
