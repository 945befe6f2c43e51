use thiserror::Error;

/// Errors raised by the model builders and the algebra kernels.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the configured bound of {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("permutation degree {degree} exceeds the configured bound of {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("unsupported group class: {0}")]
    UnsupportedGroupClass(String),
    #[error("invalid family of subgroups: {0}")]
    InvalidFamily(String),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("group action does not induce a well-defined quotient: {0}")]
    NonCompatibleAction(String),
    #[error("size bound exceeded: {what} would exceed {bound}")]
    SizeBoundExceeded { what: &'static str, bound: usize },
    #[error("boundary condition violated: d{degree} composed with d{} is nonzero", degree + 1)]
    BoundaryConditionViolated { degree: usize },
    #[error("group action is not regular: {0}")]
    NonRegularAction(String),
    #[error("map is not injective on vertices: {0}")]
    NonInjectiveMap(String),
    #[error("map is not simplicial: {0}")]
    NonSimplicialMap(String),
    #[error("complex is not connected")]
    DisconnectedComplex,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("fundamental group is infinite or could not be certified: {0}")]
    InfiniteOrUncertifiedPi1(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors caused by a configured resource bound.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::OrderBoundExceeded { .. }
                | Error::DegreeBoundExceeded { .. }
                | Error::SizeBoundExceeded { .. }
        )
    }
}
