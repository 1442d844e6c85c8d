use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis size {k} exceeds vertex count {n}")]
    BasisOutOfRange { k: usize, n: usize },
    #[error("edge ({i}, {j}) does not satisfy 1 <= i <= {k} < j <= {n}")]
    EdgeViolatesBipartition { i: usize, j: usize, k: usize, n: usize },
    #[error("edge ({i}, {j}) listed more than once")]
    DuplicateEdge { i: usize, j: usize },
    #[error("graphs have different vertex counts ({left} vs {right})")]
    MismatchedVertexCount { left: usize, right: usize },
    #[error("{what} has {size} elements, above the limit of {limit}")]
    TooLarge { what: String, size: String, limit: u64 },
    #[error("cannot compose: codomain {cod} of the inner morphism differs from domain {dom} of the outer one")]
    CompositionMismatch { cod: usize, dom: usize },
    #[error("morphisms have different codomains ({left} vs {right})")]
    CodomainMismatch { left: usize, right: usize },
    #[error("morphisms have different domains ({left} vs {right})")]
    DomainMismatch { left: usize, right: usize },
    #[error("graphs are not comparable")]
    NotComparable,
    #[error("morphism into {cod} is not a monomorphism: {morphism}")]
    NotMonomorphic { cod: usize, morphism: String },
    #[error("search bound {bound} is below the required minimum {required}")]
    BoundTooSmall { bound: usize, required: usize },
    #[error("incidence functions live on fragments with different bounds ({left} vs {right})")]
    BoundMismatch { left: usize, right: usize },
    #[error("identity morphism on {object} has value zero, so the function is not invertible")]
    NotInvertible { object: usize },
    #[error("morphism {morphism} lies outside the fragment bounded by {bound}")]
    OutsideFragment { morphism: String, bound: usize },
    #[error("invalid injective isotone map: {0}")]
    InvalidDeltaMorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
