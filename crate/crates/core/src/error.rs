use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed input: {0}")]
    Input(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid rational function: {0}")]
    Function(String),
    #[error("invalid tree: {0}")]
    Tree(String),

    #[error("negative power of -inf")]
    NegativePowerOfZero,
    #[error("fewer than two active terms, the corner locus is empty")]
    EmptyCurve,
    #[error("curve is not balanced at vertex {0}")]
    Unbalanced(usize),
    #[error("edge {0} has infinite length")]
    InfiniteEdge(usize),
    #[error("divisor has degree {0}, expected 0")]
    NonzeroDegree(i64),
    #[error("edge {0} is not a leaf edge")]
    NotLeaf(usize),
    #[error("no generic translate found after {0} draws")]
    NoGenericTranslate(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error comes from malformed or invalid input data rather
    /// than from a well-formed request the mathematics rejects.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::BadRational(_)
                | Error::DimensionMismatch { .. }
                | Error::Input(_)
                | Error::Graph(_)
                | Error::Function(_)
                | Error::Tree(_)
        )
    }
}
