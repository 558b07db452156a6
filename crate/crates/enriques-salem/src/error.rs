use thiserror::Error;

/// Errors surfaced by the lattice, involution and search layers.
///
/// Dimension mismatches between matrices or vectors are programming errors
/// and panic instead; the variants here are all data-dependent.
#[derive(Debug, Error)]
pub enum Error {
    /// The Gram matrix of a linear system has determinant zero.
    #[error("gram matrix is singular")]
    SingularGram,

    /// A polynomial handed to `spectral_radius` is not a Salem polynomial.
    #[error("not a Salem polynomial: {0}")]
    NotSalem(String),

    /// A basis index outside `1..=10`, or an invalid index pair.
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// An unsupported `(graph, n)` combination for a fiber symmetry action.
    #[error("invalid component graph: {0}")]
    InvalidSigma(String),

    /// Nodal class data that violates its preconditions (wrong orthogonality,
    /// degenerate span, or a non-integral resulting action).
    #[error("inconsistent nodal data: {0}")]
    InvalidNodalData(String),

    /// A word letter outside the generator range.
    #[error("word letter {letter} out of range 1..={count}")]
    LetterOutOfRange { letter: usize, count: usize },

    /// A malformed argument reaching the library from the CLI layer.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
