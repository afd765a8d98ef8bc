use thiserror::Error;

/// Everything that can go wrong when constructing or combining cubic
/// matrices, supermatrices, algebras, and cochains.
///
/// Identity *failures* are never errors — they are reported as nonzero
/// residuals. An `Error` always means the operation itself was ill-posed.
#[derive(Debug, Error)]
pub enum Error {
    /// Extents do not match what the operation requires (non-cubic input,
    /// incompatible product shapes, r+s not equal to the order, ...).
    #[error("shape error: {0}")]
    Shape(String),

    /// An index is outside the 1-based range of the target.
    #[error("index error: {0}")]
    Index(String),

    /// The value domain is wrong for the operation (e.g. trace of a
    /// non-square section).
    #[error("domain error: {0}")]
    Domain(String),

    /// Wrong number of arguments for an n-ary operation.
    #[error("arity error: {0}")]
    Arity(String),

    /// A graded operation received an inhomogeneous argument.
    #[error("homogeneity error: {0}")]
    Homogeneity(String),

    /// The combination of inputs is valid mathematics we deliberately do
    /// not support (e.g. coboundary of a degree >= 2 cochain over a graded
    /// algebra).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Bad run configuration (flag combinations, missing files, ...).
    #[error("config error: {0}")]
    Config(String),

    /// Malformed input data (JSON that parses but violates the format).
    #[error("input error: {0}")]
    Input(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
