use thiserror::Error;

/// Errors shared by the solvers, the oracles, the instance generators and the
/// text-format parser.
#[derive(Debug, Error)]
pub enum AveError {
    /// A pivot column of a plumbing linear solve is numerically zero.
    #[error("matrix is numerically singular")]
    SingularMatrix,

    /// The signed elimination hit a pivot `|1 - sigma * s_kk|` below the scale
    /// guard. Cannot happen for `inf_norm(S) < 1`; signals an input outside
    /// the guaranteed classes.
    #[error("zero pivot at elimination step {step}")]
    ZeroPivot { step: usize },

    /// An exponential-cost oracle was asked for a dimension above its cap.
    #[error("dimension {n} exceeds the oracle limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },

    /// Unknown counterexample-catalog id.
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    /// An argument is outside its documented range.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Malformed matrix/instance text.
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, AveError>;
