use thiserror::Error;

/// Errors raised by the library. Basis indices are stored 0-based and
/// displayed 1-based (`e1` is index 0).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("basis index e{} out of range for dimension {dim}", .index + 1)]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("algebra `{0}` has no declared unit")]
    NoUnit(String),

    #[error("declared unit fails the unit law against e{}", .0 + 1)]
    BadUnit(usize),

    #[error("the zero element has no inverse")]
    ZeroInverse,

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("map is not orthogonal: (psi^T psi)[{row}][{col}] differs from the identity")]
    NotOrthogonal { row: usize, col: usize },

    #[error("map is not symplectic: (psi^T W psi)[{row}][{col}] differs from W")]
    NotSymplectic { row: usize, col: usize },

    #[error("subspace is not isotropic: omega(basis {i}, basis {j}) = {value}")]
    NotIsotropic { i: usize, j: usize, value: String },

    #[error("product is not anticommutative at (e{}, e{})", .i + 1, .j + 1)]
    NotAnticommutative { i: usize, j: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("pushout data invalid: {0}")]
    Pushout(String),

    #[error("universal property check failed: {0}")]
    UniversalProperty(String),

    #[error("local rules from flats {first:?} and {second:?} disagree on (e{}, e{})", .pair.0 + 1, .pair.1 + 1)]
    CompatibilityConflict {
        first: Vec<usize>,
        second: Vec<usize>,
        pair: (usize, usize),
    },

    #[error("basis pair (e{}, e{}) is not covered by any flat", .pair.0 + 1, .pair.1 + 1)]
    CoverageGap { pair: (usize, usize) },

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),

    #[error("input outside the supported class: {0}")]
    OutOfScope(String),

    #[error("condition V_a must hold before checking V_b")]
    VaNotEstablished,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
