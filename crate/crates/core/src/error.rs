use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Location-annotated failure from one of the text grammars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("a tower needs at least one stage")]
    EmptyTower,

    #[error("fiber dimension n_{stage} must be positive")]
    ZeroFiberDim { stage: usize },

    #[error("block a_({i},{j}) has length {found}, expected n_{i} = {expected}")]
    DimensionMismatch {
        i: usize,
        j: usize,
        expected: usize,
        found: usize,
    },

    #[error("stage {i} has {found} coefficient blocks, expected {expected}")]
    BlockCount {
        i: usize,
        expected: usize,
        found: usize,
    },

    #[error("coefficient block ({i},{j}) is out of range for a tower of height {m}")]
    BlockOutOfRange { i: usize, j: usize, m: usize },

    #[error("coefficient block ({i},{j}) given more than once")]
    DuplicateBlock { i: usize, j: usize },

    #[error("coefficient block ({i},{j}) is missing")]
    MissingBlock { i: usize, j: usize },

    #[error("a two-stage spec needs n1 >= 1 and at least one exponent")]
    EmptyTwoStage,

    #[error("expected a two-stage tower, found height {0}")]
    NotTwoStage(usize),

    #[error("spec {0} is not normalized (all exponents must be nonnegative)")]
    NotNormalized(String),

    #[error("spec {0} is not Fano")]
    NotFano(String),

    #[error("elementary symmetric index {r} out of range 1..={len}")]
    SymmetricIndex { r: usize, len: usize },

    #[error("stage index {j} out of range 1..={m}")]
    StageIndex { j: usize, m: usize },

    #[error("cohomological degree {degree} must be even and within 0..={top}")]
    CohomologicalDegree { degree: usize, top: usize },

    #[error("dimension {0} is below the smallest two-stage dimension 2")]
    Dimension(usize),

    #[error("polynomial uses x{index} but the ring has {nvars} generators")]
    VariableCount { index: usize, nvars: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
