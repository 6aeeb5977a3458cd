use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate lattice")]
    Degenerate,
    #[error("asymmetric at ({0},{1})/({1},{0})")]
    Asymmetric(usize, usize),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration requires positive definite")]
    NotPositiveDefinite,
    #[error("out of supported range: {0}")]
    OutOfRange(String),
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not in Veronese frame")]
    NotVeroneseFrame,
    #[error("no Veronese frame")]
    NoVeroneseFrame,
    #[error("outside counting hypothesis: d = {0}")]
    OutsideCountingHypothesis(i64),
    #[error("invalid discriminant: {0}")]
    InvalidDiscriminant(String),
    #[error("C_{{M_tau}} empty: norm-2 vector {0:?}")]
    Norm2Vector(Vec<i64>),
    #[error("discriminant action inconsistent")]
    DiscActionInconsistent,
    #[error("involution check failed: {0}")]
    InvolutionMismatch(String),
    #[error("{clause}: {detail}")]
    Clause { clause: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
