use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge {{{0},{1}}} is already present")]
    EdgeExists(usize, usize),

    #[error("maximal clique count exceeds cap of {cap}")]
    CliqueCapExceeded { cap: usize },

    #[error("matrix is not Hermitian beyond round-off at entry ({i},{j})")]
    NotHermitian { i: usize, j: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("matrix is not partial positive (failing clique {0:?})")]
    NotPartialPositive(Vec<usize>),

    #[error("invalid witness placement: {0}")]
    InvalidPlacement(String),

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
