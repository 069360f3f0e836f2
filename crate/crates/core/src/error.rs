use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chains are not nested: {0}")]
    NotNested(String),
    #[error("empty quiver")]
    EmptyQuiver,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("quiver is not Dynkin: {0}")]
    NotDynkin(String),
    #[error("wrong quiver type: {0}")]
    WrongType(String),
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(String),
    #[error("not a positive root: {0}")]
    NotARoot(String),
    #[error("zero representation")]
    ZeroRepresentation,
    #[error("representation is decomposable")]
    Decomposable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
