use thiserror::Error;

/// Errors raised by the library. Each variant names the condition that was
/// detected, never a recovery strategy.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation term `{0}` has length < 2; the ideal is not admissible")]
    NonAdmissible(String),
    #[error("relation mixes non-parallel terms: {0}")]
    InconsistentRelation(String),
    #[error("paths of length {0} do not vanish modulo the relations; giving up")]
    InfiniteDimensional(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("objects belong to different algebras")]
    MismatchedAlgebra,
    #[error("provided splitting is invalid: {0}")]
    SplittingInvalid(String),
    #[error("reconstructed ideal is not admissible within the nilpotency bound (arity bound {0} too low?)")]
    ReconstructionInfinite(usize),
    #[error("no internal grading available")]
    NoInternalGrading,
    #[error("Maurer-Cartan entry ({0},{1}) lies in the wrong block")]
    BlockMismatch(usize, usize),
    #[error("module is not Delta-filtered: no standard quotient at stage {stage}")]
    NotFiltered { stage: usize },
    #[error("not quasi-hereditary: {0}")]
    NotQuasiHereditary(String),
    #[error("{0} vertices exceed the enumeration cap {1}")]
    TooManyVertices(usize, usize),
    #[error("resolution truncation too low: {0}")]
    TruncationTooLow(String),
    #[error("derivation does not square to zero: {0}")]
    NotADifferential(String),
    #[error("counit dual is not a unit: {0}")]
    UnitFailure(String),
    #[error("invalid partial order: {0}")]
    InvalidPoset(String),
    #[error("representation does not satisfy the relations: {0}")]
    NotAModule(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
