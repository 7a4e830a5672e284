use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse element {input:?}: {reason}")]
    ParseElement { input: String, reason: String },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    ParsePoly { input: String, reason: String },
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("derivation is not inner; no zero-derivation presentation exists")]
    NotInner,
    #[error("points are not P-independent")]
    DependentPoints,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("P-bases generate different closures")]
    ClosureMismatch,
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension k = {k} out of range 0..={n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("block {block}: basis vectors are not right linearly independent over the centralizer")]
    DependentBetas { block: usize },
    #[error("block {block}: zero basis vector")]
    ZeroBeta { block: usize },
    #[error("block {block}: length {len} exceeds centralizer degree {max}")]
    BlockTooLong { block: usize, len: usize, max: usize },
    #[error("representatives {0} and {1} are conjugate")]
    ConjugateReps(usize, usize),
    #[error("code needs at least one non-empty block")]
    EmptyCode,
    #[error("search budget exceeded: {needed} messages > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("invalid code spec: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
