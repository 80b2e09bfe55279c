use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("scalar field mismatch")]
    FieldMismatch,

    #[error("characteristic {0} is not a prime below 2^31")]
    BadCharacteristic(u64),

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("multiplication J/J^2 x J/J^2 -> J^2 has rank {rank}, expected a = {a}")]
    SurjectivityViolation { rank: usize, a: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("module has Loewy length 3, operation needs Loewy length at most 2")]
    LoewyTooLong,

    #[error("operation needs a non-zero module")]
    ZeroModule,

    #[error("modules or representations live over different algebras")]
    AlgebraMismatch,

    #[error("intermediate module of dimension {dim} exceeds the cap {cap}")]
    ResourceCap { dim: usize, cap: usize },

    #[error("wrong Hilbert type: {0}")]
    WrongHilbertType(String),

    #[error("algebra is not self-injective")]
    NotSelfInjective,

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("format error: {0}")]
    Format(String),
}
