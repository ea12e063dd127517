use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns [`Result`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),

    #[error("zero has no discrete logarithm")]
    ZeroHasNoLog,

    #[error("no character of order {order} exists over F_{p} ({order} does not divide {p} - 1)")]
    OrderDoesNotDivide { order: u64, p: u64 },

    #[error("characters or values belong to different fields")]
    FieldMismatch,

    #[error("normalizing Jacobi sum evaluated to zero")]
    ZeroNormalizer,

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("prime {p} is not admissible: {reason}")]
    BadPrime { p: u64, reason: String },

    #[error("character sum expected to be a rational integer but is not")]
    NonIntegerResult,

    #[error("pole in the lower parameter: (c)_{index} vanishes")]
    PoleInC { index: u64 },

    #[error("denominator {den} is not invertible modulo {p}")]
    BadDenominator { den: i64, p: u64 },

    #[error("series does not converge: {0}")]
    NotConvergent(String),

    #[error("degenerate denominator: 1 + lambda + mu = 0")]
    DegenerateDenominator,

    #[error("identity {id} is not defined over F_{p}: {reason}")]
    IncompatiblePrime { id: String, p: u64, reason: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("empty prime range")]
    EmptyRange,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
