use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("not a numerical semigroup: generators have gcd {0}")]
    NotNumericalSemigroup(i64),

    #[error("frobenius number {0} exceeds the supported table size")]
    TooLarge(i64),

    /// The operation needs a singular ring; H = N was passed.
    #[error("regular ring (H = N): {0} is undefined")]
    RegularRing(&'static str),

    #[error("ideals live over different semigroups")]
    BaseMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("route disagreement in {check}: {detail}")]
    RouteDisagreement { check: &'static str, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
