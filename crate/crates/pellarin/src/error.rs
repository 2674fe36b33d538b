use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the operations built on it.
///
/// Several variants signal violated mathematical identities rather than bad
/// input (`NonExactDivision`, `CutoffNotStabilized`, `UnexpectedHigherOrder`);
/// those must abort the computation instead of truncating silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("modulus degree does not match the extension degree")]
    DegreeMismatch,
    #[error("division is not exact")]
    NonExactDivision,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("enumeration size exceeds the configured limit")]
    TooLarge,
    #[error("series cutoff did not stabilize: guard coefficients are nonzero")]
    CutoffNotStabilized,
    #[error("linear map is not defined on enough basis images")]
    BoundTooSmall,
    #[error("polynomial is not F_q-linear")]
    NotLinear,
    #[error("argument degree is too high")]
    DegreeTooHigh,
    #[error("zero of order greater than one encountered")]
    UnexpectedHigherOrder,
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
