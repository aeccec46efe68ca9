use thiserror::Error;

/// Every failure the library can report. Variants are grouped by the layer
/// that raises them; callers that need an exit-code style classification use
/// [`Error::is_invariant_violation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator of {value} is not a power of {prime}")]
    NotLocalized { value: String, prime: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group enumeration exceeded cap of {cap} elements ({partial} found)")]
    EnumerationCap { cap: usize, partial: usize },
    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("character table failed orthogonality: {0}")]
    Orthogonality(String),
    #[error("class function is not a virtual character: {0}")]
    NotVirtualCharacter(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("expansion does not terminate: {0}")]
    NonTerminating(String),
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degree bound too small: {0}")]
    DegreeBoundTooSmall(String),
    #[error("routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("certificate check failed: {0}")]
    CertificateFailure(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that indicate a bug or a falsified identity rather
    /// than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::Orthogonality(_)
                | Error::RouteDisagreement(_)
                | Error::CertificateFailure(_)
                | Error::Invariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
