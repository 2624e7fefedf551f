use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("relations do not define an admissible ideal: {0}")]
    NonAdmissible(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid module map: {0}")]
    InvalidMap(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("map is not an epimorphism")]
    NotEpi,
    #[error("map is not a monomorphism")]
    NotMono,
    #[error("lifting failed: {0}")]
    LiftFailed(String),
    #[error("special preenvelope did not converge within {iterations} universal extensions")]
    PreenvelopeDidNotConverge { iterations: usize },
    #[error("replacement failed at stage {stage}: {reason}")]
    ReplacementFailed { stage: usize, reason: String },
    #[error("hypothesis not certified: {0}")]
    HypothesisNotCertified(String),
    #[error("invalid cotorsion pair: {0}")]
    InvalidPair(String),
    #[error("missing certificate: {0}")]
    MissingCertificate(String),
    #[error("bad certificate: {0}")]
    BadCertificate(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Errors that signal a bug or a broken mathematical invariant rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
