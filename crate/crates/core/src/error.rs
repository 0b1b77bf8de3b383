use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown type descriptor `{0}`")]
    UnknownType(String),
    #[error("invalid twist in `{0}`")]
    InvalidTwist(String),
    #[error("rank out of range in `{0}`")]
    RankOutOfRange(String),
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("elements belong to different systems")]
    MixedSystems,
    #[error("not a divisor")]
    NotADivisor,
    #[error("head of the identity braid")]
    HeadOfIdentity,
    #[error("braid is not I-reduced")]
    NotIReduced,
    #[error("conjugate of an atom of I is not an atom")]
    ConjugatesOutOfS,
    #[error("element is not periodic")]
    NotPeriodic,
    #[error("d = {0} is not admissible here")]
    NotAdmissible(u32),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("eigenvalue too close to the tolerance boundary")]
    AmbiguousEigenvalue,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
