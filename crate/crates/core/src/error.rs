use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidRank {
        family: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("unknown root system family `{0}`")]
    UnknownFamily(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("pole of {value} at k = {k}, kp = {kp}")]
    Pole { value: String, k: String, kp: String },
    #[error("element is not divisible by (1 - e^-{root})")]
    NotDivisible { root: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resonance: none of {tries} directions separates the spectral weights below mu = {mu}")]
    Resonance { mu: String, tries: usize },
    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
