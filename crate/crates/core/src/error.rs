use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    DegreeCap,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not a prime (or does not fit in 31 bits)")]
    NotPrime(u64),
    #[error("{0} variables requested, at most {max} supported", max = crate::polyring::MAX_VARS)]
    TooManyVariables(usize),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCount(usize, usize),
    #[error("no image given for variable `{0}`")]
    MissingAssignment(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("degree cap {cap} exceeded by an S-pair of degree {degree}")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not homogeneous in the required grading")]
    Inhomogeneous,
    #[error("elements do not form a system of parameters")]
    NotSystemOfParameters,
    #[error("{0} is a zero divisor")]
    ZeroDivisorElement(String),
    #[error("{0} is not a relation on the generators")]
    NotARelation(String),
    #[error("element is not in the ideal: {0}")]
    NotInIdeal(String),
    #[error("matrix of size {rows}x{cols} exceeds the {max}x{max} minor cap")]
    MatrixTooLarge { rows: usize, cols: usize, max: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::NotPrime(_) | Error::TooManyVariables(_) => ErrorKind::Parse,
            Error::DegreeCap { .. } => ErrorKind::DegreeCap,
            Error::Overflow(_) | Error::ExponentOverflow => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
