use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate or coefficient")]
    NonFinite,

    #[error("curve degrees differ: c has degree {c}, d has degree {d}")]
    DegreeMismatch { c: usize, d: usize },

    #[error("expected {expected} blossom arguments, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("degenerate parameter interval [{a}, {b}]")]
    DegenerateInterval { a: f64, b: f64 },

    #[error("requested degree {requested} is below the polynomial degree {actual}")]
    DegreeTooLow { requested: usize, actual: usize },

    #[error("pole at u = {at}")]
    Pole { at: f64 },

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("certificate has Lambda identically equal to M (cylinder)")]
    CylinderCertificate,

    #[error("patch has no developability certificate")]
    MissingCertificate,

    #[error("certificate is not constant")]
    NonConstantCertificate,

    #[error("patch is not developable (residual {residual:e})")]
    NotDevelopable { residual: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
