use thiserror::Error;

/// Errors surfaced by enumeration and homotopy computations.
#[derive(Debug, Error)]
pub enum Error {
    /// Doubling the coefficient cap produced new solutions; results at the
    /// requested cap are partial. Callers must raise the cap.
    #[error("unsaturated enumeration: cap {cap} found {found} solutions, cap {doubled_cap} found {found_doubled} (degree {degree} of {complex})")]
    UnsaturatedEnumeration {
        complex: String,
        degree: usize,
        cap: u32,
        found: usize,
        found_doubled: usize,
        doubled_cap: u32,
    },

    /// A complex failed validation where a valid one is required.
    #[error("invalid complex {name}: {}", violations.join("; "))]
    InvalidComplex { name: String, violations: Vec<String> },

    /// A map of complexes failed validation.
    #[error("invalid map: {}", violations.join("; "))]
    InvalidMap { violations: Vec<String> },

    /// An oriented basepoint violates its boundary compatibilities.
    #[error("invalid basepoint: {0}")]
    InvalidBasepoint(String),

    /// A positive 1-chain does not decompose as a composable path.
    #[error("non-composable chain: no generator of the chain starts at {at}")]
    NonComposable { at: String },

    /// A fiber computation was asked about something that is not an object.
    #[error("invalid object: {0}")]
    InvalidObject(String),

    /// A functor datum on a skeleton violates face relations.
    #[error("incompatible functor datum: {0}")]
    IncompatibleF(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
