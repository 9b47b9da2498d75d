use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings, a field is invalid, or an argument
    /// is out of its documented range.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A graded object was built from a polynomial whose terms have two
    /// different weighted degrees.
    #[error("inhomogeneous input: terms of degree {0} and {1}")]
    Inhomogeneous(i64, i64),

    /// A Gröbner computation needed an S-pair above the configured degree cap.
    #[error("degree cap {cap} exceeded (needed degree {needed}); raise EXTSCOPE_DEGREE_CAP")]
    DegreeCapExceeded { cap: u32, needed: u32 },

    /// A resolution was truncated before the homological position a caller
    /// asked for.
    #[error("resolution truncated at step {available}; computing this needs up_to >= {required}")]
    Truncated { available: usize, required: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal consistency check failed (d∘d ≠ 0, image not in kernel,
    /// two independent routes disagree).
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
