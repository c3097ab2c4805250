//! Error taxonomy shared by the whole crate.
//!
//! The four variants mirror the CLI exit-code contract: `Parse` and `Domain`
//! are bad input (exit 2), `Resource` is a blown work cap (exit 3), and
//! `Integrity`/`OrderTooLow` are mathematical failures (exit 1). `Integrity`
//! is reserved for conditions that would falsify a proved identity; it must
//! never fire on correct code.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input text that does not parse as a polynomial.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition violation: zero polynomial, non-monic input to a
    /// monic-only operation, degree out of range, and so on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured work bound was exceeded (degree cap, precision cap,
    /// coefficient-size budget). Reported, never silently truncated.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An exact identity that is a theorem failed to hold. Indicates a bug
    /// in this crate, not in the caller.
    #[error("internal consistency failure: {0}")]
    Integrity(String),

    /// Linear-recurrence reconstruction ran out of terms before the held-out
    /// verification margin was satisfied.
    #[error("recurrence order too low: rerun with at least {needed} terms")]
    OrderTooLow { needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
