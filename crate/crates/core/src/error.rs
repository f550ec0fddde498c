//! Crate-wide error type.

use std::fmt;

/// Errors reported by the necklace library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument outside an operation's mathematical domain
    /// (for example `totient(0)` or classifying the empty word).
    Domain(String),
    /// An enumeration parameter outside the supported range
    /// (for example an exhaustive scan beyond 24 beads).
    Range(String),
    /// A malformed textual word.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
