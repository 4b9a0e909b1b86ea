use alloc::string::String;
use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed primitive, mesh, schedule or generator parameters.
    Validation(String),
    /// An operation that needs a nonempty set was given an empty one.
    EmptyInput,
    /// Argument outside the operation's domain (e.g. stage `k = 0`).
    Domain(String),
    /// Exact mode was requested for data that is not dyadic.
    Mode(String),
    /// Requested depth exceeds the configured cap.
    Resource { requested: u32, cap: u32 },
    /// A fit needs at least two distinct scales.
    InsufficientData { distinct: usize },
    /// The ratio iteration did not meet its stopping rule within `k_max`.
    NonConvergence { k: u32, last: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::EmptyInput => f.write_str("empty input set"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Mode(msg) => write!(f, "mode error: {msg}"),
            Error::Resource { requested, cap } => {
                write!(f, "depth {requested} exceeds the depth cap {cap}")
            }
            Error::InsufficientData { distinct } => {
                write!(f, "insufficient data: {distinct} distinct delta value(s), need at least 2")
            }
            Error::NonConvergence { k, last } => {
                write!(f, "no convergence up to k = {k} (last value {last})")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
