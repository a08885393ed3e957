use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::Index;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op} requires n >= {min}, got n = {n}")]
    IndexTooSmall {
        op: &'static str,
        n: Index,
        min: Index,
    },

    #[error("index arithmetic overflowed machine width while computing {what}")]
    IndexOverflow { what: &'static str },

    /// `L(n)^2 - 4(-1)^n` was not five times a perfect square.
    #[error("value passed as L({n}) is not a Lucas number")]
    NotLucas { n: Index },

    #[error(
        "unknown algorithm `{0}` (expected one of: middle, ripple, ripple-memo, linear, via-fib)"
    )]
    UnknownAlgorithm(String),

    #[error("unknown sequence kind `{0}` (expected lucas or fib)")]
    UnknownKind(String),

    #[error("invalid benchmark plan: {0}")]
    InvalidPlan(String),

    #[error("{kind}({n}) mismatch: {first} and {second} disagree")]
    Mismatch {
        n: Index,
        kind: &'static str,
        first: &'static str,
        second: &'static str,
    },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn too_small(op: &'static str, n: Index, min: Index) -> Self {
        Error::IndexTooSmall { op, n, min }
    }
}
