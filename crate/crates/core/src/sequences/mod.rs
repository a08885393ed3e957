//! Lucas and Fibonacci kernels and the public dispatch over them.

mod convert;
mod doubling;
mod linear;
mod middle;
mod ripple;

use std::fmt;
use std::str::FromStr;

pub use convert::{fib_from_lucas, isqrt};
pub use doubling::{fib_fast_doubling, lucas_from_fib};
pub use linear::{fib_linear, lucas_linear};
pub use middle::{
    lucas_middle, lucas_middle_checkpoints, lucas_middle_with_seed, mark_odd_bits, LucasTriple,
    MarkOddPath, SEED as MIDDLE_SEED,
};
pub use ripple::{lucas_ripple, lucas_ripple_memo};

use crate::error::{Error, Result};
use crate::metrics::OpCounts;
use crate::term::{Natural, Term};
use crate::Index;

/// `(-1)^k` for a half-index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_parity(k: Index) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn times(self, v: i32) -> i32 {
        match self {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

/// Which kernel computes a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Middle,
    Ripple,
    RippleMemo,
    Linear,
    /// Fast-doubling Fibonacci; Lucas values via `F(n-1) + F(n+1)`.
    ViaFib,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Middle,
        Algorithm::Ripple,
        Algorithm::RippleMemo,
        Algorithm::Linear,
        Algorithm::ViaFib,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Middle => "middle",
            Algorithm::Ripple => "ripple",
            Algorithm::RippleMemo => "ripple-memo",
            Algorithm::Linear => "linear",
            Algorithm::ViaFib => "via-fib",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "middle" => Algorithm::Middle,
            "ripple" => Algorithm::Ripple,
            "ripple-memo" | "ripple_memo" => Algorithm::RippleMemo,
            "linear" => Algorithm::Linear,
            "via-fib" | "via_fib" | "fib-doubling" | "fib_doubling" | "doubling" => {
                Algorithm::ViaFib
            }
            other => return Err(Error::UnknownAlgorithm(other.to_string())),
        })
    }
}

/// Which sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Lucas,
    Fib,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lucas => "lucas",
            Kind::Fib => "fib",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lucas" => Ok(Kind::Lucas),
            "fib" | "fibonacci" => Ok(Kind::Fib),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// `L(n)` in any [`Term`] domain. `n = 0, 1` come from the base table; larger
/// indices go to `algo`.
pub fn lucas_in<T: Term>(n: Index, algo: Algorithm, counts: &mut OpCounts) -> Result<T> {
    match (n, algo) {
        (_, Algorithm::Linear) => Ok(lucas_linear(n)),
        (0, _) => Ok(T::from_u32(2)),
        (1, _) => Ok(T::from_u32(1)),
        (_, Algorithm::Middle) => lucas_middle(n, counts),
        (_, Algorithm::Ripple) => lucas_ripple(n, counts),
        (_, Algorithm::RippleMemo) => lucas_ripple_memo(n, counts),
        (_, Algorithm::ViaFib) => lucas_from_fib(n, counts),
    }
}

pub fn lucas_counted(n: Index, algo: Algorithm, counts: &mut OpCounts) -> Result<Natural> {
    lucas_in(n, algo, counts)
}

/// `L(n)` for any `n >= 0`.
pub fn lucas(n: Index, algo: Algorithm) -> Result<Natural> {
    lucas_counted(n, algo, &mut OpCounts::new())
}

/// `F(n)`. The Lucas kernels go through [`fib_from_lucas`]; `Linear` and
/// `ViaFib` compute Fibonacci values directly.
pub fn fibonacci_counted(n: Index, algo: Algorithm, counts: &mut OpCounts) -> Result<Natural> {
    match algo {
        Algorithm::Linear => Ok(fib_linear(n)),
        Algorithm::ViaFib => Ok(fib_fast_doubling(n, counts).0),
        _ => fib_from_lucas(n, &lucas_in(n, algo, counts)?),
    }
}

pub fn fibonacci(n: Index, algo: Algorithm) -> Result<Natural> {
    fibonacci_counted(n, algo, &mut OpCounts::new())
}

/// Dispatches on [`Kind`].
pub fn compute(kind: Kind, n: Index, algo: Algorithm, counts: &mut OpCounts) -> Result<Natural> {
    match kind {
        Kind::Lucas => lucas_counted(n, algo, counts),
        Kind::Fib => fibonacci_counted(n, algo, counts),
    }
}
