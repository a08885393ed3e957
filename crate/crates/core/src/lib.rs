//! # lucas-core
//!
//! Individual Lucas and Fibonacci numbers in `O(log n)` big-integer
//! operations.
//!
//! Two Lucas kernels are provided, both built only from squarings and the
//! doubling pair `L(2k) = L(k)^2 - 2(-1)^k`, `L(2k+2) = L(k+1)^2 + 2(-1)^k`:
//!
//! * **Middle** walks the bits of `n` from the top, carrying three adjacent
//!   values `(L(2m), L(2m+1), L(2m+2))`.
//! * **Ripple** is the recursive form; it is offered both as written
//!   (re-evaluating shared subcalls) and memoized.
//!
//! Fibonacci numbers are obtained from Lucas numbers exactly through
//! `5 F(n)^2 = L(n)^2 - 4(-1)^n`. A linear oracle and a classic
//! fast-doubling Fibonacci baseline are included for cross-checking and
//! benchmarking, and every kernel reports its work through [`OpCounts`].
//!
//! ```
//! use lucas_core::{lucas, fibonacci, Algorithm};
//!
//! assert_eq!(lucas(10, Algorithm::Middle).unwrap().to_string(), "123");
//! assert_eq!(fibonacci(10, Algorithm::Ripple).unwrap().to_string(), "55");
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod metrics;
pub mod sequences;
pub mod term;

pub use bench::{run_bench, write_csv, BenchPlan, IndexSeries};
pub use error::{Error, Result};
pub use metrics::{counted_mul, counted_square, ripple_call_count, BenchRecord, OpCounts};
pub use sequences::{
    compute, fib_fast_doubling, fib_from_lucas, fib_linear, fibonacci, fibonacci_counted, isqrt,
    lucas, lucas_counted, lucas_from_fib, lucas_linear, lucas_middle, lucas_ripple,
    lucas_ripple_memo, mark_odd_bits, Algorithm, Kind, LucasTriple, MarkOddPath, Sign,
};
pub use term::{Mersenne61, Natural, Term};

/// Sequence position.
pub type Index = u64;
