//! Operation counting.
//!
//! Only big-integer products are counted as multiplications. Scaling by the
//! small constants `±2`, `±4` and halving are shifts and are not tallied;
//! applying such a constant counts as one addition or subtraction.

use std::fmt;
use std::ops::AddAssign;

use crate::error::{Error, Result};
use crate::sequences::{Algorithm, Kind};
use crate::term::Term;
use crate::Index;

/// Tallies of the work a kernel performed. Owned by a single invocation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounts {
    pub squarings: u64,
    pub general_mults: u64,
    pub add_subs: u64,
    pub recursive_calls: u64,
    pub memo_hits: u64,
}

impl OpCounts {
    pub fn new() -> Self {
        Self::default()
    }

    /// Squarings plus general multiplications.
    pub fn total_mults(&self) -> u64 {
        self.squarings + self.general_mults
    }

    /// Calls that were not answered from a memo table.
    pub fn fresh_evaluations(&self) -> u64 {
        self.recursive_calls - self.memo_hits
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.squarings += rhs.squarings;
        self.general_mults += rhs.general_mults;
        self.add_subs += rhs.add_subs;
        self.recursive_calls += rhs.recursive_calls;
        self.memo_hits += rhs.memo_hits;
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "squarings={} mults={} adds={} calls={} memo_hits={}",
            self.squarings, self.general_mults, self.add_subs, self.recursive_calls, self.memo_hits
        )
    }
}

/// `x * x`, tallied as a squaring.
pub fn counted_square<T: Term>(x: &T, counts: &mut OpCounts) -> T {
    counts.squarings += 1;
    x.square()
}

/// `x * y`, tallied as a general multiplication even when `x == y`.
pub fn counted_mul<T: Term>(x: &T, y: &T, counts: &mut OpCounts) -> T {
    counts.general_mults += 1;
    x.mul(y)
}

pub(crate) fn counted_add<T: Term>(x: T, y: &T, counts: &mut OpCounts) -> T {
    counts.add_subs += 1;
    x.add(y)
}

pub(crate) fn counted_sub<T: Term>(x: T, y: &T, counts: &mut OpCounts) -> T {
    counts.add_subs += 1;
    x.sub(y)
}

pub(crate) fn counted_offset<T: Term>(x: T, delta: i32, counts: &mut OpCounts) -> T {
    counts.add_subs += 1;
    x.offset(delta)
}

/// Number of calls the unmemoized Ripple recursion makes for `n`.
///
/// Evaluates `f(2) = f(3) = f(4) = 1`, `f(n) = 1 + f(n/2)` for even `n` and
/// `f(n) = 1 + f(floor(n/2)) + f(ceil(n/2))` for odd `n` without touching any
/// sequence values. Distinct arguments at each recursion depth are at most
/// two adjacent integers, so this walks those pairs level by level.
pub fn ripple_call_count(n: Index) -> Result<u64> {
    if n < 2 {
        return Err(Error::too_small("ripple_call_count", n, 2));
    }
    // (index, multiplicity) pairs at the current depth
    let mut level: Vec<(Index, u64)> = vec![(n, 1)];
    let mut calls = 0u64;
    while !level.is_empty() {
        let mut next: Vec<(Index, u64)> = Vec::with_capacity(2);
        for &(k, mult) in &level {
            calls += mult;
            if k <= 4 {
                continue;
            }
            let mut push = |idx: Index| match next.iter_mut().find(|(i, _)| *i == idx) {
                Some((_, m)) => *m += mult,
                None => next.push((idx, mult)),
            };
            push(k / 2);
            if k % 2 == 1 {
                push(k / 2 + 1);
            }
        }
        level = next;
    }
    Ok(calls)
}

/// One timed benchmark observation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: Index,
    pub kind: Kind,
    pub algo: Algorithm,
    pub rep: u32,
    pub elapsed_ns: u64,
    pub ops: OpCounts,
    pub result_bits: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Natural;

    fn naive_calls(n: Index) -> u64 {
        match n {
            2..=4 => 1,
            _ if n.is_multiple_of(2) => 1 + naive_calls(n / 2),
            _ => 1 + naive_calls(n / 2) + naive_calls(n / 2 + 1),
        }
    }

    #[test]
    fn counted_square_tallies() {
        let mut c = OpCounts::new();
        assert_eq!(
            counted_square(&Natural::from(3u32), &mut c),
            Natural::from(9u32)
        );
        assert_eq!(
            counted_square(&Natural::from(0u32), &mut c),
            Natural::from(0u32)
        );
        assert_eq!(
            counted_square(&Natural::from(11u32), &mut c),
            Natural::from(121u32)
        );
        assert_eq!(c.squarings, 3);
        assert_eq!(c.general_mults, 0);
    }

    #[test]
    fn counted_mul_tallies() {
        let mut c = OpCounts::new();
        let x = Natural::from(987_654_321u64);
        assert_eq!(
            counted_mul(&Natural::from(3u32), &Natural::from(4u32), &mut c),
            Natural::from(12u32)
        );
        assert_eq!(counted_mul(&x, &Natural::from(1u32), &mut c), x);
        assert_eq!(
            counted_mul(&Natural::from(55u32), &Natural::from(123u32), &mut c),
            Natural::from(6765u32)
        );
        assert_eq!(counted_mul(&x, &x, &mut c), x.clone() * &x);
        assert_eq!(c.general_mults, 4);
        assert_eq!(c.squarings, 0);
    }

    #[test]
    fn ripple_call_count_examples() {
        assert_eq!(ripple_call_count(7).unwrap(), 3);
        assert_eq!(ripple_call_count(15).unwrap(), 6);
        assert_eq!(ripple_call_count(2).unwrap(), 1);
        assert_eq!(ripple_call_count(8).unwrap(), 2);
        assert!(matches!(
            ripple_call_count(1),
            Err(Error::IndexTooSmall { .. })
        ));
    }

    #[test]
    fn ripple_call_count_triangular() {
        for k in 2..=20u32 {
            let n = (1u64 << k) - 1;
            assert_eq!(
                ripple_call_count(n).unwrap(),
                (k as u64) * (k as u64 - 1) / 2,
                "k={k}"
            );
        }
    }

    #[test]
    fn ripple_call_count_matches_tree_walk() {
        for n in 2..5000 {
            assert_eq!(ripple_call_count(n).unwrap(), naive_calls(n), "n={n}");
        }
    }

    #[test]
    fn display_is_key_value() {
        let c = OpCounts {
            squarings: 2,
            general_mults: 0,
            add_subs: 3,
            recursive_calls: 0,
            memo_hits: 0,
        };
        assert_eq!(
            c.to_string(),
            "squarings=2 mults=0 adds=3 calls=0 memo_hits=0"
        );
    }
}
