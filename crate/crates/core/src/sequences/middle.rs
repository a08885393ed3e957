//! The iterative Middle algorithm.
//!
//! The loop state is three consecutive Lucas numbers
//! `(L(2m), L(2m+1), L(2m+2))`, where `m` is the value of the leading bits of
//! `n` consumed so far. Each step appends one bit `b` to `m`: when `b = 1` the
//! window first slides up by one, and then both ends are doubled with the
//! identity pair
//!
//! ```text
//! L(2k)   = L(k)^2   - 2(-1)^k
//! L(2k+2) = L(k+1)^2 + 2(-1)^k
//! ```
//!
//! the middle value being recovered as their difference. The last bit of `n`
//! only selects which of the final `L(2m)`, `L(2m+1)` is the answer.

use crate::error::{Error, Result};
use crate::metrics::{counted_offset, counted_square, counted_sub, OpCounts};
use crate::sequences::Sign;
use crate::term::Term;
use crate::Index;

/// The bits of `n` below its leading one, most significant first.
///
/// Indexed `1..=len()` to mirror the loop that consumes it: `bit(len())` is
/// the least significant bit of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkOddPath {
    bits: Vec<bool>,
}

impl MarkOddPath {
    /// Number of stored flags, `floor(lg n)`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Flag `j`, `1 <= j <= len()`.
    pub fn bit(&self, j: usize) -> bool {
        self.bits[j - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Rebuilds `n` by feeding the flags back behind an implicit leading one.
    pub fn to_index(&self) -> Result<Index> {
        self.bits.iter().try_fold(1 as Index, |m, &b| {
            m.checked_mul(2)
                .and_then(|m| m.checked_add(b as Index))
                .ok_or(Error::IndexOverflow {
                    what: "bit-path prefix",
                })
        })
    }
}

/// Records the parity of `n`, `n/2`, `n/4`, ... into slots `N, N-1, ..., 1`
/// where `N = floor(lg n)`. The final quotient, the leading one, is dropped.
pub fn mark_odd_bits(n: Index) -> Result<MarkOddPath> {
    if n < 2 {
        return Err(Error::too_small("mark_odd_bits", n, 2));
    }
    let len = (Index::BITS - 1 - n.leading_zeros()) as usize;
    let mut bits = vec![false; len];
    let mut i = n;
    for j in (1..=len).rev() {
        bits[j - 1] = i % 2 == 1;
        i /= 2;
    }
    debug_assert_eq!(i, 1);
    Ok(MarkOddPath { bits })
}

/// Three consecutive Lucas numbers `(L(2m), L(2m+1), L(2m+2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasTriple<T> {
    pub low: T,
    pub mid: T,
    pub high: T,
}

impl<T: Term> LucasTriple<T> {
    fn seed(seed: [u32; 3]) -> Self {
        LucasTriple {
            low: T::from_u32(seed[0]),
            mid: T::from_u32(seed[1]),
            high: T::from_u32(seed[2]),
        }
    }
}

/// `(L(2), L(3), L(4))`, the triple for the leading-bit prefix `m = 1`.
#[cfg(not(feature = "fault-inject"))]
pub const SEED: [u32; 3] = [3, 4, 7];

#[cfg(feature = "fault-inject")]
pub const SEED: [u32; 3] = [3, 4, 8];

/// `L(n)` for `n >= 2`.
///
/// Each loop step costs exactly two squarings and three additions or
/// subtractions; there are `floor(lg n) - 1` steps.
pub fn lucas_middle<T: Term>(n: Index, counts: &mut OpCounts) -> Result<T> {
    middle_seeded(n, SEED, counts, |_, _| {})
}

/// Every intermediate state of Middle on `n`, paired with the prefix `m` it
/// represents. The first entry is the seed state for `m = 1`.
pub fn lucas_middle_checkpoints<T: Term>(n: Index) -> Result<Vec<(Index, LucasTriple<T>)>> {
    let mut out = Vec::new();
    middle_seeded(n, SEED, &mut OpCounts::new(), |m, t: &LucasTriple<T>| {
        out.push((m, t.clone()))
    })?;
    Ok(out)
}

/// Middle started from an arbitrary triple. Exposed for fault-injection
/// tests of the verification tooling.
#[doc(hidden)]
pub fn lucas_middle_with_seed<T: Term>(
    n: Index,
    seed: [u32; 3],
    counts: &mut OpCounts,
) -> Result<T> {
    middle_seeded(n, seed, counts, |_, _| {})
}

fn middle_seeded<T: Term>(
    n: Index,
    seed: [u32; 3],
    counts: &mut OpCounts,
    mut checkpoint: impl FnMut(Index, &LucasTriple<T>),
) -> Result<T> {
    if n < 2 {
        return Err(Error::too_small("lucas_middle", n, 2));
    }
    let path = mark_odd_bits(n)?;
    let steps = path.len();
    let mut t = LucasTriple::<T>::seed(seed);
    let mut prefix: Index = 1;
    checkpoint(prefix, &t);

    for j in 1..steps {
        let odd = path.bit(j);
        let sign = if odd {
            // slide up: low <- mid, mid <- high; high is rewritten below
            std::mem::swap(&mut t.low, &mut t.mid);
            std::mem::swap(&mut t.mid, &mut t.high);
            Sign::Minus
        } else {
            Sign::Plus
        };
        t.low = counted_offset(counted_square(&t.low, counts), sign.times(-2), counts);
        t.high = counted_offset(counted_square(&t.mid, counts), sign.times(2), counts);
        t.mid = counted_sub(t.high.clone(), &t.low, counts);

        prefix = prefix
            .checked_mul(2)
            .and_then(|m| m.checked_add(odd as Index))
            .ok_or(Error::IndexOverflow {
                what: "Middle prefix",
            })?;
        checkpoint(prefix, &t);
    }

    Ok(if path.bit(steps) { t.mid } else { t.low })
}
