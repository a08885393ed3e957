//! The recursive Ripple algorithm.
//!
//! With `k = floor(n/2)` and `p = (-1)^k`:
//!
//! ```text
//! n even:  L(n) = L(k)^2 - 2p
//! n odd:   L(n) = L(k+1)^2 - L(k)^2 + 4p
//! ```
//!
//! the odd case being `L(2k+2) - L(2k)`. Written plainly, odd indices recurse
//! twice and shared subproblems are re-evaluated, so the call count grows as
//! `Theta(lg^2 n)` (`k(k-1)/2` calls at `n = 2^k - 1`). The memoized variant
//! evaluates at most two adjacent indices per depth.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::metrics::{counted_offset, counted_square, counted_sub, OpCounts};
use crate::sequences::Sign;
use crate::term::Term;
use crate::Index;

fn base<T: Term>(n: Index) -> Option<T> {
    match n {
        2 => Some(T::from_u32(3)),
        3 => Some(T::from_u32(4)),
        4 => Some(T::from_u32(7)),
        _ => None,
    }
}

/// Combines the half-index results. `upper` is `L(k+1)` and is only present
/// for odd `n`.
fn combine<T: Term>(n: Index, lower: &T, upper: Option<&T>, counts: &mut OpCounts) -> T {
    let p = Sign::of_parity(n / 2);
    let lower_sq = counted_square(lower, counts);
    match upper {
        None => counted_offset(lower_sq, p.times(-2), counts),
        Some(upper) => {
            let diff = counted_sub(counted_square(upper, counts), &lower_sq, counts);
            counted_offset(diff, p.times(4), counts)
        }
    }
}

/// `L(n)` for `n >= 2`, recursing exactly as written: no subcall is shared.
pub fn lucas_ripple<T: Term>(n: Index, counts: &mut OpCounts) -> Result<T> {
    if n < 2 {
        return Err(Error::too_small("lucas_ripple", n, 2));
    }
    Ok(ripple(n, counts))
}

fn ripple<T: Term>(n: Index, counts: &mut OpCounts) -> T {
    counts.recursive_calls += 1;
    if let Some(v) = base(n) {
        return v;
    }
    let lower = ripple(n / 2, counts);
    if n.is_multiple_of(2) {
        combine(n, &lower, None, counts)
    } else {
        let upper = ripple(n / 2 + 1, counts);
        combine(n, &lower, Some(&upper), counts)
    }
}

/// `L(n)` for `n >= 2` with repeated subcalls answered from a per-call memo.
///
/// `recursive_calls` counts every call, `memo_hits` the ones that did not
/// evaluate anything.
pub fn lucas_ripple_memo<T: Term>(n: Index, counts: &mut OpCounts) -> Result<T> {
    if n < 2 {
        return Err(Error::too_small("lucas_ripple_memo", n, 2));
    }
    let mut memo = HashMap::new();
    Ok(ripple_memo(n, &mut memo, counts))
}

fn ripple_memo<T: Term>(n: Index, memo: &mut HashMap<Index, T>, counts: &mut OpCounts) -> T {
    counts.recursive_calls += 1;
    if let Some(v) = memo.get(&n) {
        counts.memo_hits += 1;
        return v.clone();
    }
    let v = match base(n) {
        Some(v) => v,
        None => {
            let lower = ripple_memo(n / 2, memo, counts);
            let upper = (n % 2 == 1).then(|| ripple_memo(n / 2 + 1, memo, counts));
            combine(n, &lower, upper.as_ref(), counts)
        }
    };
    memo.insert(n, v.clone());
    v
}
