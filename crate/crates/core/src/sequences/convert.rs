//! Exact Lucas-to-Fibonacci conversion.
//!
//! `5 F(n)^2 = L(n)^2 - 4(-1)^n` holds for every `n >= 0`, so `F(n)` is an
//! exact integer square root. This replaces rounding `L(n)/sqrt(5)`, which is
//! wrong at `n = 1` and loses digits once `L(n)` outgrows a float mantissa.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::term::Natural;
use crate::Index;

/// `floor(sqrt(x))`.
pub fn isqrt(x: &Natural) -> Natural {
    x.sqrt()
}

/// `F(n)` given `lucas_value = L(n)`.
///
/// Fails with [`Error::NotLucas`] when `lucas_value` cannot be `L(n)`.
pub fn fib_from_lucas(n: Index, lucas_value: &Natural) -> Result<Natural> {
    let four = Natural::from(4u32);
    let sq = lucas_value * lucas_value;
    let numerator = if n.is_multiple_of(2) {
        if sq < four {
            return Err(Error::NotLucas { n });
        }
        sq - four
    } else {
        sq + four
    };
    let (quotient, rem) = numerator.div_rem(&Natural::from(5u32));
    if !rem.is_zero() {
        return Err(Error::NotLucas { n });
    }
    let root = isqrt(&quotient);
    if &root * &root != quotient {
        return Err(Error::NotLucas { n });
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&nat(0)), nat(0));
        assert_eq!(isqrt(&nat(3025)), nat(55));
        assert_eq!(isqrt(&nat(24)), nat(4));
        assert_eq!(isqrt(&nat(25)), nat(5));
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(fib_from_lucas(1, &nat(1)).unwrap(), nat(1));
        assert_eq!(fib_from_lucas(10, &nat(123)).unwrap(), nat(55));
        assert_eq!(fib_from_lucas(0, &nat(2)).unwrap(), nat(0));
    }

    #[test]
    fn rejects_non_lucas() {
        assert!(matches!(
            fib_from_lucas(10, &nat(124)),
            Err(Error::NotLucas { n: 10 })
        ));
        assert!(matches!(
            fib_from_lucas(0, &nat(1)),
            Err(Error::NotLucas { n: 0 })
        ));
        // (64 - 4) / 5 = 12 is not a square
        assert!(fib_from_lucas(2, &nat(8)).is_err());
        // parity matters: L(4) = 7 with the odd-index sign gives 53/5
        assert!(fib_from_lucas(5, &nat(7)).is_err());
    }
}
