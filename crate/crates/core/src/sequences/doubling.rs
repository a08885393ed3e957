//! Fast-doubling Fibonacci baseline:
//! `F(2k) = F(k)(2F(k+1) - F(k))`, `F(2k+1) = F(k)^2 + F(k+1)^2`.
//! Each bit costs one general multiplication and two squarings.

use crate::error::{Error, Result};
use crate::metrics::{counted_add, counted_mul, counted_square, counted_sub, OpCounts};
use crate::term::Term;
use crate::Index;

/// `(F(n), F(n+1))`, consuming the bits of `n` most significant first.
pub fn fib_fast_doubling<T: Term>(n: Index, counts: &mut OpCounts) -> (T, T) {
    let (mut a, mut b) = (T::from_u32(0), T::from_u32(1));
    let width = Index::BITS - n.leading_zeros();
    for shift in (0..width).rev() {
        let twice_b_minus_a = counted_sub(b.clone().double(), &a, counts);
        let even = counted_mul(&a, &twice_b_minus_a, counts);
        let odd = counted_add(
            counted_square(&a, counts),
            &counted_square(&b, counts),
            counts,
        );
        if (n >> shift) & 1 == 1 {
            b = counted_add(even, &odd, counts);
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    (a, b)
}

/// `L(n) = F(n-1) + F(n+1)`, evaluated as `2F(n+1) - F(n)` from one
/// fast-doubling pass.
pub fn lucas_from_fib<T: Term>(n: Index, counts: &mut OpCounts) -> Result<T> {
    if n == 0 {
        return Err(Error::too_small("lucas_from_fib", n, 1));
    }
    let (f_n, f_next) = fib_fast_doubling::<T>(n, counts);
    Ok(counted_sub(f_next.double(), &f_n, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::linear::fib_linear;
    use crate::term::Natural;

    fn pair(n: Index) -> (Natural, Natural) {
        fib_fast_doubling(n, &mut OpCounts::new())
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(pair(0), (Natural::from(0u32), Natural::from(1u32)));
        assert_eq!(pair(10), (Natural::from(55u32), Natural::from(89u32)));
        assert_eq!(pair(20), (Natural::from(6765u32), Natural::from(10946u32)));
    }

    #[test]
    fn doubling_matches_oracle() {
        for n in 0..400 {
            let (a, b) = pair(n);
            assert_eq!(a, fib_linear::<Natural>(n));
            assert_eq!(b, fib_linear::<Natural>(n + 1));
        }
    }

    #[test]
    fn lucas_from_fib_examples() {
        let l = |n| lucas_from_fib::<Natural>(n, &mut OpCounts::new()).unwrap();
        assert_eq!(l(1), Natural::from(1u32));
        assert_eq!(l(4), Natural::from(7u32));
        assert_eq!(l(10), Natural::from(123u32));
        assert!(lucas_from_fib::<Natural>(0, &mut OpCounts::new()).is_err());
    }

    #[test]
    fn uses_general_multiplications() {
        let mut c = OpCounts::new();
        pair_counted(1 << 10, &mut c);
        assert_eq!(c.general_mults, 11);
        assert_eq!(c.squarings, 22);
    }

    fn pair_counted(n: Index, c: &mut OpCounts) {
        let _: (Natural, Natural) = fib_fast_doubling(n, c);
    }

    #[test]
    fn survives_u64_max() {
        use crate::term::Mersenne61;
        let mut c = OpCounts::new();
        let _: (Mersenne61, Mersenne61) = fib_fast_doubling(u64::MAX, &mut c);
        assert_eq!(c.general_mults, 64);
    }
}
