//! `O(n)` reference recurrences. These are the ground truth everything else
//! is checked against.

use crate::term::Term;
use crate::Index;

fn unroll<T: Term>(n: Index, first: u32, second: u32) -> T {
    let (mut a, mut b) = (T::from_u32(first), T::from_u32(second));
    for _ in 0..n {
        let next = a.clone().add(&b);
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `L(n)` from `L(0) = 2, L(1) = 1` by repeated addition.
pub fn lucas_linear<T: Term>(n: Index) -> T {
    unroll(n, 2, 1)
}

/// `F(n)` from `F(0) = 0, F(1) = 1` by repeated addition.
pub fn fib_linear<T: Term>(n: Index) -> T {
    unroll(n, 0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Natural;

    #[test]
    fn lucas_prefix() {
        let got: Vec<Natural> = (0..11).map(lucas_linear).collect();
        let want: Vec<Natural> = [2u32, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
            .into_iter()
            .map(Natural::from)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib_linear::<Natural>(0), Natural::from(0u32));
        assert_eq!(fib_linear::<Natural>(1), Natural::from(1u32));
        assert_eq!(fib_linear::<Natural>(10), Natural::from(55u32));
    }
}
