//! Value domains the sequence kernels run over.
//!
//! The kernels are written once against [`Term`]. Production results use
//! [`Natural`] (exact, arbitrary precision). [`Mersenne61`] runs the very
//! same code paths modulo `2^61 - 1`; operation counts do not depend on the
//! domain, so it is used to sweep counts over index ranges where exact values
//! would be too large to build millions of times.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Arithmetic a doubling kernel needs.
///
/// `sub` and `offset` with a negative delta assume the result is
/// non-negative; the kernels only subtract a smaller Lucas or Fibonacci
/// value from a larger one. Unsigned domains panic on underflow.
pub trait Term: Clone + PartialEq + fmt::Debug {
    fn from_u32(v: u32) -> Self;

    fn square(&self) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn add(self, rhs: &Self) -> Self;

    fn sub(self, rhs: &Self) -> Self;

    /// `self + delta` for a small signed constant.
    fn offset(self, delta: i32) -> Self;

    /// `2 * self`, a shift.
    fn double(self) -> Self;
}

impl Term for BigUint {
    fn from_u32(v: u32) -> Self {
        BigUint::from(v)
    }

    fn square(&self) -> Self {
        self * self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add(self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(self, rhs: &Self) -> Self {
        self - rhs
    }

    fn offset(self, delta: i32) -> Self {
        if delta >= 0 {
            self + delta.unsigned_abs()
        } else {
            self - delta.unsigned_abs()
        }
    }

    fn double(self) -> Self {
        self << 1u32
    }
}

const M61: u64 = (1 << 61) - 1;

/// Residue modulo the Mersenne prime `2^61 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mersenne61(u64);

impl Mersenne61 {
    pub const MODULUS: u64 = M61;

    pub fn new(v: u64) -> Self {
        Mersenne61(v % M61)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Reduces an exact value into the field.
    pub fn from_natural(v: &Natural) -> Self {
        let r = v % BigUint::from(M61);
        Mersenne61(if r.is_zero() { 0 } else { r.to_u64_digits()[0] })
    }

    fn reduce(wide: u128) -> u64 {
        let folded = (wide & M61 as u128) + (wide >> 61);
        let folded = (folded & M61 as u128) + (folded >> 61);
        let v = folded as u64;
        if v >= M61 {
            v - M61
        } else {
            v
        }
    }
}

impl fmt::Debug for Mersenne61 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 2^61-1)", self.0)
    }
}

impl Term for Mersenne61 {
    fn from_u32(v: u32) -> Self {
        Mersenne61(v as u64)
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Mersenne61(Self::reduce(self.0 as u128 * rhs.0 as u128))
    }

    fn add(self, rhs: &Self) -> Self {
        Mersenne61(Self::reduce(self.0 as u128 + rhs.0 as u128))
    }

    fn sub(self, rhs: &Self) -> Self {
        Mersenne61(Self::reduce(self.0 as u128 + (M61 - rhs.0) as u128))
    }

    fn offset(self, delta: i32) -> Self {
        let d = Mersenne61::new(delta.unsigned_abs() as u64);
        if delta >= 0 {
            self.add(&d)
        } else {
            self.sub(&d)
        }
    }

    fn double(self) -> Self {
        self.add(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_offset_signs() {
        let x = BigUint::from(9u32);
        assert_eq!(x.clone().offset(-2), BigUint::from(7u32));
        assert_eq!(x.offset(4), BigUint::from(13u32));
    }

    #[test]
    fn mersenne_wraps() {
        let a = Mersenne61::new(M61 - 1);
        assert_eq!(a.add(&Mersenne61::new(2)).value(), 1);
        assert_eq!(Mersenne61::new(0).offset(-1).value(), M61 - 1);
        assert_eq!(Mersenne61::new(1 << 40).square().value(), 1 << 19);
    }

    #[test]
    fn mersenne_agrees_with_natural() {
        let big = BigUint::from(u64::MAX).square().offset(12345);
        let wide = Mersenne61::new(u64::MAX).square().offset(12345);
        assert_eq!(Mersenne61::from_natural(&big), wide);
    }
}
