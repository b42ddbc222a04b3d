//! Scalar abstraction for exact non-negative integers.
//!
//! Every combinatorial routine in this crate is written against [`Natural`],
//! so the same code runs on machine words (`u64`, `u128`) for fast desk-scale
//! enumeration and on [`BigUint`] when values must be unbounded. Fixed-width
//! implementors panic on overflow instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

/// Information measured in bits (binary logarithm).
pub type Bits = f64;

pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Unsigned
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Binary logarithm as a double. `0` and `1` both carry zero bits.
    fn log2(&self) -> Bits;

    /// Number of significant bits; zero for zero.
    fn bit_length(&self) -> usize;

    /// Lossless widening into the unbounded representation.
    fn to_big(&self) -> BigUint;

    /// Narrowing from the unbounded representation, `None` if out of range.
    fn from_big(v: &BigUint) -> Option<Self>;

    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("u64 value does not fit the scalar type")
    }
}

impl Natural for u64 {
    fn log2(&self) -> Bits {
        if *self <= 1 {
            0.0
        } else {
            (*self as f64).log2()
        }
    }

    fn bit_length(&self) -> usize {
        (Self::BITS - self.leading_zeros()) as usize
    }

    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        v.to_u64()
    }
}

impl Natural for u128 {
    fn log2(&self) -> Bits {
        if *self <= 1 {
            0.0
        } else {
            (*self as f64).log2()
        }
    }

    fn bit_length(&self) -> usize {
        (Self::BITS - self.leading_zeros()) as usize
    }

    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        v.to_u128()
    }
}

impl Natural for BigUint {
    fn log2(&self) -> Bits {
        let bits = self.bits();
        if bits <= 1 {
            return 0.0;
        }
        if bits <= 1000 {
            // exact enough: to_f64 rounds to nearest
            return self.to_f64().map_or(f64::INFINITY, f64::log2);
        }
        let shift = bits - 64;
        let top = (self >> shift).to_f64().unwrap_or(f64::INFINITY);
        top.log2() + shift as f64
    }

    fn bit_length(&self) -> usize {
        self.bits() as usize
    }

    fn to_big(&self) -> BigUint {
        self.clone()
    }

    fn from_big(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }
}

/// Shorthand for a small constant in any scalar type.
pub fn nat<N: Natural>(v: u64) -> N {
    N::from_u64_exact(v)
}

pub(crate) fn add<N: Natural>(a: &N, b: &N) -> N {
    a.checked_add(b)
        .expect("addition overflows the scalar type")
}

pub(crate) fn mul<N: Natural>(a: &N, b: &N) -> N {
    a.checked_mul(b)
        .expect("multiplication overflows the scalar type")
}

/// Floor of the square root, by Newton iteration on exact integers.
///
/// Starts from a power of two that is known to exceed the root, so the
/// iterates decrease monotonically to `floor(sqrt(n))`.
pub fn isqrt<N: Natural>(n: &N) -> N {
    let two: N = nat(2);
    if *n < two {
        return n.clone();
    }
    let bits = n.bit_length();
    let mut x: N = num_traits::pow(two.clone(), bits.div_ceil(2));
    loop {
        let y = add(&x, &(n.clone() / x.clone())) / two.clone();
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Parse a decimal literal into any scalar type.
pub fn parse_nat<N: Natural>(s: &str) -> Result<N, crate::Error> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(crate::Error::Parse(format!("not a natural number: {s:?}")));
    }
    let big: BigUint = t
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad number {s:?}")))?;
    N::from_big(&big)
        .ok_or_else(|| crate::Error::Parse(format!("{s} does not fit the scalar type")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_small_values() {
        let roots: Vec<u64> = (0u64..20).map(|n| isqrt(&n)).collect();
        assert_eq!(
            roots,
            vec![0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4]
        );
    }

    #[test]
    fn isqrt_near_word_boundary() {
        assert_eq!(isqrt(&u64::MAX), u32::MAX as u64);
        let sq = (u32::MAX as u64) * (u32::MAX as u64);
        assert_eq!(isqrt(&sq), u32::MAX as u64);
        assert_eq!(isqrt(&(sq - 1)), u32::MAX as u64 - 1);
    }

    #[test]
    fn isqrt_big_beyond_double_precision() {
        // (2^80 + 1)^2 - 1 rounds badly through f64
        let r = (BigUint::from(1u8) << 80u32) + 1u8;
        let sq = &r * &r;
        assert_eq!(isqrt(&sq), r);
        assert_eq!(isqrt(&(sq - 1u8)), &r - 1u8);
    }

    #[test]
    fn log_conventions() {
        assert_eq!(0u64.log2(), 0.0);
        assert_eq!(1u64.log2(), 0.0);
        assert_eq!(8u64.log2(), 3.0);
        assert_eq!(BigUint::from(0u8).log2(), 0.0);
        let huge = BigUint::from(1u8) << 5000u32;
        assert!((huge.log2() - 5000.0).abs() < 1e-9);
    }

    #[test]
    fn parse_rejects_signs_and_junk() {
        assert!(parse_nat::<u64>("-3").is_err());
        assert!(parse_nat::<u64>("").is_err());
        assert!(parse_nat::<u64>("18446744073709551616").is_err());
        assert_eq!(parse_nat::<u64>(" 42 ").unwrap(), 42);
    }

    proptest! {
        #[test]
        fn isqrt_brackets_root(n in any::<u64>()) {
            let r = isqrt(&(n as u128));
            prop_assert!(r * r <= n as u128);
            prop_assert!((r + 1) * (r + 1) > n as u128);
        }
    }
}
