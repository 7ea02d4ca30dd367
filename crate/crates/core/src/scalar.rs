//! Integer scalars the exact algorithms are generic over.
//!
//! Every algorithm in this crate is written against [`Scalar`], so the same
//! code runs on arbitrary-precision [`BigInt`] and on fixed-width `i64` /
//! `i128`. Fixed-width types advertise the largest module exponent for which
//! the relation-reduced canonical forms cannot overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Scalar:
    Clone
    + Debug
    + Display
    + Hash
    + Ord
    + Send
    + Sync
    + 'static
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
{
    /// Largest module exponent accepted by [`crate::FinModule::new`];
    /// `None` means unbounded.
    const MAX_MODULUS: Option<u64>;

    fn to_big(&self) -> BigInt;

    fn from_big(v: &BigInt) -> Option<Self>;

    fn of(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("u64 fits every scalar used here")
    }
}

impl Scalar for BigInt {
    const MAX_MODULUS: Option<u64> = None;

    fn to_big(&self) -> BigInt {
        self.clone()
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

impl Scalar for i64 {
    // products of two reduced entries plus a carry stay below 2^63
    const MAX_MODULUS: Option<u64> = Some(1 << 30);

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Scalar for i128 {
    const MAX_MODULUS: Option<u64> = Some(1 << 62);

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

/// Non-negative gcd together with Bezout coefficients: `s*a + t*b = g`.
pub(crate) fn xgcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Prime factors of `n > 0` in ascending order, without multiplicity.
pub fn prime_factors<T: Scalar>(n: &T) -> Vec<T> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut p = T::of(2);
    while p.clone() * p.clone() <= n {
        if n.is_multiple_of(&p) {
            out.push(p.clone());
            while n.is_multiple_of(&p) {
                n = n / p.clone();
            }
        }
        p = p + T::one();
    }
    if n > T::one() {
        out.push(n);
    }
    out
}

/// Multiplicity of the prime `p` in `n > 0`.
pub fn valuation<T: Scalar>(n: &T, p: &T) -> u32 {
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && n.is_multiple_of(p) {
        n = n / p.clone();
        v += 1;
    }
    v
}

pub fn is_prime<T: Scalar>(n: &T) -> bool {
    if *n < T::of(2) {
        return false;
    }
    let mut d = T::of(2);
    while d.clone() * d.clone() <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Positive divisors of `n > 0` in ascending order.
pub fn divisors<T: Scalar>(n: &T) -> Vec<T> {
    let mut out = vec![T::one()];
    for p in prime_factors(n) {
        let e = valuation(n, &p);
        let base = out.clone();
        let mut pk = T::one();
        for _ in 0..e {
            pk = pk * p.clone();
            out.extend(base.iter().map(|d| d.clone() * pk.clone()));
        }
    }
    out.sort();
    out
}

pub fn pow<T: Scalar>(base: &T, exp: u32) -> T {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_helpers() {
        assert_eq!(prime_factors(&360i64), vec![2, 3, 5]);
        assert_eq!(valuation(&360i64, &2), 3);
        assert_eq!(divisors(&12i64), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&1i64), vec![1]);
        assert!(is_prime(&BigInt::from(97)));
        assert!(!is_prime(&BigInt::from(91)));
        assert!(!is_prime(&1i64));
    }

    #[test]
    fn xgcd_sign() {
        let (g, s, t) = xgcd(&-4i64, &6);
        assert_eq!(g, 2);
        assert_eq!(s * -4 + t * 6, 2);
        let (g, _, _) = xgcd(&0i64, &0);
        assert_eq!(g, 0);
    }
}
