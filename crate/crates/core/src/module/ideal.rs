use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{is_prime, Scalar};

/// An ideal `(a)` of the integers, stored by its non-negative generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal<T> {
    generator: T,
}

impl<T: Scalar> Ideal<T> {
    pub fn new(a: T) -> Self {
        Ideal { generator: a.abs() }
    }

    pub fn zero() -> Self {
        Ideal {
            generator: T::zero(),
        }
    }

    pub fn unit() -> Self {
        Ideal {
            generator: T::one(),
        }
    }

    pub fn generator(&self) -> &T {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_zero()
    }

    /// `self <= other` as sets, i.e. the generator of `other` divides ours.
    pub fn is_subset_of(&self, other: &Ideal<T>) -> bool {
        if other.generator.is_zero() {
            self.generator.is_zero()
        } else {
            self.generator.is_multiple_of(&other.generator)
        }
    }

    pub fn is_prime(&self) -> bool {
        self.generator.is_zero() || is_prime(&self.generator)
    }
}

impl<T: Scalar> fmt::Display for Ideal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

/// A nonzero prime ideal `(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal<T> {
    p: T,
}

impl<T: Scalar> PrimeIdeal<T> {
    pub fn new(p: T) -> Result<Self> {
        if is_prime(&p) {
            Ok(PrimeIdeal { p })
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub(crate) fn new_unchecked(p: T) -> Self {
        debug_assert!(is_prime(&p));
        PrimeIdeal { p }
    }

    pub fn generator(&self) -> &T {
        &self.p
    }

    pub fn ideal(&self) -> Ideal<T> {
        Ideal::new(self.p.clone())
    }
}

impl<T: Scalar> fmt::Display for PrimeIdeal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.p)
    }
}
