//! Exact computations on finite modules over the integers: submodule
//! lattices, second and secondary submodules, representations and their
//! attached primes, and supplement-type structure.
//!
//! Everything is generic over a [`Scalar`] integer type. [`num_bigint::BigInt`]
//! never overflows; `i64` and `i128` are faster and reject modules whose
//! exponent could overflow intermediate products.

pub mod json;
pub mod lab;
pub mod linalg;
pub mod module;
pub mod second;
pub mod structure;

mod error;
mod scalar;

pub use error::{Error, Result};
pub use scalar::{divisors, is_prime, pow, prime_factors, valuation, Scalar};

pub use linalg::Matrix;
pub use module::{FinModule, Ideal, Lattice, Limits, PrimeIdeal, Quotient, Submodule};

use num_bigint::BigInt;

pub type IntMatrix = Matrix<BigInt>;
pub type ZModule = FinModule<BigInt>;
pub type ZSubmodule = Submodule<BigInt>;
pub type ZIdeal = Ideal<BigInt>;
pub type ZPrime = PrimeIdeal<BigInt>;
pub type ZLattice = Lattice<BigInt>;

/// Fixed-width variants for exhaustive corpus work.
pub type SmallModule = FinModule<i64>;
pub type SmallSubmodule = Submodule<i64>;
pub type SmallLattice = Lattice<i64>;
