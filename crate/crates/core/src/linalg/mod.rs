//! Exact integer matrices and their Hermite and Smith normal forms.
//!
//! All routines are generic over [`Scalar`](crate::Scalar); the forms are
//! deterministic so that canonical matrices can be compared bitwise.

mod hnf;
mod matrix;
mod snf;

pub use hnf::{hermite_normal_form, is_hermite_normal_form, Hnf};
pub use matrix::Matrix;
pub use snf::{smith_normal_form, Snf};
