use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{canonical_hnf, FinModule, Submodule};
use crate::linalg::smith_normal_form;
use crate::scalar::Scalar;

/// The quotient `M / N` with its projection.
///
/// Coordinates come from a Smith form `S = U H V` of the Hermite matrix of
/// `N`: the map `x -> x V` carries the lattice of `N` onto `diag(S)`, so the
/// quotient is `+ Z/s_i` over the entries `s_i > 1`.
#[derive(Clone)]
pub struct Quotient<T> {
    kernel: Submodule<T>,
    module: FinModule<T>,
    // column j of the transform, already reduced modulo the j-th factor
    transform: Vec<Vec<T>>,
}

impl<T: Scalar> Quotient<T> {
    pub fn new(kernel: &Submodule<T>) -> Self {
        let h = kernel.hnf().convert::<BigInt>().expect("BigInt holds everything");
        let snf = smith_normal_form(&h);
        let diag = snf.diagonal();
        let k = diag.len();
        let mut factors = Vec::new();
        let mut transform = Vec::new();
        for (j, s) in diag.iter().enumerate() {
            if s.is_one() {
                continue;
            }
            factors.push(T::from_big(s).expect("divides the parent exponent"));
            transform.push(
                (0..k)
                    .map(|r| {
                        T::from_big(&snf.v[(r, j)].mod_floor(s)).expect("reduced below s")
                    })
                    .collect(),
            );
        }
        Quotient {
            kernel: kernel.clone(),
            module: FinModule::from_chain(factors).expect("bounded by the parent"),
            transform,
        }
    }

    pub fn module(&self) -> &FinModule<T> {
        &self.module
    }

    pub fn kernel(&self) -> &Submodule<T> {
        &self.kernel
    }

    /// Image of an element of the parent.
    pub fn project_vector(&self, x: &[T]) -> Vec<T> {
        let d = self.module.invariant_factors();
        self.transform
            .iter()
            .zip(d)
            .map(|(col, s)| {
                col.iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| (acc + a.clone() * b.clone()).mod_floor(s))
            })
            .collect()
    }

    /// Image `(K + N) / N` of a submodule of the parent.
    pub fn project(&self, sub: &Submodule<T>) -> Submodule<T> {
        debug_assert_eq!(sub.parent(), self.kernel.parent());
        let gens = (0..sub.hnf().rows()).map(|i| self.project_vector(sub.hnf().row(i)));
        Submodule::from_hnf(
            self.module.clone(),
            canonical_hnf(gens, self.module.invariant_factors()),
        )
    }
}
