//! Finite modules over the integers and their submodule lattices.
//!
//! A [`FinModule`] is presented by its invariant factors `d_1 | ... | d_k`;
//! elements are coordinate vectors modulo `d_i`. A [`Submodule`] is stored as
//! the Hermite normal form of the full-rank lattice `L` with
//! `diag(d) Z^k <= L <= Z^k` it corresponds to, so equality of submodules is
//! equality of canonical matrices.

mod canonical;
mod enumerate;
mod ideal;
mod lattice;
mod quotient;
mod submodule;

use std::fmt;
use std::sync::Arc;

pub use enumerate::{count_submodules, enumerate_submodules, primary_subgroups};
pub use ideal::{Ideal, PrimeIdeal};
pub use lattice::{Lattice, Limits};
pub use quotient::Quotient;
pub use submodule::Submodule;

pub(crate) use canonical::canonical_hnf;

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Matrix};
use crate::scalar::{divisors, prime_factors, Scalar};

/// A finite module over the integers, `Z/d_1 + ... + Z/d_k` with
/// `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinModule<T> {
    factors: Arc<[T]>,
}

impl<T: Scalar> FinModule<T> {
    /// Builds the module `Z/f_1 + ... + Z/f_r` and normalizes it to its
    /// invariant-factor chain.
    pub fn new(factors: &[T]) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|f| **f < T::of(2)) {
            return Err(Error::InvalidFactor(bad.to_string()));
        }
        let big: Vec<_> = factors.iter().map(Scalar::to_big).collect();
        let snf = smith_normal_form(&Matrix::diagonal(&big));
        let chain = snf
            .diagonal()
            .into_iter()
            .filter(|d| *d > num_bigint::BigInt::from(1))
            .map(|d| T::from_big(&d).expect("invariant factors divide the product of the inputs"))
            .collect::<Vec<_>>();
        Self::from_chain(chain)
    }

    /// Builds a module from an already-normalized invariant-factor chain.
    pub(crate) fn from_chain(chain: Vec<T>) -> Result<Self> {
        debug_assert!(chain.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        if let (Some(limit), Some(e)) = (T::MAX_MODULUS, chain.last()) {
            if e.to_u64().is_none_or(|e| e > limit) {
                return Err(Error::Overflow {
                    value: e.to_string(),
                    limit,
                });
            }
        }
        Ok(FinModule {
            factors: chain.into(),
        })
    }

    pub fn cyclic(n: T) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn zero() -> Self {
        FinModule {
            factors: Vec::new().into(),
        }
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.factors
    }

    /// Number of cyclic factors in the invariant-factor presentation.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> T {
        self.factors.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    /// Largest invariant factor; `1` for the zero module.
    pub fn exponent(&self) -> T {
        self.factors.last().cloned().unwrap_or_else(T::one)
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    /// Primes dividing the order, ascending.
    pub fn primes(&self) -> Vec<T> {
        prime_factors(&self.exponent())
    }

    /// Positive divisors of the exponent; together with the zero ideal these
    /// realise every distinct ideal action on the module.
    pub fn exponent_divisors(&self) -> Vec<T> {
        divisors(&self.exponent())
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn whole(&self) -> Submodule<T> {
        Submodule::from_hnf(self.clone(), Matrix::identity(self.rank()))
    }

    pub fn zero_submodule(&self) -> Submodule<T> {
        Submodule::from_hnf(self.clone(), Matrix::diagonal(&self.factors))
    }

    /// The submodule generated by coordinate vectors.
    pub fn submodule(&self, gens: &[Vec<T>]) -> Result<Submodule<T>> {
        if let Some(g) = gens.iter().find(|g| g.len() != self.rank()) {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: g.len(),
            });
        }
        Ok(Submodule::from_hnf(
            self.clone(),
            canonical_hnf(gens.iter().cloned(), &self.factors),
        ))
    }

    /// Submodule generated by a single element given as integers.
    pub fn element_span(&self, coords: &[i64]) -> Result<Submodule<T>> {
        let v = coords
            .iter()
            .map(|&c| T::from_i64(c).expect("i64 fits"))
            .collect::<Vec<_>>();
        self.submodule(&[v])
    }

    /// The `p`-primary component: elements annihilated by a power of `p`.
    pub fn primary_component(&self, p: &PrimeIdeal<T>) -> Submodule<T> {
        let e = self.exponent();
        let mut cofactor = e.clone();
        while cofactor.is_multiple_of(p.generator()) {
            cofactor = cofactor / p.generator().clone();
        }
        self.whole().scale(&cofactor)
    }

    /// Sum of all simple submodules: the elements killed by the product of
    /// the primes dividing the exponent.
    pub fn socle(&self) -> Submodule<T> {
        let r = self
            .primes()
            .into_iter()
            .fold(T::one(), |acc, p| acc * p);
        self.zero_submodule()
            .colon_module(&Ideal::new(r))
            .expect("colon with a positive ideal")
    }

    /// Maximal proper submodules: kernels of the nonzero functionals
    /// `M -> Z/p`, one per projective point of `(M/pM)^*`, for each prime `p`.
    pub fn maximal_submodules(&self, limits: &Limits) -> Result<Vec<Submodule<T>>> {
        let mut needed: u128 = 0;
        for p in self.primes() {
            let r = self.factors.iter().filter(|d| d.is_multiple_of(&p)).count() as u32;
            let p = p.to_u128().unwrap_or(u128::MAX);
            needed = needed.saturating_add(
                (p.saturating_pow(r).saturating_sub(1)) / (p - 1).max(1),
            );
        }
        if needed > limits.max_submodules {
            return Err(Error::ResourceCap {
                what: "maximal submodules",
                needed,
                limit: limits.max_submodules,
            });
        }
        let k = self.rank();
        let mut out = Vec::new();
        for p in self.primes() {
            let active: Vec<usize> = (0..k)
                .filter(|&i| self.factors[i].is_multiple_of(&p))
                .collect();
            let pu = p.to_u64().expect("prime bounded by the cap") as u128;
            // normalised functionals: first nonzero coefficient is 1
            for lead in 0..active.len() {
                let free = active.len() - lead - 1;
                let total = pu.pow(free as u32);
                for code in 0..total {
                    let mut coeffs = vec![T::zero(); k];
                    coeffs[active[lead]] = T::one();
                    let mut c = code;
                    for &pos in &active[lead + 1..] {
                        coeffs[pos] = T::of((c % pu) as u64);
                        c /= pu;
                    }
                    out.push(self.functional_kernel(&coeffs, active[lead], &p));
                }
            }
        }
        out.sort_by_cached_key(|s| s.canonical_key());
        Ok(out)
    }

    fn functional_kernel(&self, coeffs: &[T], lead: usize, p: &T) -> Submodule<T> {
        let k = self.rank();
        let mut gens = Vec::with_capacity(k);
        for i in 0..k {
            let mut v = vec![T::zero(); k];
            if i == lead {
                v[i] = p.clone();
            } else {
                v[i] = T::one();
                v[lead] = -coeffs[i].clone();
            }
            gens.push(v);
        }
        Submodule::from_hnf(
            self.clone(),
            canonical_hnf(gens, &self.factors),
        )
    }

    /// Intersection of all maximal submodules.
    pub fn radical(&self, limits: &Limits) -> Result<Submodule<T>> {
        let maxes = self.maximal_submodules(limits)?;
        let mut acc = self.whole();
        for m in &maxes {
            acc = acc.intersect(m)?;
        }
        Ok(acc)
    }

    /// Lattice-size-capped enumeration of all submodules.
    pub fn submodules(&self, limits: &Limits) -> Result<Vec<Submodule<T>>> {
        enumerate_submodules(self, limits)
    }

    /// Number of cyclic prime-power factors in the primary decomposition.
    pub fn prime_power_factor_count(&self) -> usize {
        self.factors.iter().map(|d| prime_factors(d).len()).sum()
    }
}

impl<T: Scalar> fmt::Display for FinModule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Z{d}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for FinModule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinModule({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(f: &[i64]) -> FinModule<i64> {
        FinModule::new(f).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(m(&[18]).invariant_factors(), &[18]);
        assert_eq!(m(&[2, 9]).invariant_factors(), &[18]);
        assert_eq!(m(&[2, 4]).invariant_factors(), &[2, 4]);
        assert_eq!(m(&[4, 2]).invariant_factors(), &[2, 4]);
        assert_eq!(m(&[2, 2, 2, 9]).invariant_factors(), &[2, 2, 18]);
        assert!(m(&[]).is_zero());
        assert_eq!(m(&[]).exponent(), 1);
        assert!(matches!(
            FinModule::<i64>::new(&[1]),
            Err(Error::InvalidFactor(_))
        ));
        assert!(FinModule::<i64>::new(&[0, 3]).is_err());
    }

    #[test]
    fn fixed_width_overflow_guard() {
        assert!(matches!(
            FinModule::<i64>::new(&[1 << 31]),
            Err(Error::Overflow { .. })
        ));
        let big = FinModule::<BigInt>::new(&[BigInt::from(1u64 << 40)]).unwrap();
        assert_eq!(big.order(), BigInt::from(1u64 << 40));
    }

    #[test]
    fn invariant_chain_holds() {
        let x = m(&[12, 18, 8]);
        let f = x.invariant_factors();
        assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        assert_eq!(x.order(), 12 * 18 * 8);
        assert_eq!(x.order() % x.exponent(), 0);
    }

    #[test]
    fn socle_examples() {
        let z12 = m(&[12]);
        assert_eq!(z12.socle(), z12.element_span(&[2]).unwrap());
        let v4 = m(&[2, 2]);
        assert_eq!(v4.socle(), v4.whole());
        let z8 = m(&[8]);
        assert_eq!(z8.socle(), z8.element_span(&[4]).unwrap());
    }

    #[test]
    fn radical_examples() {
        let l = Limits::default();
        let z12 = m(&[12]);
        assert_eq!(z12.radical(&l).unwrap(), z12.element_span(&[6]).unwrap());
        let v4 = m(&[2, 2]);
        assert!(v4.radical(&l).unwrap().is_zero());
        let z8 = m(&[8]);
        assert_eq!(z8.radical(&l).unwrap(), z8.element_span(&[2]).unwrap());
    }

    #[test]
    fn maximal_examples() {
        let l = Limits::default();
        let z12 = m(&[12]);
        let maxes = z12.maximal_submodules(&l).unwrap();
        assert_eq!(maxes.len(), 2);
        assert!(maxes.contains(&z12.element_span(&[2]).unwrap()));
        assert!(maxes.contains(&z12.element_span(&[3]).unwrap()));
        let z7 = m(&[7]);
        assert_eq!(z7.maximal_submodules(&l).unwrap(), vec![z7.zero_submodule()]);
        let v4 = m(&[2, 2]);
        let maxes = v4.maximal_submodules(&l).unwrap();
        assert_eq!(maxes.len(), 3);
        assert!(maxes.iter().all(|s| s.order() == 2));
        let tight = Limits {
            max_submodules: 2,
            ..Limits::default()
        };
        assert!(matches!(
            v4.maximal_submodules(&tight),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn primary_components() {
        let z18 = m(&[18]);
        let c3 = z18.primary_component(&PrimeIdeal::new(3).unwrap());
        assert_eq!(c3, z18.element_span(&[2]).unwrap());
        assert_eq!(c3.order(), 9);
        assert!(z18
            .primary_component(&PrimeIdeal::new(5).unwrap())
            .is_zero());
        let z12 = m(&[12]);
        let c2 = z12.primary_component(&PrimeIdeal::new(2).unwrap());
        assert_eq!(c2, z12.element_span(&[3]).unwrap());
    }

    #[test]
    fn primary_components_multiply_to_order() {
        for f in [&[2i64, 6, 12][..], &[3, 45], &[30], &[4, 8, 24]] {
            let x = m(f);
            let prod: i64 = x
                .primes()
                .into_iter()
                .map(|p| x.primary_component(&PrimeIdeal::new(p).unwrap()).order())
                .product();
            assert_eq!(prod, x.order());
        }
    }
}
