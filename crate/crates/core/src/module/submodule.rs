use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{canonical_hnf, FinModule, Ideal};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Matrix};
use crate::scalar::Scalar;

/// A submodule of a [`FinModule`], stored canonically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule<T> {
    parent: FinModule<T>,
    hnf: Matrix<T>,
}

impl<T: Scalar> Submodule<T> {
    pub(crate) fn from_hnf(parent: FinModule<T>, hnf: Matrix<T>) -> Self {
        debug_assert_eq!(hnf.rows(), parent.rank());
        Submodule { parent, hnf }
    }

    pub fn parent(&self) -> &FinModule<T> {
        &self.parent
    }

    /// The full `k x k` Hermite form of the lattice, relation rows included.
    pub fn hnf(&self) -> &Matrix<T> {
        &self.hnf
    }

    /// Canonical generators: the Hermite rows that are not relation rows.
    pub fn generators(&self) -> Vec<Vec<T>> {
        let d = self.parent.invariant_factors();
        (0..self.hnf.rows())
            .filter(|&i| self.hnf[(i, i)] != d[i])
            .map(|i| self.hnf.row(i).to_vec())
            .collect()
    }

    pub fn order(&self) -> T {
        let d = self.parent.invariant_factors();
        (0..d.len()).fold(T::one(), |acc, i| {
            acc * (d[i].clone() / self.hnf[(i, i)].clone())
        })
    }

    pub fn is_zero(&self) -> bool {
        let d = self.parent.invariant_factors();
        (0..d.len()).all(|i| self.hnf[(i, i)] == d[i])
    }

    pub fn is_whole(&self) -> bool {
        (0..self.hnf.rows()).all(|i| self.hnf[(i, i)].is_one())
    }

    fn same_parent(&self, other: &Submodule<T>) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Whether the coordinate vector `v` lies in this submodule.
    pub fn contains_vector(&self, v: &[T]) -> bool {
        let k = self.hnf.rows();
        let mut v = v.to_vec();
        for j in 0..k {
            let q = v[j].div_floor(&self.hnf[(j, j)]);
            if !q.is_zero() {
                for c in j..k {
                    v[c] = v[c].clone() - q.clone() * self.hnf[(j, c)].clone();
                }
            }
            if !v[j].is_zero() {
                return false;
            }
        }
        true
    }

    /// `other <= self`.
    pub fn contains(&self, other: &Submodule<T>) -> Result<bool> {
        self.same_parent(other)?;
        Ok(other.hnf_rows().all(|r| self.contains_vector(r)))
    }

    pub fn is_subset_of(&self, other: &Submodule<T>) -> Result<bool> {
        other.contains(self)
    }

    fn hnf_rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.hnf.rows()).map(|i| self.hnf.row(i))
    }

    pub fn sum(&self, other: &Submodule<T>) -> Result<Submodule<T>> {
        self.same_parent(other)?;
        let gens = self.hnf_rows().chain(other.hnf_rows()).map(<[T]>::to_vec);
        Ok(Submodule::from_hnf(
            self.parent.clone(),
            canonical_hnf(gens, self.parent.invariant_factors()),
        ))
    }

    /// Intersection, read off the Hermite form of
    /// `[[B_1, B_1], [B_2, 0]]` reduced modulo `(d, d)`.
    pub fn intersect(&self, other: &Submodule<T>) -> Result<Submodule<T>> {
        self.same_parent(other)?;
        let k = self.parent.rank();
        let d = self.parent.invariant_factors();
        let moduli: Vec<T> = d.iter().chain(d.iter()).cloned().collect();
        let gens = self
            .hnf_rows()
            .map(|r| r.iter().chain(r.iter()).cloned().collect::<Vec<_>>())
            .chain(other.hnf_rows().map(|r| {
                r.iter()
                    .cloned()
                    .chain(std::iter::repeat_n(T::zero(), k))
                    .collect()
            }));
        let big = canonical_hnf(gens, &moduli);
        Ok(Submodule::from_hnf(self.parent.clone(), lower_right(&big, k)))
    }

    /// `a N`.
    pub fn scale(&self, a: &T) -> Submodule<T> {
        let gens = self
            .hnf_rows()
            .map(|r| r.iter().map(|x| x.clone() * a.clone()).collect());
        Submodule::from_hnf(
            self.parent.clone(),
            canonical_hnf(gens, self.parent.invariant_factors()),
        )
    }

    /// `I N`; for a principal ideal this is `a N`.
    pub fn act(&self, ideal: &Ideal<T>) -> Submodule<T> {
        self.scale(ideal.generator())
    }

    /// `Ann(N)`, generated by the exponent of `N`.
    pub fn annihilator(&self) -> Ideal<T> {
        let d = self.parent.invariant_factors();
        let mut e = T::one();
        for r in self.hnf_rows() {
            for (x, di) in r.iter().zip(d) {
                let g = x.gcd(di);
                e = e.lcm(&(di.clone() / g));
            }
        }
        Ideal::new(e)
    }

    /// `(N :_M I) = { m in M : I m <= N }`.
    pub fn colon_module(&self, ideal: &Ideal<T>) -> Result<Submodule<T>> {
        let k = self.parent.rank();
        let d = self.parent.invariant_factors();
        let a = ideal.generator();
        let moduli: Vec<T> = d.iter().chain(d.iter()).cloned().collect();
        let unit_gens = (0..k).map(|i| {
            let mut v = vec![T::zero(); 2 * k];
            v[i] = a.clone();
            v[k + i] = T::one();
            v
        });
        let own = self.hnf_rows().map(|r| {
            r.iter()
                .cloned()
                .chain(std::iter::repeat_n(T::zero(), k))
                .collect()
        });
        let big = canonical_hnf(unit_gens.chain(own), &moduli);
        Ok(Submodule::from_hnf(self.parent.clone(), lower_right(&big, k)))
    }

    /// `(self : other) = { r : r other <= self }`.
    pub fn colon_ring(&self, other: &Submodule<T>) -> Result<Ideal<T>> {
        self.same_parent(other)?;
        for r in self.parent.exponent_divisors() {
            if self.contains(&other.scale(&r))? {
                return Ok(Ideal::new(r));
            }
        }
        unreachable!("the exponent annihilates every submodule")
    }

    /// The `p`-primary part `N ∩ M_p`.
    pub fn primary_part(&self, p: &T) -> Submodule<T> {
        let mut cofactor = self.parent.exponent();
        while cofactor.is_multiple_of(p) {
            cofactor = cofactor / p.clone();
        }
        self.scale(&cofactor)
    }

    /// Sort key realising the canonical submodule order: the nonzero primary
    /// parts, primes ascending, each with its canonical generators; compared
    /// lexicographically.
    pub fn canonical_key(&self) -> Vec<(T, Vec<Vec<T>>)> {
        self.parent
            .primes()
            .into_iter()
            .filter_map(|p| {
                let part = self.primary_part(&p);
                (!part.is_zero()).then(|| (p, part.generators()))
            })
            .collect()
    }

    /// The abstract module `N`, normalized to invariant factors.
    pub fn isomorphism_type(&self) -> FinModule<T> {
        let k = self.parent.rank();
        let d = self.parent.invariant_factors();
        let h: Vec<Vec<BigInt>> = self
            .hnf_rows()
            .map(|r| r.iter().map(Scalar::to_big).collect())
            .collect();
        // rows of X with X H = diag(d): relations among the Hermite rows
        let mut x = Matrix::<BigInt>::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let mut acc = if i == j { d[i].to_big() } else { BigInt::zero() };
                for l in 0..j {
                    acc -= &x[(i, l)] * &h[l][j];
                }
                debug_assert!((&acc % &h[j][j]).is_zero());
                x[(i, j)] = acc / &h[j][j];
            }
        }
        let chain = smith_normal_form(&x)
            .diagonal()
            .into_iter()
            .filter(|s| !s.is_one())
            .map(|s| T::from_big(&s).expect("divides the parent exponent"))
            .collect();
        FinModule::from_chain(chain).expect("bounded by the parent")
    }
}

fn lower_right<T: Scalar>(big: &Matrix<T>, k: usize) -> Matrix<T> {
    let data = (k..2 * k)
        .flat_map(|i| big.row(i)[k..].to_vec())
        .collect();
    Matrix::new(k, k, data).expect("square")
}

impl<T: Scalar> fmt::Display for Submodule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "0");
        }
        write!(f, "<")?;
        for (n, g) in gens.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            if g.len() == 1 {
                write!(f, "{}", g[0])?;
            } else {
                write!(f, "(")?;
                for (m, x) in g.iter().enumerate() {
                    if m > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")?;
            }
        }
        write!(f, ">")
    }
}

impl<T: Scalar> fmt::Debug for Submodule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.parent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[i64]) -> FinModule<i64> {
        FinModule::new(f).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let z18 = m(&[18]);
        let s = z18.element_span(&[12]).unwrap();
        assert_eq!(s.generators(), vec![vec![6]]);
        assert_eq!(s.order(), 3);
        assert_eq!(s.annihilator(), Ideal::new(3));
        assert!(z18.zero_submodule().generators().is_empty());
        assert_eq!(z18.zero_submodule().annihilator(), Ideal::unit());
        assert_eq!(z18.whole().order(), 18);
        assert_eq!(format!("{s}"), "<6>");
    }

    #[test]
    fn sums_and_intersections_in_cyclic() {
        let z36 = m(&[36]);
        let a = z36.element_span(&[4]).unwrap();
        let b = z36.element_span(&[6]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), z36.element_span(&[2]).unwrap());
        assert_eq!(a.intersect(&b).unwrap(), z36.element_span(&[12]).unwrap());
    }

    #[test]
    fn klein_four() {
        let v = m(&[2, 2]);
        let a = v.element_span(&[1, 0]).unwrap();
        let b = v.element_span(&[0, 1]).unwrap();
        let c = v.element_span(&[1, 1]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_whole());
        assert_eq!(a.sum(&c).unwrap(), v.whole());
        assert_ne!(a, c);
        assert!(v.whole().contains(&c).unwrap());
        assert!(!a.contains(&c).unwrap());
    }

    #[test]
    fn colon_module_examples() {
        let z12 = m(&[12]);
        let zero = z12.zero_submodule();
        // elements killed by 2
        assert_eq!(
            zero.colon_module(&Ideal::new(2)).unwrap(),
            z12.element_span(&[6]).unwrap()
        );
        assert!(zero.colon_module(&Ideal::zero()).unwrap().is_whole());
        let six = z12.element_span(&[6]).unwrap();
        assert_eq!(
            six.colon_module(&Ideal::new(3)).unwrap(),
            z12.element_span(&[2]).unwrap()
        );
    }

    #[test]
    fn colon_ring_examples() {
        let z12 = m(&[12]);
        let six = z12.element_span(&[6]).unwrap();
        let whole = z12.whole();
        assert_eq!(six.colon_ring(&whole).unwrap(), Ideal::new(6));
        assert_eq!(whole.colon_ring(&six).unwrap(), Ideal::unit());
        assert_eq!(
            z12.zero_submodule().colon_ring(&whole).unwrap(),
            Ideal::new(12)
        );
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let a = m(&[4]).whole();
        let b = m(&[6]).whole();
        assert_eq!(a.sum(&b), Err(Error::ParentMismatch));
        assert_eq!(a.intersect(&b), Err(Error::ParentMismatch));
    }

    #[test]
    fn isomorphism_types() {
        let g = m(&[2, 4]);
        assert_eq!(g.whole().isomorphism_type(), g);
        let s = g.element_span(&[1, 2]).unwrap();
        assert_eq!(s.isomorphism_type(), m(&[2]));
        let s = g.submodule(&[vec![1, 0], vec![0, 2]]).unwrap();
        assert_eq!(s.isomorphism_type(), m(&[2, 2]));
        let z18 = m(&[18]);
        assert_eq!(z18.element_span(&[3]).unwrap().isomorphism_type(), m(&[6]));
        assert!(z18.zero_submodule().isomorphism_type().is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            m(&[2, 2]).submodule(&[vec![1]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
