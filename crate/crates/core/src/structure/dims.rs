use super::{is_large, is_small, is_uniform_submodule};
use crate::module::{Lattice, Quotient};
use crate::scalar::{prime_factors, Scalar};

/// Number of prime factors of `n` counted with multiplicity.
fn big_omega(mut n: u64) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

/// Hollow dimension: the largest number of cyclic prime-power factors of
/// `M/K` over small submodules `K`. Each such factor is hollow, so
/// `M -> M/K` is a small epimorphism onto a sum of that many hollow modules.
pub fn hollow_dim<T: Scalar>(lat: &Lattice<T>) -> usize {
    (0..lat.len())
        .filter(|&k| is_small(lat, k))
        .map(|k| Quotient::new(lat.get(k)).module().prime_power_factor_count())
        .max()
        .unwrap_or(0)
}

/// Hollow dimension by search: over small `K`, the largest family of
/// submodules `A_i ⊇ K` with each `A_i / K` hollow and `M/K` their direct
/// sum.
pub fn hollow_dim_literal<T: Scalar>(lat: &Lattice<T>) -> usize {
    if lat.module().is_zero() {
        return 0;
    }
    let mut best = 0;
    for k in (0..lat.len()).filter(|&k| is_small(lat, k)) {
        let cands: Vec<usize> = lat
            .up_set(k)
            .into_iter()
            .filter(|&a| {
                a != k && lat.lower_covers(a).iter().filter(|&&c| lat.leq(k, c)).count() == 1
            })
            .collect();
        let bound = big_omega(lat.module_order() / lat.order(k));
        let mut search = FamilySearch {
            lat,
            cands: &cands,
            base: k,
            bound,
            best: 0,
        };
        search.run(0, k, 0, &|s| s == lat.whole());
        best = best.max(search.best);
    }
    best
}

/// Uniform dimension by search: the largest independent family of uniform
/// submodules whose sum is large.
pub fn uniform_dim<T: Scalar>(lat: &Lattice<T>) -> usize {
    if lat.module().is_zero() {
        return 0;
    }
    let cands: Vec<usize> = (0..lat.len())
        .filter(|&u| is_uniform_submodule(lat, u))
        .collect();
    let mut search = FamilySearch {
        lat,
        cands: &cands,
        base: lat.zero(),
        bound: big_omega(lat.module_order()),
        best: 0,
    };
    search.run(0, lat.zero(), 0, &|s| is_large(lat, s));
    search.best
}

/// Number of cyclic prime-power factors: the rank of the socle over each
/// prime, summed.
pub fn uniform_dim_fast<T: Scalar>(m: &crate::module::FinModule<T>) -> usize {
    m.invariant_factors()
        .iter()
        .map(|d| prime_factors(d).len())
        .sum()
}

/// Depth-first search for the largest family of candidates that is
/// independent over `base` (pairwise meets of partial sums equal `base`)
/// and whose sum satisfies `accept`.
struct FamilySearch<'a, T: Scalar> {
    lat: &'a Lattice<T>,
    cands: &'a [usize],
    base: usize,
    bound: usize,
    best: usize,
}

impl<T: Scalar> FamilySearch<'_, T> {
    fn run(&mut self, start: usize, sum: usize, size: usize, accept: &dyn Fn(usize) -> bool) {
        if size > self.best && accept(sum) {
            self.best = size;
        }
        if self.best >= self.bound {
            return;
        }
        for (n, &c) in self.cands.iter().enumerate().skip(start) {
            if size + (self.cands.len() - n) <= self.best {
                return;
            }
            if self.lat.meet(sum, c) != self.base {
                continue;
            }
            let next = self.lat.join(sum, c);
            self.run(n + 1, next, size + 1, accept);
            if self.best >= self.bound {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FinModule, Limits};
    use crate::structure::is_hollow_submodule;

    fn lat(f: &[i64]) -> Lattice<i64> {
        Lattice::new(&FinModule::new(f).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn omega() {
        assert_eq!(big_omega(1), 0);
        assert_eq!(big_omega(12), 3);
        assert_eq!(big_omega(97), 1);
    }

    #[test]
    fn dimensions() {
        for (f, h, u) in [
            (&[12i64][..], 2, 2),
            (&[8], 1, 1),
            (&[2, 2], 2, 2),
            (&[4, 4], 2, 2),
            (&[2, 6], 3, 3),
        ] {
            let l = lat(f);
            assert_eq!(hollow_dim(&l), h, "{f:?}");
            assert_eq!(hollow_dim_literal(&l), h, "{f:?}");
            assert_eq!(uniform_dim(&l), u, "{f:?}");
            assert_eq!(uniform_dim_fast(l.module()), u, "{f:?}");
        }
    }

    #[test]
    fn hollow_pieces_are_cyclic() {
        let l = lat(&[2, 4]);
        for i in 0..l.len() {
            if is_hollow_submodule(&l, i) {
                assert!(l.get(i).isomorphism_type().is_cyclic());
            }
        }
    }
}
