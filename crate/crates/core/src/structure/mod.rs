//! Lattice-theoretic structure of a finite module: small and large
//! submodules, supplements, hollow and uniform pieces, lifting and related
//! module classes.
//!
//! Every predicate here is decided on the full submodule [`Lattice`]. Where a
//! shortcut exists (radical, socle, covers) a `*_literal` or `*_fast`
//! companion is provided so the two can be compared.

mod dims;

pub use dims::{hollow_dim, hollow_dim_literal, uniform_dim, uniform_dim_fast};

use crate::module::Lattice;
use crate::scalar::Scalar;
use crate::second::is_second_fast;

/// Definitional: `N + K = M` forces `K = M`.
pub fn is_small<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    small_flags(lat)[i]
}

fn small_flags<T: Scalar>(lat: &Lattice<T>) -> &[bool] {
    lat.cache.small.get_or_init(|| {
        (0..lat.len())
            .map(|i| (0..lat.len()).all(|k| k == lat.whole() || !lat.join_is_whole(i, k)))
            .collect()
    })
}

/// The radical: intersection of the maximal submodules.
pub fn radical_index<T: Scalar>(lat: &Lattice<T>) -> usize {
    lat.coatoms()
        .iter()
        .fold(lat.whole(), |acc, &c| lat.meet(acc, c))
}

/// The socle: sum of the minimal nonzero submodules.
pub fn socle_index<T: Scalar>(lat: &Lattice<T>) -> usize {
    lat.join_all(lat.atoms())
}

/// Small iff contained in the radical.
pub fn is_small_fast<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.leq(i, radical_index(lat))
}

/// Definitional: `N ∩ K ≠ 0` for every nonzero `K`.
pub fn is_large<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    large_flags(lat)[i]
}

fn large_flags<T: Scalar>(lat: &Lattice<T>) -> &[bool] {
    lat.cache.large.get_or_init(|| {
        (0..lat.len())
            .map(|i| (0..lat.len()).all(|k| k == lat.zero() || lat.meet_order(i, k) > 1))
            .collect()
    })
}

/// Large iff it contains the socle.
pub fn is_large_fast<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.leq(socle_index(lat), i)
}

/// Supplements of `N`: the minimal `K` with `N + K = M`, canonical order.
pub fn supplements_of<T: Scalar>(lat: &Lattice<T>, i: usize) -> &[usize] {
    &supplement_table(lat)[i]
}

fn supplement_table<T: Scalar>(lat: &Lattice<T>) -> &[Vec<usize>] {
    lat.cache.supplements.get_or_init(|| {
        (0..lat.len())
            .map(|n| {
                // the set of K with N + K = M is closed upwards, so a member
                // is minimal iff none of its lower covers is a member
                (0..lat.len())
                    .filter(|&k| {
                        lat.join_is_whole(n, k)
                            && lat.lower_covers(k).iter().all(|&c| !lat.join_is_whole(n, c))
                    })
                    .collect()
            })
            .collect()
    })
}

/// Supplements found by testing every proper submodule of each candidate.
pub fn supplements_of_literal<T: Scalar>(lat: &Lattice<T>, n: usize) -> Vec<usize> {
    (0..lat.len())
        .filter(|&k| {
            lat.join_is_whole(n, k)
                && (0..lat.len()).all(|j| j == k || !lat.leq(j, k) || !lat.join_is_whole(n, j))
        })
        .collect()
}

/// `N + K = M` for some proper `K` iff it holds for a maximal one, and a
/// minimal such `K` below it is then a proper supplement.
pub fn has_proper_supplement<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.coatoms().iter().any(|&c| lat.join_is_whole(i, c))
}

/// For every ideal `I` with `IK ≠ 0`, `IK` has a proper supplement.
pub fn satisfies_is<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.module()
        .exponent_divisors()
        .into_iter()
        .chain(std::iter::once(T::zero()))
        .all(|r| {
            let ik = lat.scale(i, &r);
            ik == lat.zero() || has_proper_supplement(lat, ik)
        })
}

/// Whether `N` is a direct summand of `M`.
pub fn is_summand<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    summand_flags(lat)[i]
}

fn summand_flags<T: Scalar>(lat: &Lattice<T>) -> &[bool] {
    lat.cache.summand.get_or_init(|| {
        (0..lat.len())
            .map(|i| !complements(lat, i).is_empty())
            .collect()
    })
}

/// All `K` with `N ∩ K = 0` and `N + K = M`.
pub fn complements<T: Scalar>(lat: &Lattice<T>, i: usize) -> Vec<usize> {
    let target = lat.module_order() / lat.order(i);
    (0..lat.len())
        .filter(|&k| lat.order(k) == target && lat.is_independent_pair(i, k))
        .collect()
}

/// A nonzero submodule is hollow iff it has exactly one maximal submodule.
pub fn is_hollow_submodule<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.cache
        .hollow
        .get_or_init(|| {
            (0..lat.len())
                .map(|i| i != lat.zero() && lat.lower_covers(i).len() == 1)
                .collect()
        })[i]
}

/// Literal hollowness of `H`: nonzero and every proper submodule of `H` is
/// small in `H`.
pub fn is_hollow_submodule_literal<T: Scalar>(lat: &Lattice<T>, h: usize) -> bool {
    if h == lat.zero() {
        return false;
    }
    let proper: Vec<usize> = lat.down_set(h).into_iter().filter(|&k| k != h).collect();
    proper
        .iter()
        .all(|&k| proper.iter().all(|&j| lat.join_order(k, j) != lat.order(h)))
}

/// A nonzero submodule is uniform iff exactly one minimal submodule lies
/// below it.
pub fn is_uniform_submodule<T: Scalar>(lat: &Lattice<T>, i: usize) -> bool {
    lat.cache
        .uniform
        .get_or_init(|| {
            (0..lat.len())
                .map(|i| {
                    i != lat.zero() && lat.atoms().iter().filter(|&&a| lat.leq(a, i)).count() == 1
                })
                .collect()
        })[i]
}

/// Literal uniformity of `U`: nonzero and any two nonzero submodules of `U`
/// meet nontrivially.
pub fn is_uniform_submodule_literal<T: Scalar>(lat: &Lattice<T>, u: usize) -> bool {
    if u == lat.zero() {
        return false;
    }
    let nonzero: Vec<usize> = lat
        .down_set(u)
        .into_iter()
        .filter(|&k| k != lat.zero())
        .collect();
    nonzero
        .iter()
        .all(|&a| nonzero.iter().all(|&b| lat.meet_order(a, b) > 1))
}

/// Hollow submodules not properly contained in another hollow submodule.
pub fn maximal_hollow_submodules<T: Scalar>(lat: &Lattice<T>) -> Vec<usize> {
    let hollow: Vec<usize> = (0..lat.len())
        .filter(|&i| is_hollow_submodule(lat, i))
        .collect();
    hollow
        .iter()
        .copied()
        .filter(|&h| !hollow.iter().any(|&g| g != h && lat.leq(h, g)))
        .collect()
}

/// `M` itself is hollow. The zero module is hollow vacuously.
pub fn is_hollow<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|i| i == lat.whole() || is_small(lat, i))
}

/// `M` itself is uniform. The zero module is uniform vacuously.
pub fn is_uniform<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|i| i == lat.zero() || is_large(lat, i))
}

/// Every submodule is a direct summand.
pub fn is_semisimple<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|i| is_summand(lat, i))
}

/// Every submodule has a supplement.
pub fn is_supplemented<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|i| !supplements_of(lat, i).is_empty())
}

/// For all `N` and all `U` with `N + U = M`, some supplement of `N` lies in
/// `U`.
pub fn is_amply_supplemented<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|n| {
        let sups = supplements_of(lat, n);
        (0..lat.len())
            .filter(|&u| lat.join_is_whole(n, u))
            .all(|u| sups.iter().any(|&s| lat.leq(s, u)))
    })
}

/// Every `N` contains a direct summand `X` with `N/X` small in `M/X`.
///
/// Over a finite module `N/X` is small in `M/X` iff it lies in the radical of
/// `M/X`, i.e. every maximal submodule containing `X` also contains `N`.
pub fn is_lifting<T: Scalar>(lat: &Lattice<T>) -> bool {
    let coatoms = lat.coatoms();
    (0..lat.len()).all(|n| {
        let mut below = lat.down_set(n);
        below.sort_by_key(|&x| std::cmp::Reverse(lat.order(x)));
        below.into_iter().any(|x| {
            is_summand(lat, x)
                && coatoms
                    .iter()
                    .all(|&c| !lat.leq(x, c) || lat.leq(n, c))
        })
    })
}

/// Lifting with smallness in `M/X` read through the correspondence between
/// submodules of `M/X` and submodules of `M` containing `X`.
pub fn is_lifting_literal<T: Scalar>(lat: &Lattice<T>) -> bool {
    (0..lat.len()).all(|n| {
        lat.down_set(n).into_iter().any(|x| {
            is_summand(lat, x)
                && lat
                    .up_set(x)
                    .into_iter()
                    .all(|k| k == lat.whole() || !lat.join_is_whole(n, k))
        })
    })
}

/// Lifting, and every maximal hollow submodule is second.
pub fn is_s_lifting<T: Scalar>(lat: &Lattice<T>) -> bool {
    is_lifting(lat)
        && maximal_hollow_submodules(lat)
            .iter()
            .all(|&h| is_second_fast(lat.get(h)).is_some())
}

/// Every submodule is `IM` for some ideal `I`.
pub fn is_multiplication<T: Scalar>(lat: &Lattice<T>) -> bool {
    let mut multiples: Vec<usize> = lat
        .module()
        .exponent_divisors()
        .iter()
        .map(|d| lat.scale(lat.whole(), d))
        .collect();
    multiples.sort_unstable();
    (0..lat.len()).all(|i| multiples.binary_search(&i).is_ok())
}

/// Every nonzero submodule contains a minimal nonzero submodule.
pub fn is_atomic<T: Scalar>(lat: &Lattice<T>) -> bool {
    let atoms = lat.atoms();
    (0..lat.len())
        .filter(|&i| i != lat.zero())
        .all(|i| atoms.iter().any(|&a| lat.leq(a, i)))
}

/// Every proper submodule lies in a maximal submodule.
pub fn is_coatomic<T: Scalar>(lat: &Lattice<T>) -> bool {
    let coatoms = lat.coatoms();
    (0..lat.len())
        .filter(|&i| i != lat.whole())
        .all(|i| coatoms.iter().any(|&c| lat.leq(i, c)))
}

/// Structural summary of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    pub is_semisimple: bool,
    pub is_hollow: bool,
    pub is_uniform: bool,
    pub is_supplemented: bool,
    pub is_amply_supplemented: bool,
    pub is_lifting: bool,
    pub is_s_lifting: bool,
    pub is_multiplication: bool,
    pub is_atomic: bool,
    pub is_coatomic: bool,
    pub hollow_dim: usize,
    pub uniform_dim: usize,
}

pub fn classify<T: Scalar>(lat: &Lattice<T>) -> StructureProfile {
    let is_lifting = is_lifting(lat);
    StructureProfile {
        is_semisimple: is_semisimple(lat),
        is_hollow: is_hollow(lat),
        is_uniform: is_uniform(lat),
        is_supplemented: is_supplemented(lat),
        is_amply_supplemented: is_amply_supplemented(lat),
        is_s_lifting: is_lifting && is_s_lifting(lat),
        is_lifting,
        is_multiplication: is_multiplication(lat),
        is_atomic: is_atomic(lat),
        is_coatomic: is_coatomic(lat),
        hollow_dim: hollow_dim(lat),
        uniform_dim: uniform_dim(lat),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FinModule, Limits};

    fn lat(f: &[i64]) -> Lattice<i64> {
        Lattice::new(&FinModule::new(f).unwrap(), &Limits::default()).unwrap()
    }

    fn idx(l: &Lattice<i64>, g: i64) -> usize {
        l.index_of(&l.module().element_span(&[g]).unwrap()).unwrap()
    }

    #[test]
    fn small_and_large_in_cyclic() {
        let z12 = lat(&[12]);
        assert!(is_small(&z12, idx(&z12, 6)));
        assert!(is_small(&z12, z12.zero()));
        assert!(!is_small(&z12, idx(&z12, 4)));
        assert!(!is_large(&z12, idx(&z12, 4)));
        let z8 = lat(&[8]);
        assert!(is_large(&z8, idx(&z8, 2)));
        assert!(is_large(&z8, z8.whole()));
    }

    #[test]
    fn supplements_examples() {
        let z6 = lat(&[6]);
        assert_eq!(supplements_of(&z6, idx(&z6, 2)), &[idx(&z6, 3)]);
        assert_eq!(supplements_of(&z6, z6.whole()), &[z6.zero()]);
        let z18 = lat(&[18]);
        assert_eq!(supplements_of(&z18, idx(&z18, 9)), &[idx(&z18, 2)]);
    }

    #[test]
    fn is_condition_in_z18() {
        let z18 = lat(&[18]);
        assert!(satisfies_is(&z18, idx(&z18, 9)));
        assert!(!satisfies_is(&z18, idx(&z18, 6)));
        assert!(satisfies_is(&z18, z18.zero()));
    }

    #[test]
    fn maximal_hollow_examples() {
        let z12 = lat(&[12]);
        let mut got = maximal_hollow_submodules(&z12);
        got.sort_unstable();
        let mut want = vec![idx(&z12, 3), idx(&z12, 4)];
        want.sort_unstable();
        assert_eq!(got, want);
        let z8 = lat(&[8]);
        assert_eq!(maximal_hollow_submodules(&z8), vec![z8.whole()]);
        let v = lat(&[2, 2]);
        assert_eq!(maximal_hollow_submodules(&v), v.atoms().to_vec());
    }

    #[test]
    fn profiles() {
        let p = classify(&lat(&[12]));
        assert!(p.is_lifting && !p.is_s_lifting && p.is_multiplication);
        assert_eq!(p.hollow_dim, 2);
        let p = classify(&lat(&[8]));
        assert!(p.is_lifting && !p.is_s_lifting && p.is_hollow && p.is_uniform);
        assert_eq!((p.hollow_dim, p.uniform_dim), (1, 1));
        let p = classify(&lat(&[2, 2]));
        assert!(p.is_semisimple && p.is_s_lifting && !p.is_multiplication);
        assert_eq!((p.hollow_dim, p.uniform_dim), (2, 2));
    }
}
