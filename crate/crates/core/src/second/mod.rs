//! Second and secondary submodules, attached primes and representations.
//!
//! A nonzero submodule `K` is second when every ideal acts on it as `0` or as
//! the identity on `K` (`IK = 0` or `IK = K`), and secondary when every ring
//! element acts surjectively or nilpotently. Over the integers a second
//! submodule lies in `M[p]` for a single prime and a secondary one in the
//! primary component `M_p`; the fast paths below use exactly that and are
//! cross-checked against the definitions in the tests.

mod represent;

pub use represent::{
    all_minimal_representations, find_representation, is_isolated, minimize_representation,
    Kind, Representation,
};

use crate::error::Result;
use crate::module::{primary_subgroups, FinModule, Ideal, Limits, PrimeIdeal, Submodule};
use crate::scalar::{is_prime, prime_factors, Scalar};

/// Definitional second test: every ideal `(r)`, `r` ranging over the divisors
/// of the parent exponent and `0`, acts as `0` or as `K`.
pub fn is_second<T: Scalar>(k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
    if k.is_zero() {
        return None;
    }
    let actions_ok = k
        .parent()
        .exponent_divisors()
        .into_iter()
        .chain(std::iter::once(T::zero()))
        .all(|r| {
            let rk = k.scale(&r);
            rk.is_zero() || rk == *k
        });
    if !actions_ok {
        return None;
    }
    let ann = k.annihilator();
    is_prime(ann.generator()).then(|| PrimeIdeal::new_unchecked(ann.generator().clone()))
}

/// Prime-only second test: `pK` is `0` or `K` for every prime `p` dividing
/// the exponent, and exactly one prime kills `K`.
pub fn is_second_fast<T: Scalar>(k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
    if k.is_zero() {
        return None;
    }
    let mut killer = None;
    for p in k.parent().primes() {
        let pk = k.scale(&p);
        if pk.is_zero() {
            if killer.is_some() {
                return None;
            }
            killer = Some(p);
        } else if pk != *k {
            return None;
        }
    }
    killer.map(PrimeIdeal::new_unchecked)
}

/// Definitional secondary test: each residue `a` modulo the exponent of `K`
/// acts on `K` surjectively (`aK = K`) or nilpotently (`a^n K = 0`).
pub fn is_secondary<T: Scalar>(k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
    if k.is_zero() {
        return None;
    }
    let e = k.annihilator().generator().clone();
    let mut a = T::zero();
    while a < e {
        let ak = k.scale(&a);
        if ak != *k {
            // iterate a^n K until it stabilises
            let mut cur = ak;
            loop {
                let next = cur.scale(&a);
                if next == cur {
                    break;
                }
                cur = next;
            }
            if !cur.is_zero() {
                return None;
            }
        }
        a = a + T::one();
    }
    let primes = prime_factors(&e);
    (primes.len() == 1).then(|| PrimeIdeal::new_unchecked(primes[0].clone()))
}

/// Secondary iff the order is a prime power.
pub fn is_secondary_fast<T: Scalar>(k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
    let primes = prime_factors(&k.order());
    (primes.len() == 1).then(|| PrimeIdeal::new_unchecked(primes[0].clone()))
}

/// `Spec^s(M)`: all second submodules, canonical order.
pub fn spec_second<T: Scalar>(m: &FinModule<T>, limits: &Limits) -> Result<Vec<Submodule<T>>> {
    nonzero_sorted(m, 1, limits)
}

/// All secondary submodules, canonical order.
pub fn secondary_submodules<T: Scalar>(
    m: &FinModule<T>,
    limits: &Limits,
) -> Result<Vec<Submodule<T>>> {
    nonzero_sorted(m, u32::MAX, limits)
}

fn nonzero_sorted<T: Scalar>(m: &FinModule<T>, ceiling: u32, limits: &Limits) -> Result<Vec<Submodule<T>>> {
    let mut out = Vec::new();
    for p in m.primes() {
        out.extend(
            primary_subgroups(m, &p, ceiling, limits)?
                .into_iter()
                .filter(|s| !s.is_zero()),
        );
    }
    out.sort_by_cached_key(Submodule::canonical_key);
    Ok(out)
}

/// The largest `p`-second submodule `M[p] = (0 :_M p)`, if nonzero.
pub fn maximal_p_second<T: Scalar>(m: &FinModule<T>, p: &T) -> Option<Submodule<T>> {
    let s = m
        .zero_submodule()
        .colon_module(&Ideal::new(p.clone()))
        .expect("positive ideal");
    (!s.is_zero()).then_some(s)
}

/// Semisecond: the second submodules sum to `M`. The zero module is not
/// semisecond.
pub fn is_semisecond<T: Scalar>(m: &FinModule<T>, limits: &Limits) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let mut acc = m.zero_submodule();
    for k in spec_second(m, limits)? {
        acc = acc.sum(&k)?;
    }
    Ok(acc.is_whole())
}

/// Semisecond via the socle: `M` is semisecond iff it equals its socle.
pub fn is_semisecond_fast<T: Scalar>(m: &FinModule<T>) -> bool {
    !m.is_zero() && m.socle().is_whole()
}

/// Attached-prime data of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttReport<T> {
    /// Annihilators of all second submodules.
    pub att_all: Vec<PrimeIdeal<T>>,
    /// Attached primes of a minimal second representation; empty when none
    /// exists.
    pub att_main: Vec<PrimeIdeal<T>>,
    pub min_all: Vec<PrimeIdeal<T>>,
    pub max_all: Vec<PrimeIdeal<T>>,
    pub min_main: Vec<PrimeIdeal<T>>,
    pub max_main: Vec<PrimeIdeal<T>>,
}

pub fn att_report<T: Scalar>(m: &FinModule<T>, limits: &Limits) -> Result<AttReport<T>> {
    let mut att_all: Vec<PrimeIdeal<T>> = spec_second(m, limits)?
        .iter()
        .filter_map(is_second_fast)
        .collect();
    att_all.sort();
    att_all.dedup();
    let att_main = att_main(m).unwrap_or_default();
    Ok(AttReport {
        min_all: minimal_primes(&att_all),
        max_all: maximal_primes(&att_all),
        min_main: minimal_primes(&att_main),
        max_main: maximal_primes(&att_main),
        att_all,
        att_main,
    })
}

/// `att^s(M)` when `M` is second representable.
pub fn att_main<T: Scalar>(m: &FinModule<T>) -> Option<Vec<PrimeIdeal<T>>> {
    find_representation(m, Kind::Second).map(|r| r.prime_set())
}

/// Elements of `set` not strictly containing another element.
pub fn minimal_primes<T: Scalar>(set: &[PrimeIdeal<T>]) -> Vec<PrimeIdeal<T>> {
    extremes(set, |a, b| a.ideal().is_subset_of(&b.ideal()))
}

/// Elements of `set` not strictly contained in another element.
pub fn maximal_primes<T: Scalar>(set: &[PrimeIdeal<T>]) -> Vec<PrimeIdeal<T>> {
    extremes(set, |a, b| b.ideal().is_subset_of(&a.ideal()))
}

fn extremes<T: Scalar>(
    set: &[PrimeIdeal<T>],
    below: impl Fn(&PrimeIdeal<T>, &PrimeIdeal<T>) -> bool,
) -> Vec<PrimeIdeal<T>> {
    set.iter()
        .filter(|p| !set.iter().any(|q| q != *p && below(q, p)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[i64]) -> FinModule<i64> {
        FinModule::new(f).unwrap()
    }

    fn pr(p: i64) -> PrimeIdeal<i64> {
        PrimeIdeal::new(p).unwrap()
    }

    #[test]
    fn second_examples_in_z18() {
        let z = m(&[18]);
        let s = |g| z.element_span(&[g]).unwrap();
        assert_eq!(is_second(&s(9)), Some(pr(2)));
        assert_eq!(is_second(&s(6)), Some(pr(3)));
        assert_eq!(is_second(&s(3)), None);
        assert_eq!(is_second(&z.zero_submodule()), None);
        let spec = spec_second(&z, &Limits::default()).unwrap();
        assert_eq!(spec, vec![s(9), s(6)]);
    }

    #[test]
    fn secondary_examples() {
        let z18 = m(&[18]);
        assert_eq!(is_secondary(&z18.element_span(&[2]).unwrap()), Some(pr(3)));
        let z12 = m(&[12]);
        assert_eq!(is_secondary(&z12.element_span(&[3]).unwrap()), Some(pr(2)));
        assert_eq!(is_secondary(&z12.element_span(&[2]).unwrap()), None);
    }

    #[test]
    fn spectra() {
        let l = Limits::default();
        let z8 = m(&[8]);
        assert_eq!(spec_second(&z8, &l).unwrap(), vec![z8.element_span(&[4]).unwrap()]);
        let z30 = m(&[30]);
        let spec = spec_second(&z30, &l).unwrap();
        let gens: Vec<i64> = spec.iter().map(|s| s.generators()[0][0]).collect();
        assert_eq!(gens, vec![15, 10, 6]);
    }

    #[test]
    fn attached_primes() {
        let l = Limits::default();
        let r = att_report(&m(&[18]), &l).unwrap();
        assert_eq!(r.att_all, vec![pr(2), pr(3)]);
        assert!(r.att_main.is_empty());
        let r = att_report(&m(&[30]), &l).unwrap();
        assert_eq!(r.att_all, vec![pr(2), pr(3), pr(5)]);
        assert_eq!(r.att_main, r.att_all);
        assert_eq!(r.min_all, r.att_all);
        let r = att_report(&m(&[7]), &l).unwrap();
        assert_eq!(r.att_main, vec![pr(7)]);
    }

    #[test]
    fn semisecond() {
        let l = Limits::default();
        assert!(is_semisecond(&m(&[30]), &l).unwrap());
        assert!(!is_semisecond(&m(&[18]), &l).unwrap());
        assert!(is_semisecond(&m(&[2, 2]), &l).unwrap());
        assert!(!is_semisecond(&FinModule::<i64>::zero(), &l).unwrap());
        assert!(!is_semisecond_fast(&m(&[18])));
    }
}
