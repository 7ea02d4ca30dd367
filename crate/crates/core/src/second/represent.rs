use super::{is_second_fast, is_secondary_fast, maximal_p_second};
use crate::error::{Error, Result};
use crate::module::{primary_subgroups, FinModule, Limits, PrimeIdeal, Submodule};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Second,
    Secondary,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Second => "second",
            Kind::Secondary => "secondary",
        }
    }

    /// The attached prime of `k` for this kind, if `k` qualifies.
    pub fn attached_prime<T: Scalar>(self, k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
        match self {
            Kind::Second => is_second_fast(k),
            Kind::Secondary => is_secondary_fast(k),
        }
    }

    fn ceiling(self) -> u32 {
        match self {
            Kind::Second => 1,
            Kind::Secondary => u32::MAX,
        }
    }
}

/// `M = K_1 + ... + K_n` with each `K_i` second (or secondary) with attached
/// prime `attached[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<T: Scalar> {
    pub kind: Kind,
    pub summands: Vec<Submodule<T>>,
    pub attached: Vec<PrimeIdeal<T>>,
    pub is_minimal: bool,
    pub is_direct: bool,
}

impl<T: Scalar> Representation<T> {
    /// Wraps a family of summands, computing attached primes and both flags.
    /// Returns `None` if the family is empty or some summand is not of the
    /// requested kind.
    pub fn new(kind: Kind, summands: Vec<Submodule<T>>) -> Option<Self> {
        if summands.is_empty() {
            return None;
        }
        let attached = summands
            .iter()
            .map(|k| kind.attached_prime(k))
            .collect::<Option<Vec<_>>>()?;
        let mut rep = Representation {
            kind,
            summands,
            attached,
            is_minimal: false,
            is_direct: false,
        };
        rep.is_minimal = rep.distinct_primes() && rep.irredundant();
        rep.is_direct = rep.direct();
        Some(rep)
    }

    pub fn parent(&self) -> &FinModule<T> {
        self.summands[0].parent()
    }

    pub fn sum(&self) -> Submodule<T> {
        sum_of(self.parent(), self.summands.iter())
    }

    pub fn is_complete(&self) -> bool {
        self.sum().is_whole()
    }

    /// Attached primes, sorted.
    pub fn prime_set(&self) -> Vec<PrimeIdeal<T>> {
        let mut a = self.attached.clone();
        a.sort();
        a.dedup();
        a
    }

    pub fn summand_for(&self, p: &PrimeIdeal<T>) -> Option<&Submodule<T>> {
        self.attached
            .iter()
            .position(|q| q == p)
            .map(|i| &self.summands[i])
    }

    fn others(&self, i: usize) -> Submodule<T> {
        sum_of(
            self.parent(),
            self.summands
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| s),
        )
    }

    fn distinct_primes(&self) -> bool {
        self.prime_set().len() == self.attached.len()
    }

    fn irredundant(&self) -> bool {
        (0..self.summands.len()).all(|i| !self.others(i).contains(&self.summands[i]).expect("same parent"))
    }

    fn direct(&self) -> bool {
        (0..self.summands.len()).all(|i| {
            self.others(i)
                .intersect(&self.summands[i])
                .expect("same parent")
                .is_zero()
        })
    }
}

fn sum_of<'a, T: Scalar>(
    parent: &FinModule<T>,
    items: impl Iterator<Item = &'a Submodule<T>>,
) -> Submodule<T> {
    items.fold(parent.zero_submodule(), |acc, s| acc.sum(s).expect("same parent"))
}

/// Merges summands sharing an attached prime, then drops redundant summands
/// in canonical order until the representation is minimal.
pub fn minimize_representation<T: Scalar>(r: &Representation<T>) -> Representation<T> {
    let parent = r.parent().clone();
    let mut merged: Vec<(PrimeIdeal<T>, Submodule<T>)> = Vec::new();
    for (k, p) in r.summands.iter().zip(&r.attached) {
        match merged.iter_mut().find(|(q, _)| q == p) {
            Some((_, acc)) => *acc = acc.sum(k).expect("same parent"),
            None => merged.push((p.clone(), k.clone())),
        }
    }
    merged.sort_by_cached_key(|(_, k)| k.canonical_key());
    'outer: loop {
        for i in 0..merged.len() {
            if merged.len() == 1 {
                break 'outer;
            }
            let others = sum_of(
                &parent,
                merged.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, (_, s))| s),
            );
            if others.contains(&merged[i].1).expect("same parent") {
                merged.remove(i);
                continue 'outer;
            }
        }
        break;
    }
    let (attached, summands): (Vec<_>, Vec<_>) = merged.into_iter().unzip();
    let mut out = Representation {
        kind: r.kind,
        summands,
        attached,
        is_minimal: true,
        is_direct: false,
    };
    out.is_direct = out.direct();
    out
}

/// A representation of `M` if one exists. Second: the largest `p`-second
/// submodules `M[p]`; secondary: the nonzero primary components. The result
/// is minimized.
pub fn find_representation<T: Scalar>(m: &FinModule<T>, kind: Kind) -> Option<Representation<T>> {
    if m.is_zero() {
        return None;
    }
    let summands: Vec<Submodule<T>> = match kind {
        Kind::Second => m
            .primes()
            .iter()
            .filter_map(|p| maximal_p_second(m, p))
            .collect(),
        Kind::Secondary => m
            .primes()
            .into_iter()
            .map(|p| m.primary_component(&PrimeIdeal::new_unchecked(p)))
            .collect(),
    };
    let rep = Representation::new(kind, summands)?;
    rep.is_complete().then(|| minimize_representation(&rep))
}

/// Every minimal representation of `M` of the given kind, canonical order.
///
/// Minimal representations have pairwise distinct attached primes, so the
/// search picks at most one candidate per prime.
pub fn all_minimal_representations<T: Scalar>(
    m: &FinModule<T>,
    kind: Kind,
    limits: &Limits,
) -> Result<Vec<Representation<T>>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let budget = Limits {
        max_submodules: limits.max_candidates as u128 + 1,
        ..*limits
    };
    let primes = m.primes();
    let mut options: Vec<Vec<Submodule<T>>> = Vec::new();
    for p in &primes {
        let subs = primary_subgroups(m, p, kind.ceiling(), &budget).map_err(|e| match e {
            Error::ResourceCap { needed, .. } => Error::ResourceCap {
                what: "representation candidates per prime",
                needed: needed - 1,
                limit: limits.max_candidates as u128,
            },
            e => e,
        })?;
        options.push(subs);
    }
    // the largest contribution each prime can make
    let tops: Vec<Submodule<T>> = options
        .iter()
        .map(|o| sum_of(m, o.iter()))
        .collect();
    // keep a choice for prime i only if it can still reach M with the
    // largest choices at the other primes; index 0 (zero) means absent
    for i in 0..options.len() {
        let rest = sum_of(m, tops.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| t));
        options[i].retain(|x| rest.sum(x).expect("same parent").is_whole());
    }
    let mut found = Vec::new();
    let mut choice = Vec::with_capacity(options.len());
    search(m, kind, &options, &mut choice, &mut found);
    found.sort_by_cached_key(|r: &Representation<T>| {
        r.summands.iter().map(Submodule::canonical_key).collect::<Vec<_>>()
    });
    Ok(found)
}

fn search<'a, T: Scalar>(
    m: &FinModule<T>,
    kind: Kind,
    options: &'a [Vec<Submodule<T>>],
    choice: &mut Vec<&'a Submodule<T>>,
    found: &mut Vec<Representation<T>>,
) {
    let i = choice.len();
    if i == options.len() {
        let mut summands: Vec<Submodule<T>> = choice
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| (*s).clone())
            .collect();
        summands.sort_by_cached_key(Submodule::canonical_key);
        if let Some(rep) = Representation::new(kind, summands) {
            if rep.is_minimal && rep.is_complete() {
                found.push(rep);
            }
        }
        return;
    }
    for x in &options[i] {
        choice.push(x);
        search(m, kind, options, choice, found);
        choice.pop();
    }
}

/// Whether `a` is downward closed in `att`: every `p` in `att` contained in
/// some member of `a` belongs to `a`.
pub fn is_isolated<T: Scalar>(a: &[PrimeIdeal<T>], att: &[PrimeIdeal<T>]) -> Result<bool> {
    if !a.iter().all(|p| att.contains(p)) {
        return Err(Error::NotSubset);
    }
    Ok(att.iter().all(|p| {
        !a.iter().any(|q| p.ideal().is_subset_of(&q.ideal())) || a.contains(p)
    }))
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
    fn z18_representations() {
        let z = m(&[18]);
        assert!(find_representation(&z, Kind::Second).is_none());
        let r = find_representation(&z, Kind::Secondary).unwrap();
        assert_eq!(r.summands, vec![z.element_span(&[9]).unwrap(), z.element_span(&[2]).unwrap()]);
        assert_eq!(r.attached, vec![pr(2), pr(3)]);
        assert!(r.is_minimal && r.is_direct);
    }

    #[test]
    fn z30_second_representation() {
        let z = m(&[30]);
        let r = find_representation(&z, Kind::Second).unwrap();
        assert_eq!(r.prime_set(), vec![pr(2), pr(3), pr(5)]);
        assert_eq!(r.summands.len(), 3);
        let all = all_minimal_representations(&z, Kind::Second, &Limits::default()).unwrap();
        assert_eq!(all, vec![r]);
    }

    #[test]
    fn minimize_drops_redundant() {
        let z = m(&[30]);
        let s = |g| z.element_span(&[g]).unwrap();
        let padded = Representation::new(Kind::Second, vec![s(15), s(10), s(6), s(10)]).unwrap();
        assert!(!padded.is_minimal);
        let r = minimize_representation(&padded);
        assert!(r.is_minimal);
        assert_eq!(r.summands.len(), 3);
        assert_eq!(minimize_representation(&r), r);
    }

    #[test]
    fn minimize_merges_same_prime() {
        let v = m(&[2, 2]);
        let a = v.element_span(&[1, 0]).unwrap();
        let b = v.element_span(&[0, 1]).unwrap();
        let r = minimize_representation(&Representation::new(Kind::Second, vec![a, b]).unwrap());
        assert_eq!(r.summands, vec![v.whole()]);
        assert_eq!(r.attached, vec![pr(2)]);
    }

    #[test]
    fn exhaustive_lists() {
        let l = Limits::default();
        assert!(all_minimal_representations(&m(&[18]), Kind::Second, &l).unwrap().is_empty());
        let z4 = m(&[4]);
        let reps = all_minimal_representations(&z4, Kind::Secondary, &l).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].summands, vec![z4.whole()]);
    }

    #[test]
    fn candidate_cap() {
        let tight = Limits {
            max_candidates: 3,
            ..Limits::default()
        };
        assert!(matches!(
            all_minimal_representations(&m(&[2, 2]), Kind::Second, &tight),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn isolated_subsets() {
        let att = vec![pr(2), pr(3)];
        assert!(is_isolated(&att, &att).unwrap());
        assert!(is_isolated(&[], &att).unwrap());
        assert!(is_isolated(&[pr(2)], &att).unwrap());
        assert_eq!(is_isolated(&[pr(5)], &att), Err(Error::NotSubset));
    }
}
