use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::{count_submodules, enumerate_submodules, FinModule, Submodule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Resource caps for exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest submodule lattice that will be enumerated.
    pub max_submodules: u128,
    /// Largest number of candidate summands per prime in representation
    /// searches.
    pub max_candidates: usize,
    /// Largest `submodules x order` product for element-set tables.
    pub max_element_bits: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_submodules: 1_000_000,
            max_candidates: 4096,
            max_element_bits: 1 << 30,
        }
    }
}

/// Memo tables filled on demand by the analysis layers.
pub(crate) struct LatticeCache {
    pub small: OnceLock<Vec<bool>>,
    pub large: OnceLock<Vec<bool>>,
    pub summand: OnceLock<Vec<bool>>,
    pub supplements: OnceLock<Vec<Vec<usize>>>,
    pub hollow: OnceLock<Vec<bool>>,
    pub uniform: OnceLock<Vec<bool>>,
}

impl Default for LatticeCache {
    fn default() -> Self {
        LatticeCache {
            small: OnceLock::new(),
            large: OnceLock::new(),
            summand: OnceLock::new(),
            supplements: OnceLock::new(),
            hollow: OnceLock::new(),
            uniform: OnceLock::new(),
        }
    }
}

struct Covers {
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

/// The full submodule lattice of a finite module with element-set tables,
/// so that containment and meets are bitset operations.
pub struct Lattice<T: Scalar> {
    module: FinModule<T>,
    limits: Limits,
    subs: Vec<Submodule<T>>,
    orders: Vec<u64>,
    elems: Vec<FixedBitSet>,
    by_elems: HashMap<FixedBitSet, usize>,
    by_hnf: HashMap<Matrix<T>, usize>,
    zero: usize,
    whole: usize,
    covers: OnceLock<Covers>,
    pub(crate) cache: LatticeCache,
}

impl<T: Scalar> Lattice<T> {
    pub fn new(module: &FinModule<T>, limits: &Limits) -> Result<Self> {
        let count = count_submodules(module, limits)?;
        let order = module.order().to_u64().filter(|&o| o <= 1 << 40);
        let needed = order.map_or(u128::MAX, |o| count.saturating_mul(o as u128));
        if needed > limits.max_element_bits {
            return Err(Error::ResourceCap {
                what: "element table bits",
                needed,
                limit: limits.max_element_bits,
            });
        }
        let order = order.expect("checked above") as usize;
        let subs = enumerate_submodules(module, limits)?;
        let d: Vec<u64> = module
            .invariant_factors()
            .iter()
            .map(|x| x.to_u64().expect("bounded by the order"))
            .collect();
        let elems: Vec<FixedBitSet> = subs
            .par_iter()
            .map(|s| element_set(s, &d, order))
            .collect();
        let orders = elems.iter().map(|e| e.count_ones(..) as u64).collect();
        let by_elems = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let by_hnf: HashMap<_, _> = subs
            .iter()
            .enumerate()
            .map(|(i, s)| (s.hnf().clone(), i))
            .collect();
        let zero = by_hnf[module.zero_submodule().hnf()];
        let whole = by_hnf[module.whole().hnf()];
        Ok(Lattice {
            module: module.clone(),
            limits: *limits,
            subs,
            orders,
            elems,
            by_elems,
            by_hnf,
            zero,
            whole,
            covers: OnceLock::new(),
            cache: LatticeCache::default(),
        })
    }

    pub fn module(&self) -> &FinModule<T> {
        &self.module
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn submodules(&self) -> &[Submodule<T>] {
        &self.subs
    }

    pub fn get(&self, i: usize) -> &Submodule<T> {
        &self.subs[i]
    }

    pub fn order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn module_order(&self) -> u64 {
        self.orders[self.whole]
    }

    pub fn elements(&self, i: usize) -> &FixedBitSet {
        &self.elems[i]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn whole(&self) -> usize {
        self.whole
    }

    pub fn index_of(&self, s: &Submodule<T>) -> Option<usize> {
        if s.parent() != &self.module {
            return None;
        }
        self.by_hnf.get(s.hnf()).copied()
    }

    /// `i <= j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elems[i].is_subset(&self.elems[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut e = self.elems[i].clone();
        e.intersect_with(&self.elems[j]);
        self.by_elems[&e]
    }

    pub fn meet_order(&self, i: usize, j: usize) -> u64 {
        self.elems[i].intersection_count(&self.elems[j]) as u64
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        if self.leq(i, j) {
            return j;
        }
        if self.leq(j, i) {
            return i;
        }
        let s = self.subs[i].sum(&self.subs[j]).expect("same parent");
        self.by_hnf[s.hnf()]
    }

    pub fn join_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.zero, |acc, &i| self.join(acc, i))
    }

    /// Order of `i + j`, from `|A + B| |A ∩ B| = |A| |B|`.
    pub fn join_order(&self, i: usize, j: usize) -> u64 {
        self.orders[i] * self.orders[j] / self.meet_order(i, j)
    }

    pub fn join_is_whole(&self, i: usize, j: usize) -> bool {
        self.join_order(i, j) == self.module_order()
    }

    pub fn is_independent_pair(&self, i: usize, j: usize) -> bool {
        self.meet_order(i, j) == 1
    }

    pub fn scale(&self, i: usize, a: &T) -> usize {
        self.by_hnf[self.subs[i].scale(a).hnf()]
    }

    /// Submodules contained in `i`, in canonical order.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(j, i)).collect()
    }

    /// Submodules containing `i`, in canonical order.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.covers().lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.covers().upper[i]
    }

    /// Minimal nonzero submodules.
    pub fn atoms(&self) -> &[usize] {
        self.upper_covers(self.zero)
    }

    /// Maximal proper submodules.
    pub fn coatoms(&self) -> &[usize] {
        self.lower_covers(self.whole)
    }

    fn covers(&self) -> &Covers {
        self.covers.get_or_init(|| {
            let mut by_order: HashMap<u64, Vec<usize>> = HashMap::new();
            for (i, &o) in self.orders.iter().enumerate() {
                by_order.entry(o).or_default().push(i);
            }
            let primes: Vec<u64> = self
                .module
                .primes()
                .iter()
                .map(|p| p.to_u64().expect("bounded by the order"))
                .collect();
            let upper: Vec<Vec<usize>> = (0..self.len())
                .into_par_iter()
                .map(|i| {
                    let mut out = Vec::new();
                    for p in &primes {
                        if let Some(bucket) = by_order.get(&(self.orders[i] * p)) {
                            out.extend(bucket.iter().copied().filter(|&j| self.leq(i, j)));
                        }
                    }
                    out.sort_unstable();
                    out
                })
                .collect();
            let mut lower = vec![Vec::new(); self.len()];
            for (i, ups) in upper.iter().enumerate() {
                for &j in ups {
                    lower[j].push(i);
                }
            }
            Covers { lower, upper }
        })
    }
}

fn element_set<T: Scalar>(s: &Submodule<T>, d: &[u64], order: usize) -> FixedBitSet {
    let k = d.len();
    let h = s.hnf();
    let mut pts: Vec<u64> = vec![0; k];
    let mut count = 1usize;
    for r in 0..k {
        let pivot = h[(r, r)].to_u64().expect("divides a factor");
        let mult = d[r] / pivot;
        if mult == 1 {
            continue;
        }
        let row: Vec<u64> = (0..k)
            .map(|c| h[(r, c)].mod_floor(&T::of(d[c])).to_u64().expect("reduced"))
            .collect();
        let mut next = Vec::with_capacity(pts.len() * mult as usize);
        for c in 0..mult {
            for e in 0..count {
                for col in 0..k {
                    next.push((pts[e * k + col] + c * row[col]) % d[col]);
                }
            }
        }
        pts = next;
        count *= mult as usize;
    }
    let mut bits = FixedBitSet::with_capacity(order);
    for e in 0..count {
        let idx = (0..k).fold(0u64, |acc, col| acc * d[col] + pts[e * k + col]);
        bits.insert(idx as usize);
    }
    bits
}
