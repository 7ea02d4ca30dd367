use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::scalar::{prime_factors, valuation};

/// One module per isomorphism class of nonzero finite abelian group of order
/// at most `max_order`. Sorted by order, then number of invariant factors,
/// then the factors lexicographically, so `Z4` precedes `Z2 + Z2`.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub max_order: u64,
    pub modules: Vec<FinModule<i64>>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}

pub fn generate_corpus(max_order: u64) -> Result<Corpus> {
    if max_order < 2 {
        return Err(Error::CorpusBound(max_order));
    }
    let mut modules = Vec::new();
    for n in 2..=max_order as i64 {
        let mut chains: Vec<Vec<i64>> = vec![Vec::new()];
        for p in prime_factors(&n) {
            let e = valuation(&n, &p);
            let mut next = Vec::new();
            for chain in &chains {
                for parts in partitions(e, e) {
                    next.push(merge(chain, p, &parts));
                }
            }
            chains = next;
        }
        chains.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        for c in chains {
            modules.push(FinModule::new(&c)?);
        }
    }
    Ok(Corpus { max_order, modules })
}

/// Partitions of `n` into parts of size at most `max`, each non-increasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Folds the `p`-part with exponents `parts` (largest first) into an
/// ascending divisor chain, aligned at the top.
fn merge(chain: &[i64], p: i64, parts: &[u32]) -> Vec<i64> {
    let len = chain.len().max(parts.len());
    let mut out = vec![1i64; len];
    for (i, c) in chain.iter().rev().enumerate() {
        out[len - 1 - i] *= c;
    }
    for (i, e) in parts.iter().enumerate() {
        out[len - 1 - i] *= p.pow(*e);
    }
    out
}
