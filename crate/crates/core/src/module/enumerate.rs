use super::{canonical_hnf, FinModule, Limits, Submodule};
use crate::error::{Error, Result};
use crate::scalar::{pow, valuation, Scalar};

/// Subgroups of `Z/p^{a_1} + ... + Z/p^{a_r}` as upper-triangular Hermite
/// matrices, built bottom-up: row `i` has pivot `p^e` dividing `p^{a_i}` and
/// a reduced tail `t` with `p^{a_i - e} t` in the lattice of the rows below.
struct Local<'a, T> {
    p: &'a T,
    moduli: Vec<T>,
    budget: u128,
    count: u128,
}

impl<T: Scalar> Local<'_, T> {
    fn run(&mut self, level: usize, rows: &mut Vec<Vec<T>>, emit: &mut dyn FnMut(&[Vec<T>])) -> Result<()> {
        let r = self.moduli.len();
        if level == 0 {
            self.count += 1;
            if self.count > self.budget {
                return Err(Error::ResourceCap {
                    what: "submodules",
                    needed: self.count,
                    limit: self.budget,
                });
            }
            emit(rows);
            return Ok(());
        }
        let i = level - 1;
        let q = self.moduli[i].clone();
        let a = valuation(&q, self.p);
        for e in 0..=a {
            let h = pow(self.p, e);
            let mult = q.clone() / h.clone();
            let bounds: Vec<T> = (i + 1..r).map(|j| rows[j][j].clone()).collect();
            let mut tail = vec![T::zero(); bounds.len()];
            loop {
                if self.admissible(rows, i, &mult, &tail) {
                    let mut row = vec![T::zero(); r];
                    row[i] = h.clone();
                    row[i + 1..].clone_from_slice(&tail);
                    rows[i] = row;
                    self.run(i, rows, emit)?;
                }
                if !advance(&mut tail, &bounds) {
                    break;
                }
            }
        }
        Ok(())
    }

    fn admissible(&self, rows: &[Vec<T>], i: usize, mult: &T, tail: &[T]) -> bool {
        let r = self.moduli.len();
        let mut v: Vec<T> = tail.iter().map(|t| t.clone() * mult.clone()).collect();
        for j in i + 1..r {
            let c = j - i - 1;
            let q = v[c].div_floor(&rows[j][j]);
            if !q.is_zero() {
                for l in j..r {
                    v[l - i - 1] = v[l - i - 1].clone() - q.clone() * rows[j][l].clone();
                }
            }
            if !v[c].is_zero() {
                return false;
            }
        }
        true
    }
}

fn advance<T: Scalar>(digits: &mut [T], bounds: &[T]) -> bool {
    for (d, b) in digits.iter_mut().zip(bounds).rev() {
        *d = d.clone() + T::one();
        if *d < *b {
            return true;
        }
        *d = T::zero();
    }
    false
}

fn active_coords<T: Scalar>(module: &FinModule<T>, p: &T) -> Vec<usize> {
    let d = module.invariant_factors();
    (0..d.len()).filter(|&i| d[i].is_multiple_of(p)).collect()
}

fn local_moduli<T: Scalar>(module: &FinModule<T>, p: &T, active: &[usize], ceiling: u32) -> Vec<T> {
    let d = module.invariant_factors();
    active
        .iter()
        .map(|&i| pow(p, valuation(&d[i], p).min(ceiling)))
        .collect()
}

fn check_total(counts: &[u128], limit: u128) -> Result<u128> {
    let mut total: u128 = 1;
    for &c in counts {
        total = total.saturating_mul(c);
        if total > limit {
            return Err(Error::ResourceCap {
                what: "submodules",
                needed: total,
                limit,
            });
        }
    }
    Ok(total)
}

/// Exact number of submodules, aborting once it exceeds the cap.
pub fn count_submodules<T: Scalar>(module: &FinModule<T>, limits: &Limits) -> Result<u128> {
    let mut counts = Vec::new();
    for p in module.primes() {
        let active = active_coords(module, &p);
        let moduli = local_moduli(module, &p, &active, u32::MAX);
        let mut local = Local {
            p: &p,
            budget: limits.max_submodules,
            count: 0,
            moduli,
        };
        let mut rows = vec![Vec::new(); active.len()];
        local.run(active.len(), &mut rows, &mut |_| {})?;
        counts.push(local.count);
    }
    check_total(&counts, limits.max_submodules)
}

/// Submodules of `M_p[p^ceiling]`, the elements of `p`-power order dividing
/// `p^ceiling`, in canonical order. `ceiling = 1` gives the subgroups of the
/// `p`-socle, `u32::MAX` those of the whole `p`-primary component.
pub fn primary_subgroups<T: Scalar>(
    module: &FinModule<T>,
    p: &T,
    ceiling: u32,
    limits: &Limits,
) -> Result<Vec<Submodule<T>>> {
    let d = module.invariant_factors();
    let active = active_coords(module, p);
    let moduli = local_moduli(module, p, &active, ceiling);
    let cofactors: Vec<T> = active
        .iter()
        .zip(&moduli)
        .map(|(&i, q)| d[i].clone() / q.clone())
        .collect();
    let mut local = Local {
        p,
        budget: limits.max_submodules,
        count: 0,
        moduli,
    };
    let mut found = Vec::new();
    let mut rows = vec![Vec::new(); active.len()];
    local.run(active.len(), &mut rows, &mut |rows| {
        let gens = rows.iter().map(|row| {
            let mut v = vec![T::zero(); d.len()];
            for (c, &i) in active.iter().enumerate() {
                v[i] = row[c].clone() * cofactors[c].clone();
            }
            v
        });
        found.push(Submodule::from_hnf(module.clone(), canonical_hnf(gens, d)));
    })?;
    found.sort_by_cached_key(Submodule::generators);
    Ok(found)
}

/// All submodules in canonical order (see [`Submodule::canonical_key`]).
pub fn enumerate_submodules<T: Scalar>(
    module: &FinModule<T>,
    limits: &Limits,
) -> Result<Vec<Submodule<T>>> {
    count_submodules(module, limits)?;
    let parts = module
        .primes()
        .iter()
        .map(|p| primary_subgroups(module, p, u32::MAX, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = vec![module.zero_submodule()];
    for part in &parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for a in &acc {
            for b in part {
                next.push(a.sum(b).expect("same parent"));
            }
        }
        acc = next;
    }
    acc.sort_by_cached_key(Submodule::canonical_key);
    Ok(acc)
}
