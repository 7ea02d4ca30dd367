use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::Result;
use crate::module::{FinModule, Lattice, Limits, PrimeIdeal, Submodule};
use crate::scalar::Scalar;
use crate::second::{
    all_minimal_representations, find_representation, is_second, is_secondary, Kind,
    Representation,
};

/// Per-module data shared by the theorem checks, computed on first use.
///
/// Contexts are confined to one thread: a corpus worker owns the context of
/// its module and of every auxiliary module (quotients, components) it
/// builds.
pub(crate) struct Ctx<T: Scalar> {
    m: FinModule<T>,
    limits: Limits,
    lattice: OnceCell<Result<Lattice<T>>>,
    flags: [OnceCell<Vec<Option<PrimeIdeal<T>>>>; 2],
    reps: [OnceCell<Result<Vec<Representation<T>>>>; 2],
    main: OnceCell<Option<Representation<T>>>,
    iso: OnceCell<Vec<FinModule<T>>>,
}

fn slot(kind: Kind) -> usize {
    match kind {
        Kind::Second => 0,
        Kind::Secondary => 1,
    }
}

/// The defining test for `kind`, without shortcuts.
pub(crate) fn definitional<T: Scalar>(kind: Kind, k: &Submodule<T>) -> Option<PrimeIdeal<T>> {
    match kind {
        Kind::Second => is_second(k),
        Kind::Secondary => is_secondary(k),
    }
}

/// Complete, minimal, and every summand passes the defining test with its
/// recorded prime.
pub(crate) fn sound<T: Scalar>(r: &Representation<T>) -> bool {
    r.is_complete()
        && r.is_minimal
        && r
            .summands
            .iter()
            .zip(&r.attached)
            .all(|(k, p)| definitional(r.kind, k).as_ref() == Some(p))
}

impl<T: Scalar> Ctx<T> {
    pub fn new(m: &FinModule<T>, limits: &Limits) -> Self {
        Ctx {
            m: m.clone(),
            limits: *limits,
            lattice: OnceCell::new(),
            flags: [OnceCell::new(), OnceCell::new()],
            reps: [OnceCell::new(), OnceCell::new()],
            main: OnceCell::new(),
            iso: OnceCell::new(),
        }
    }

    pub fn module(&self) -> &FinModule<T> {
        &self.m
    }

    pub fn lattice(&self) -> Result<&Lattice<T>> {
        self.lattice
            .get_or_init(|| Lattice::new(&self.m, &self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Attached prime of each lattice element under the defining test.
    pub fn flags(&self, kind: Kind) -> Result<&[Option<PrimeIdeal<T>>]> {
        let lat = self.lattice()?;
        Ok(self.flags[slot(kind)].get_or_init(|| {
            lat.submodules()
                .iter()
                .map(|k| definitional(kind, k))
                .collect()
        }))
    }

    /// Whether `M` is the sum of its submodules of the given kind. A finite
    /// module has finitely many, so this is representability.
    pub fn representable(&self, kind: Kind) -> Result<bool> {
        if self.m.is_zero() {
            return Ok(false);
        }
        let lat = self.lattice()?;
        let members: Vec<usize> = self
            .flags(kind)?
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_some())
            .map(|(i, _)| i)
            .collect();
        Ok(lat.join_all(&members) == lat.whole())
    }

    /// Annihilators of all second submodules.
    pub fn att_all(&self) -> Result<Vec<PrimeIdeal<T>>> {
        let mut out: Vec<_> = self.flags(Kind::Second)?.iter().flatten().cloned().collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// The minimal second representation built from the `M[p]`.
    pub fn main(&self) -> Option<&Representation<T>> {
        self.main
            .get_or_init(|| find_representation(&self.m, Kind::Second))
            .as_ref()
    }

    /// Attached primes when `M` is second representable and the built
    /// representation passes the defining tests; `None` otherwise.
    pub fn att(&self) -> Result<Option<Vec<PrimeIdeal<T>>>> {
        if !self.representable(Kind::Second)? {
            return Ok(None);
        }
        Ok(self.main().filter(|r| sound(r)).map(Representation::prime_set))
    }

    pub fn reps(&self, kind: Kind) -> Result<&[Representation<T>]> {
        self.reps[slot(kind)]
            .get_or_init(|| all_minimal_representations(&self.m, kind, &self.limits))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Isomorphism type of each lattice element.
    pub fn iso_types(&self) -> Result<&[FinModule<T>]> {
        let lat = self.lattice()?;
        Ok(self.iso.get_or_init(|| {
            lat.submodules()
                .iter()
                .map(Submodule::isomorphism_type)
                .collect()
        }))
    }
}

/// Contexts of auxiliary modules, keyed by isomorphism type.
pub(crate) struct Lab<T: Scalar> {
    limits: Limits,
    memo: RefCell<HashMap<FinModule<T>, Rc<Ctx<T>>>>,
}

impl<T: Scalar> Lab<T> {
    pub fn new(limits: &Limits) -> Self {
        Lab {
            limits: *limits,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn ctx(&self, m: &FinModule<T>) -> Rc<Ctx<T>> {
        self.memo
            .borrow_mut()
            .entry(m.clone())
            .or_insert_with(|| Rc::new(Ctx::new(m, &self.limits)))
            .clone()
    }
}
