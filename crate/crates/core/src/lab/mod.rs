//! Machine verification of theorems about second representations over
//! exhaustive corpora of finite abelian groups.
//!
//! Each registry entry is checked as an implication on a single module:
//! hypotheses are decided with the defining tests on the submodule lattice,
//! and when they hold the conclusion is checked exhaustively. A verdict
//! carries a witness when the conclusion holds, a counterexample when it
//! fails, and neither when the hypotheses are not met.

mod context;
mod corpus;
mod theorems;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::Serializer;
use serde::Serialize;

pub use corpus::{generate_corpus, Corpus};

use crate::error::{Error, Result};
use crate::module::{FinModule, Limits};
use crate::scalar::Scalar;
use context::{Ctx, Lab};
use theorems::Finding;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    FirstUniquenessSecond,
    FirstUniquenessSecondary,
    SecondUniqueness,
    IrredundantFamilies,
    ExistenceMinimal,
    QuotientAtt,
    DirectSumAtt,
    LocalizationAtt,
    SumOfSeconds,
    HollowIsSecond,
    HollowSum,
    SupplementedHollow,
    CoatomicHollow,
    SLiftingDirect,
    AttAtomic,
    AttCoatomic,
    PrimaryHereditary,
    SecondaryDirect,
    LocalComponents,
    Multiplication,
    SemisimpleMultiplication,
    AtomicSemisimple,
    SemisecondSemisimple,
    InjectiveAtt,
    Chart,
}

impl Theorem {
    pub const ALL: [Theorem; 25] = [
        Theorem::FirstUniquenessSecond,
        Theorem::FirstUniquenessSecondary,
        Theorem::SecondUniqueness,
        Theorem::IrredundantFamilies,
        Theorem::ExistenceMinimal,
        Theorem::QuotientAtt,
        Theorem::DirectSumAtt,
        Theorem::LocalizationAtt,
        Theorem::SumOfSeconds,
        Theorem::HollowIsSecond,
        Theorem::HollowSum,
        Theorem::SupplementedHollow,
        Theorem::CoatomicHollow,
        Theorem::SLiftingDirect,
        Theorem::AttAtomic,
        Theorem::AttCoatomic,
        Theorem::PrimaryHereditary,
        Theorem::SecondaryDirect,
        Theorem::LocalComponents,
        Theorem::Multiplication,
        Theorem::SemisimpleMultiplication,
        Theorem::AtomicSemisimple,
        Theorem::SemisecondSemisimple,
        Theorem::InjectiveAtt,
        Theorem::Chart,
    ];

    /// Registry id.
    pub fn id(self) -> &'static str {
        use Theorem::*;
        match self {
            FirstUniquenessSecond => "first-uniqueness-second",
            FirstUniquenessSecondary => "first-uniqueness-secondary",
            SecondUniqueness => "second-uniqueness",
            IrredundantFamilies => "lemma-4.2",
            ExistenceMinimal => "existence-minimal",
            QuotientAtt => "remark-4.6-quotient",
            DirectSumAtt => "remark-4.6-dsum",
            LocalizationAtt => "remark-4.6-localize",
            SumOfSeconds => "prop-4.10",
            HollowIsSecond => "is-second-lemma",
            HollowSum => "prop-4.9",
            SupplementedHollow => "thm-4.18-1",
            CoatomicHollow => "thm-4.18-2",
            SLiftingDirect => "thm-4.15",
            AttAtomic => "prop-4.21-1",
            AttCoatomic => "prop-4.21-2",
            PrimaryHereditary => "thm-4.23-1",
            SecondaryDirect => "thm-4.23-2",
            LocalComponents => "thm-23-loc",
            Multiplication => "thm-4.25-3",
            SemisimpleMultiplication => "thm-4.25-4",
            AtomicSemisimple => "thm-4.25-5",
            SemisecondSemisimple => "semisecond-semisimple",
            InjectiveAtt => "thm-4.26",
            Chart => "figure-1",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        use Theorem::*;
        match self {
            FirstUniquenessSecond => "minimal second representations share their attached primes",
            FirstUniquenessSecondary => "minimal secondary representations share their attached primes",
            SecondUniqueness => "minimal representations agree on the summands of minimal primes",
            IrredundantFamilies => "an irredundant sum of second submodules is p-second iff each summand is",
            ExistenceMinimal => "a second representable module has a minimal second representation",
            QuotientAtt => "quotients are second representable with att(M/N) inside att(M)",
            DirectSumAtt => "att of a direct sum is the union of the att of the summands",
            LocalizationAtt => "localizing at a prime keeps exactly the attached primes inside it",
            SumOfSeconds => "semisecond with finitely many attached primes implies second representable",
            HollowIsSecond => "hollow submodules satisfying the IS-condition are second",
            HollowSum => "hollow representable with second maximal hollows implies second representable",
            SupplementedHollow => "supplemented with second maximal hollows implies second representable",
            CoatomicHollow => "coatomic, supplemented maximal submodules and second maximal hollows imply second representable",
            SLiftingDirect => "s-lifting with finite hollow dimension implies directly second representable",
            AttAtomic => "Att is atomic and Min(att) = Min(Att)",
            AttCoatomic => "with no small second submodule Att is coatomic and Max(att) = Max(Att)",
            PrimaryHereditary => "M is p-second (p-secondary) iff every nonzero submodule is",
            SecondaryDirect => "minimal secondary representations are direct",
            LocalComponents => "representability passes to the primary components",
            Multiplication => "multiplication iff Att = att = Min(att) and submodules are summand sums",
            SemisimpleMultiplication => "semisimple: multiplication iff att incomparable and seconds simple",
            AtomicSemisimple => "atomic: semisimple iff a sum of submodules whose submodules are all p-second",
            SemisecondSemisimple => "semisecond atomic Noetherian modules are semisimple",
            InjectiveAtt => "injective modules over Z/n, n squarefree: att inside the ring primes, equal iff faithful",
            Chart => "one-way implications between lifting, supplement and semisecond classes",
        }
    }

    pub fn from_id(id: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == id)
            .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::from_id(s)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evidence {
    pub summary: String,
    pub details: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Verdict<T: Scalar> {
    pub theorem: Theorem,
    pub module: FinModule<T>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Evidence>,
}

impl<T: Scalar> Verdict<T> {
    pub fn is_vacuous(&self) -> bool {
        self.witness.is_none() && self.counterexample.is_none()
    }
}

impl<T: Scalar> fmt::Display for Verdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, ev) = match (&self.witness, &self.counterexample) {
            (_, Some(c)) => ("FAIL", Some(c)),
            (Some(w), None) => ("pass", Some(w)),
            (None, None) => ("vacuous", None),
        };
        write!(f, "{} on {}: {tag}", self.theorem, self.module)?;
        if let Some(ev) = ev {
            write!(f, " ({})", ev.summary)?;
        }
        Ok(())
    }
}

fn verdict<T: Scalar>(theorem: Theorem, m: &FinModule<T>, finding: Finding) -> Verdict<T> {
    let (holds, witness, counterexample) = match finding {
        Finding::Vacuous => (true, None, None),
        Finding::Holds(e) => (true, Some(e), None),
        Finding::Fails(e) => (false, None, Some(e)),
    };
    Verdict {
        theorem,
        module: m.clone(),
        holds,
        witness,
        counterexample,
    }
}

/// Checks one theorem on one nonzero module.
pub fn verify_theorem<T: Scalar>(id: &str, m: &FinModule<T>) -> Result<Verdict<T>> {
    verify_theorem_with(Theorem::from_id(id)?, m, &Limits::default())
}

pub fn verify_theorem_with<T: Scalar>(
    theorem: Theorem,
    m: &FinModule<T>,
    limits: &Limits,
) -> Result<Verdict<T>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let lab = Lab::new(limits);
    let cx = lab.ctx(m);
    theorems::check(theorem, &lab, &cx).map(|f| verdict(theorem, m, f))
}

/// Outcome counts for one theorem over a corpus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub id: String,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// A (theorem, module) pair that hit a resource cap.
#[derive(Clone, Debug, Serialize)]
pub struct Skip {
    pub theorem: Theorem,
    pub module: FinModule<i64>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub max_order: u64,
    pub modules: usize,
    pub theorems: Vec<Tally>,
    pub counterexamples: Vec<Verdict<i64>>,
    pub skipped: Vec<Skip>,
    /// Wall-clock time; kept out of the serialized report so identical runs
    /// serialize identically.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.theorems.iter().map(|t| t.fail).sum()
    }

    pub fn tally(&self, t: Theorem) -> Option<&Tally> {
        self.theorems.iter().find(|x| x.id == t.id())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus: {} modules of order <= {}",
            self.modules, self.max_order
        );
        let _ = writeln!(
            out,
            "{:<28} {:>6} {:>8} {:>6} {:>8}",
            "theorem", "pass", "vacuous", "fail", "skipped"
        );
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "{:<28} {:>6} {:>8} {:>6} {:>8}",
                t.id, t.pass, t.vacuous, t.fail, t.skipped
            );
        }
        for v in &self.counterexamples {
            let _ = writeln!(out, "counterexample: {v}");
            if let Some(c) = &v.counterexample {
                let _ = writeln!(out, "  {}", c.details);
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "skipped: {} on {}: {}", s.theorem, s.module, s.reason);
        }
        let _ = writeln!(out, "elapsed: {:.2?}", self.elapsed);
        out
    }
}

enum Outcome {
    Checked(Verdict<i64>),
    Skipped(Skip),
}

/// Runs `theorems` over every module of order at most `max_order` using
/// `jobs` worker threads. Aggregation follows corpus order, so the report
/// does not depend on `jobs`.
pub fn run_suite(max_order: u64, theorems: &[Theorem], jobs: usize, limits: &Limits) -> Result<Report> {
    let start = Instant::now();
    let corpus = generate_corpus(max_order)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let outcomes: Vec<Vec<Outcome>> = pool.install(|| {
        corpus
            .modules
            .par_iter()
            .map(|m| {
                let lab = Lab::new(limits);
                let cx = lab.ctx(m);
                theorems.iter().map(|&t| run_one(t, &lab, &cx)).collect()
            })
            .collect()
    });
    let mut tallies: Vec<Tally> = theorems
        .iter()
        .map(|t| Tally {
            id: t.id().to_string(),
            ..Tally::default()
        })
        .collect();
    let mut counterexamples = Vec::new();
    let mut skipped = Vec::new();
    for row in outcomes {
        for (tally, outcome) in tallies.iter_mut().zip(row) {
            match outcome {
                Outcome::Skipped(s) => {
                    tally.skipped += 1;
                    skipped.push(s);
                }
                Outcome::Checked(v) if v.counterexample.is_some() => {
                    tally.fail += 1;
                    counterexamples.push(v);
                }
                Outcome::Checked(v) if v.is_vacuous() => tally.vacuous += 1,
                Outcome::Checked(_) => tally.pass += 1,
            }
        }
    }
    Ok(Report {
        max_order,
        modules: corpus.len(),
        theorems: tallies,
        counterexamples,
        skipped,
        elapsed: start.elapsed(),
    })
}

fn run_one(t: Theorem, lab: &Lab<i64>, cx: &Ctx<i64>) -> Outcome {
    match theorems::check(t, lab, cx) {
        Ok(f) => Outcome::Checked(verdict(t, cx.module(), f)),
        Err(e) => Outcome::Skipped(Skip {
            theorem: t,
            module: cx.module().clone(),
            reason: e.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[i64]) -> FinModule<i64> {
        FinModule::new(f).unwrap()
    }

    #[test]
    fn registry_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::from_id(t.id()).unwrap(), t);
        }
        assert!(matches!(Theorem::from_id("nope"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn z30_second_uniqueness() {
        let v = verify_theorem("second-uniqueness", &m(&[30])).unwrap();
        assert!(v.holds && v.witness.is_some());
        let second = &v.witness.unwrap().details[0];
        assert_eq!(second["kind"], "second");
        assert_eq!(second["representations"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn z18_secondary_direct() {
        let v = verify_theorem("thm-4.23-2", &m(&[18])).unwrap();
        let w = v.witness.unwrap();
        let rep = &w.details["representations"][0];
        assert_eq!(rep["is_direct"], true);
        let orders: Vec<_> = rep["summands"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["submodule"]["order"].as_i64().unwrap())
            .collect();
        assert_eq!(orders, vec![2, 9]);
    }

    #[test]
    fn z6_att_atomic() {
        let v = verify_theorem("prop-4.21-1", &m(&[6])).unwrap();
        assert_eq!(v.witness.unwrap().details["min_att"], serde_json::json!([2, 3]));
    }

    #[test]
    fn z12_is_not_second_representable() {
        assert!(verify_theorem("existence-minimal", &m(&[12])).unwrap().is_vacuous());
        assert!(!verify_theorem("first-uniqueness-secondary", &m(&[12])).unwrap().is_vacuous());
    }

    #[test]
    fn zero_module_rejected() {
        assert_eq!(
            verify_theorem("figure-1", &FinModule::<i64>::zero()).unwrap_err(),
            Error::ZeroModule
        );
    }

    #[test]
    fn order_two_suite() {
        let r = run_suite(2, &Theorem::ALL, 1, &Limits::default()).unwrap();
        assert_eq!(r.modules, 1);
        assert_eq!(r.failures(), 0);
        assert!(r.skipped.is_empty());
    }
}
