use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::context::{sound, Ctx, Lab};
use super::{Evidence, Theorem};
use crate::error::Result;
use crate::json;
use crate::module::{FinModule, Lattice, PrimeIdeal, Quotient};
use crate::scalar::{pow, valuation, Scalar};
use crate::second::{maximal_primes, minimal_primes, Kind, Representation};
use crate::structure::{
    hollow_dim, is_amply_supplemented, is_atomic, is_coatomic, is_hollow_submodule, is_lifting,
    is_multiplication, is_s_lifting, is_semisimple, is_small, is_summand, is_supplemented,
    maximal_hollow_submodules, satisfies_is, supplements_of,
};

pub(crate) enum Finding {
    Vacuous,
    Holds(Evidence),
    Fails(Evidence),
}

fn holds(summary: impl Into<String>, details: Value) -> Result<Finding> {
    Ok(Finding::Holds(Evidence {
        summary: summary.into(),
        details,
    }))
}

fn fails(summary: impl Into<String>, details: Value) -> Result<Finding> {
    Ok(Finding::Fails(Evidence {
        summary: summary.into(),
        details,
    }))
}

fn show<T: Scalar>(ps: &[PrimeIdeal<T>]) -> String {
    let items: Vec<String> = ps.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn reps_json<T: Scalar>(rs: &[Representation<T>]) -> Value {
    Value::Array(rs.iter().map(json::representation).collect())
}

fn leq<T: Scalar>(a: &PrimeIdeal<T>, b: &PrimeIdeal<T>) -> bool {
    a.ideal().is_subset_of(&b.ideal())
}

pub(crate) fn check<T: Scalar>(t: Theorem, lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    use Theorem::*;
    match t {
        FirstUniquenessSecond => first_uniqueness(cx, Kind::Second),
        FirstUniquenessSecondary => first_uniqueness(cx, Kind::Secondary),
        SecondUniqueness => second_uniqueness(cx),
        IrredundantFamilies => irredundant_families(cx),
        ExistenceMinimal => existence_minimal(cx),
        QuotientAtt => quotient_att(lab, cx),
        DirectSumAtt => direct_sum_att(lab, cx),
        LocalizationAtt => localization_att(lab, cx),
        SumOfSeconds => sum_of_seconds(cx),
        HollowIsSecond => hollow_is_second(cx),
        HollowSum => hollow_sum(cx),
        SupplementedHollow => supplemented_hollow(cx),
        CoatomicHollow => coatomic_hollow(cx),
        SLiftingDirect => s_lifting_direct(cx),
        AttAtomic => att_atomic(cx),
        AttCoatomic => att_coatomic(cx),
        PrimaryHereditary => primary_hereditary(cx),
        SecondaryDirect => secondary_direct(cx),
        LocalComponents => local_components(lab, cx),
        Multiplication => multiplication(cx),
        SemisimpleMultiplication => semisimple_multiplication(cx),
        AtomicSemisimple => atomic_semisimple(cx),
        SemisecondSemisimple => semisecond_semisimple(cx),
        InjectiveAtt => injective_att(lab, cx),
        Chart => chart(cx),
    }
}

fn first_uniqueness<T: Scalar>(cx: &Ctx<T>, kind: Kind) -> Result<Finding> {
    let reps = cx.reps(kind)?;
    if reps.is_empty() {
        return Ok(Finding::Vacuous);
    }
    if let Some(r) = reps.iter().find(|r| !sound(r)) {
        return fails(
            "search returned a representation failing the definitions",
            json!({ "representation": json::representation(r) }),
        );
    }
    let first = reps[0].prime_set();
    if let Some(r) = reps.iter().find(|r| r.prime_set() != first) {
        return fails(
            "two minimal representations with different attached primes",
            json!({ "first": json::representation(&reps[0]), "other": json::representation(r) }),
        );
    }
    holds(
        format!(
            "{} minimal {} representation(s), attached primes {}",
            reps.len(),
            kind.name(),
            show(&first)
        ),
        json!({ "representations": reps_json(reps), "attached": json::primes(&first) }),
    )
}

fn second_uniqueness<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let mut checked = Vec::new();
    for kind in [Kind::Second, Kind::Secondary] {
        let reps = cx.reps(kind)?;
        if reps.is_empty() {
            continue;
        }
        let mins = minimal_primes(&reps[0].prime_set());
        for p in &mins {
            let k0 = reps[0].summand_for(p);
            if let Some(r) = reps[1..].iter().find(|r| r.summand_for(p) != k0) {
                return fails(
                    format!("summands for the minimal prime {p} differ"),
                    json!({
                        "kind": kind.name(),
                        "prime": json::int(p.generator()),
                        "first": json::representation(&reps[0]),
                        "other": json::representation(r),
                    }),
                );
            }
        }
        checked.push(json!({
            "kind": kind.name(),
            "minimal_primes": json::primes(&mins),
            "representations": reps_json(reps),
        }));
    }
    if checked.is_empty() {
        return Ok(Finding::Vacuous);
    }
    holds("summands at minimal primes agree", Value::Array(checked))
}

/// Exhaustive up to this many families of two and three second
/// submodules; sampled beyond.
const FAMILY_BUDGET: usize = 20_000;

fn irredundant_families<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let flags = cx.flags(Kind::Second)?;
    let seconds: Vec<usize> = (0..lat.len()).filter(|&i| flags[i].is_some()).collect();
    let primes = cx.module().primes();
    let s = seconds.len();
    let total = s * s.saturating_sub(1) / 2 + s * s.saturating_sub(1) * s.saturating_sub(2) / 6;
    let mut families: Vec<Vec<usize>> = Vec::new();
    if total <= FAMILY_BUDGET {
        for a in 0..s {
            for b in a + 1..s {
                families.push(vec![seconds[a], seconds[b]]);
                for c in b + 1..s {
                    families.push(vec![seconds[a], seconds[b], seconds[c]]);
                }
            }
        }
    } else {
        let seed = cx
            .module()
            .invariant_factors()
            .iter()
            .fold(0u64, |h, d| h.wrapping_mul(1_000_003).wrapping_add(d.to_u64().unwrap_or(0)));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in 0..FAMILY_BUDGET {
            let size = 2 + n % 2;
            families.push(sample(&mut rng, s, size).iter().map(|i| seconds[i]).collect());
        }
    }
    let mut irredundant = 0usize;
    for fam in &families {
        let redundant = (0..fam.len()).any(|j| {
            let others: Vec<usize> = fam.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &k)| k).collect();
            lat.leq(fam[j], lat.join_all(&others))
        });
        if redundant {
            continue;
        }
        irredundant += 1;
        let sum = lat.join_all(fam);
        for p in &primes {
            let is_p = |i: usize| flags[i].as_ref().map(PrimeIdeal::generator) == Some(p);
            let each = fam.iter().all(|&k| is_p(k));
            if each != is_p(sum) {
                return fails(
                    format!("family and its sum disagree on being {p}-second"),
                    json!({
                        "prime": json::int(p),
                        "family": fam.iter().map(|&k| json::submodule(lat.get(k))).collect::<Vec<_>>(),
                        "sum": json::submodule(lat.get(sum)),
                        "each_p_second": each,
                    }),
                );
            }
        }
    }
    if irredundant == 0 {
        return Ok(Finding::Vacuous);
    }
    holds(
        format!("{irredundant} irredundant families checked"),
        json!({
            "second_submodules": s,
            "families": families.len(),
            "irredundant": irredundant,
            "exhaustive": total <= FAMILY_BUDGET,
        }),
    )
}

/// The built representation of a module already known to be second
/// representable, checked against the definitions.
fn checked_main<T: Scalar>(cx: &Ctx<T>) -> std::result::Result<&Representation<T>, Evidence> {
    match cx.main() {
        Some(r) if sound(r) => Ok(r),
        Some(r) => Err(Evidence {
            summary: "built representation fails the definitions".into(),
            details: json!({ "representation": json::representation(r) }),
        }),
        None => Err(Evidence {
            summary: "second representable but no representation was built".into(),
            details: json!({ "module": cx.module() }),
        }),
    }
}

fn representable_conclusion<T: Scalar>(cx: &Ctx<T>, hypotheses: Value) -> Result<Finding> {
    if !cx.representable(Kind::Second)? {
        return fails(
            "hypotheses hold but the module is not second representable",
            json!({ "hypotheses": hypotheses }),
        );
    }
    match checked_main(cx) {
        Ok(r) => holds(
            format!("second representable with attached primes {}", show(&r.prime_set())),
            json!({ "hypotheses": hypotheses, "representation": json::representation(r) }),
        ),
        Err(e) => Ok(Finding::Fails(e)),
    }
}

fn existence_minimal<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    if !cx.representable(Kind::Second)? {
        return Ok(Finding::Vacuous);
    }
    representable_conclusion(cx, json!({ "second_representable": true }))
}

fn quotient_att<T: Scalar>(lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    let Some(att) = cx.att()? else {
        return vacuous_or_inconsistent(cx);
    };
    let lat = cx.lattice()?;
    let mut types: BTreeMap<Vec<T>, FinModule<T>> = BTreeMap::new();
    for (i, n) in lat.submodules().iter().enumerate() {
        if i != lat.whole() {
            let q = Quotient::new(n).module().clone();
            types.entry(q.invariant_factors().to_vec()).or_insert(q);
        }
    }
    for q in types.values() {
        let qc = lab.ctx(q);
        let qa = qc.att()?;
        let ok = qa.as_ref().is_some_and(|qa| qa.iter().all(|p| att.contains(p)));
        if !ok {
            return fails(
                "quotient is not second representable inside att(M)",
                json!({
                    "quotient": q,
                    "quotient_att": qa.as_deref().map(json::primes),
                    "att": json::primes(&att),
                }),
            );
        }
    }
    holds(
        format!("{} quotient types, att {}", types.len(), show(&att)),
        json!({ "quotient_types": types.len(), "att": json::primes(&att) }),
    )
}

/// `M` is second representable by the definitions but no sound
/// representation exists (a counterexample), or it is not representable.
fn vacuous_or_inconsistent<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    if !cx.representable(Kind::Second)? {
        return Ok(Finding::Vacuous);
    }
    match checked_main(cx) {
        Ok(_) => unreachable!("att is present whenever the built representation is sound"),
        Err(e) => Ok(Finding::Fails(e)),
    }
}

fn union<T: Scalar>(a: &[PrimeIdeal<T>], b: &[PrimeIdeal<T>]) -> Vec<PrimeIdeal<T>> {
    let mut out: Vec<_> = a.iter().chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}

fn direct_sum_att<T: Scalar>(lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let iso = cx.iso_types()?;
    let mut ids: HashMap<&FinModule<T>, usize> = HashMap::new();
    let id: Vec<usize> = iso
        .iter()
        .map(|t| {
            let n = ids.len();
            *ids.entry(t).or_insert(n)
        })
        .collect();
    let mut atts: HashMap<usize, Option<Vec<PrimeIdeal<T>>>> = HashMap::new();
    for (i, t) in iso.iter().enumerate() {
        if i != lat.zero() && !atts.contains_key(&id[i]) {
            atts.insert(id[i], lab.ctx(t).att()?);
        }
    }
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs = 0usize;
    for a in 0..lat.len() {
        if a == lat.zero() || atts[&id[a]].is_none() {
            continue;
        }
        for b in a + 1..lat.len() {
            if b == lat.zero() || !lat.is_independent_pair(a, b) {
                continue;
            }
            let (Some(aa), Some(ab)) = (&atts[&id[a]], &atts[&id[b]]) else {
                continue;
            };
            pairs += 1;
            if !seen.insert((id[a].min(id[b]), id[a].max(id[b]))) {
                continue;
            }
            let s = lat.join(a, b);
            let sum_att = lab.ctx(&iso[s]).att()?;
            let expect = union(aa, ab);
            if sum_att.as_ref() != Some(&expect) {
                return fails(
                    "att of an internal direct sum is not the union",
                    json!({
                        "a": json::submodule(lat.get(a)),
                        "b": json::submodule(lat.get(b)),
                        "att_a": json::primes(aa),
                        "att_b": json::primes(ab),
                        "att_sum": sum_att.as_deref().map(json::primes),
                    }),
                );
            }
        }
    }
    if pairs == 0 {
        return Ok(Finding::Vacuous);
    }
    holds(
        format!("{pairs} independent pairs of second representable submodules"),
        json!({ "pairs": pairs, "type_pairs": seen.len() }),
    )
}

/// Localizing at the complement of a prime `(q)` keeps exactly the
/// `q`-primary component. Primes outside the support give the zero module
/// and are not part of the check.
fn localization_att<T: Scalar>(lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    let Some(att) = cx.att()? else {
        return vacuous_or_inconsistent(cx);
    };
    let m = cx.module();
    let mut rows = Vec::new();
    for q in m.primes() {
        let q = PrimeIdeal::new_unchecked(q);
        let local = m.primary_component(&q).isomorphism_type();
        let got = lab.ctx(&local).att()?;
        let expect: Vec<_> = att.iter().filter(|p| **p == q).cloned().collect();
        if got.as_ref() != Some(&expect) {
            return fails(
                format!("localization at {q} has the wrong attached primes"),
                json!({
                    "prime": json::int(q.generator()),
                    "localization": local,
                    "att": got.as_deref().map(json::primes),
                    "expected": json::primes(&expect),
                }),
            );
        }
        rows.push(json!({ "prime": json::int(q.generator()), "localization": local }));
    }
    holds(
        format!("{} localizations checked", rows.len()),
        Value::Array(rows),
    )
}

/// Semisecond with finitely many attached primes: gathering the
/// `p`-second submodules for each `p` gives a representation.
fn sum_of_seconds<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    if !cx.representable(Kind::Second)? {
        return Ok(Finding::Vacuous);
    }
    let lat = cx.lattice()?;
    let flags = cx.flags(Kind::Second)?;
    let all = cx.att_all()?;
    let mut pieces = Vec::new();
    for p in &all {
        let members: Vec<usize> = (0..lat.len()).filter(|&i| flags[i].as_ref() == Some(p)).collect();
        let n = lat.join_all(&members);
        if flags[n].as_ref() != Some(p) {
            return fails(
                format!("sum of the {p}-second submodules is not {p}-second"),
                json!({ "prime": json::int(p.generator()), "sum": json::submodule(lat.get(n)) }),
            );
        }
        pieces.push(lat.get(n).clone());
    }
    let rep = Representation::new(Kind::Second, pieces).filter(Representation::is_complete);
    match rep {
        Some(r) => holds(
            format!("{} attached primes, gathered representation", all.len()),
            json!({ "att_all": json::primes(&all), "representation": json::representation(&r) }),
        ),
        None => fails(
            "gathered p-second submodules do not represent M",
            json!({ "att_all": json::primes(&all) }),
        ),
    }
}

fn hollow_is_second<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let flags = cx.flags(Kind::Second)?;
    let mut count = 0;
    for i in 0..lat.len() {
        if !is_hollow_submodule(lat, i) || !satisfies_is(lat, i) {
            continue;
        }
        count += 1;
        if flags[i].is_none() {
            return fails(
                "hollow submodule with the IS-condition is not second",
                json!({ "submodule": json::submodule(lat.get(i)) }),
            );
        }
    }
    if count == 0 {
        return Ok(Finding::Vacuous);
    }
    holds(
        format!("{count} hollow submodules with the IS-condition, all second"),
        json!({ "checked": count }),
    )
}

fn maximal_hollows_second<T: Scalar>(cx: &Ctx<T>) -> Result<bool> {
    let lat = cx.lattice()?;
    let flags = cx.flags(Kind::Second)?;
    Ok(maximal_hollow_submodules(lat).iter().all(|&h| flags[h].is_some()))
}

/// The cyclic prime-power pieces of the coordinate decomposition, if they
/// are hollow, independent and sum to `M`.
fn hollow_decomposition<T: Scalar>(lat: &Lattice<T>) -> Option<Vec<usize>> {
    let m = lat.module();
    let mut pieces = Vec::new();
    for (i, d) in m.invariant_factors().iter().enumerate() {
        for p in crate::scalar::prime_factors(d) {
            let mut g = vec![T::zero(); m.rank()];
            g[i] = d.clone() / pow(&p, valuation(d, &p));
            let k = m.submodule(&[g]).ok()?;
            pieces.push(lat.index_of(&k)?);
        }
    }
    let product: u64 = pieces.iter().map(|&k| lat.order(k)).product();
    let ok = pieces.iter().all(|&k| is_hollow_submodule(lat, k))
        && lat.join_all(&pieces) == lat.whole()
        && product == lat.module_order();
    ok.then_some(pieces)
}

fn hollow_sum<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let hollows: Vec<usize> = (0..lat.len()).filter(|&i| is_hollow_submodule(lat, i)).collect();
    if lat.join_all(&hollows) != lat.whole() || !maximal_hollows_second(cx)? {
        return Ok(Finding::Vacuous);
    }
    let found = representable_conclusion(cx, json!({ "hollow_submodules": hollows.len() }))?;
    let Finding::Holds(ev) = found else {
        return Ok(found);
    };
    if let Some(pieces) = hollow_decomposition(lat) {
        let r = cx.main().expect("checked above");
        if !r.is_direct {
            return fails(
                "directly hollow representable but the representation is not direct",
                json!({
                    "hollow_pieces": pieces.iter().map(|&k| json::submodule(lat.get(k))).collect::<Vec<_>>(),
                    "representation": json::representation(r),
                }),
            );
        }
    }
    Ok(Finding::Holds(ev))
}

fn supplemented_hollow<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    if !is_supplemented(lat) || !maximal_hollows_second(cx)? {
        return Ok(Finding::Vacuous);
    }
    representable_conclusion(cx, json!({ "supplemented": true, "maximal_hollows_second": true }))
}

fn coatomic_hollow<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let supplemented_coatoms = lat.coatoms().iter().all(|&c| !supplements_of(lat, c).is_empty());
    // Att^s is a set of primes dividing a finite order, hence finite
    let att_all = cx.att_all()?;
    if !is_coatomic(lat) || !supplemented_coatoms || !maximal_hollows_second(cx)? {
        return Ok(Finding::Vacuous);
    }
    representable_conclusion(
        cx,
        json!({ "coatomic": true, "maximal_submodules_supplemented": true, "att_all": json::primes(&att_all) }),
    )
}

fn s_lifting_direct<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    if !is_lifting(lat) || !is_s_lifting(lat) {
        return Ok(Finding::Vacuous);
    }
    let h = hollow_dim(lat);
    let found = representable_conclusion(cx, json!({ "s_lifting": true, "hollow_dim": h }))?;
    if let Finding::Holds(_) = found {
        let r = cx.main().expect("checked above");
        if !r.is_direct {
            return fails(
                "s-lifting but the representation is not direct",
                json!({ "representation": json::representation(r) }),
            );
        }
    }
    Ok(found)
}

fn att_atomic<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let Some(att) = cx.att()? else {
        return vacuous_or_inconsistent(cx);
    };
    let all = cx.att_all()?;
    let min_all = minimal_primes(&all);
    let atomic = all.iter().all(|p| min_all.iter().any(|q| leq(q, p)));
    let min_att = minimal_primes(&att);
    let details = json!({
        "att_all": json::primes(&all),
        "att": json::primes(&att),
        "min_all": json::primes(&min_all),
        "min_att": json::primes(&min_att),
    });
    if !atomic || min_att != min_all {
        return fails("minimal attached primes differ or Att is not atomic", details);
    }
    holds(format!("Min(att) = Min(Att) = {}", show(&min_att)), details)
}

fn att_coatomic<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let flags = cx.flags(Kind::Second)?;
    let small_second = (0..lat.len()).any(|i| flags[i].is_some() && is_small(lat, i));
    if small_second {
        return Ok(Finding::Vacuous);
    }
    let Some(att) = cx.att()? else {
        return vacuous_or_inconsistent(cx);
    };
    let all = cx.att_all()?;
    let max_all = maximal_primes(&all);
    let coatomic = all.iter().all(|p| max_all.iter().any(|q| leq(p, q)));
    let max_att = maximal_primes(&att);
    let details = json!({
        "att_all": json::primes(&all),
        "att": json::primes(&att),
        "max_all": json::primes(&max_all),
        "max_att": json::primes(&max_att),
    });
    if !coatomic || max_att != max_all {
        return fails("maximal attached primes differ or Att is not coatomic", details);
    }
    holds(format!("Max(att) = Max(Att) = {}", show(&max_att)), details)
}

fn primary_hereditary<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let mut details = serde_json::Map::new();
    for kind in [Kind::Second, Kind::Secondary] {
        let flags = cx.flags(kind)?;
        for p in cx.module().primes() {
            let is_p = |i: usize| flags[i].as_ref().map(PrimeIdeal::generator) == Some(&p);
            let whole = is_p(lat.whole());
            let every = (0..lat.len()).filter(|&i| i != lat.zero()).all(is_p);
            if whole != every {
                return fails(
                    format!("M and its nonzero submodules disagree on being {p}-{}", kind.name()),
                    json!({ "kind": kind.name(), "prime": json::int(&p), "whole": whole }),
                );
            }
        }
        details.insert(
            kind.name().into(),
            flags[lat.whole()].as_ref().map_or(Value::Null, |p| json::int(p.generator())),
        );
    }
    holds("both directions agree for every prime", Value::Object(details))
}

fn secondary_direct<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let reps = cx.reps(Kind::Secondary)?;
    if reps.is_empty() {
        return Ok(Finding::Vacuous);
    }
    if let Some(r) = reps.iter().find(|r| !sound(r) || !r.is_direct) {
        return fails(
            "minimal secondary representation is not direct",
            json!({ "representation": json::representation(r) }),
        );
    }
    holds(
        format!("{} minimal secondary representation(s), all direct", reps.len()),
        json!({ "representations": reps_json(reps) }),
    )
}

/// Representability of `M` against that of its primary components. The
/// converse direction holds for every module; when `M` is `p`-primary, `M`
/// is its own localization at `p` and the equivalence is checked.
fn local_components<T: Scalar>(lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    let m = cx.module();
    let primes = m.primes();
    let mut rows = Vec::new();
    for kind in [Kind::Second, Kind::Secondary] {
        let whole = cx.representable(kind)?;
        let mut local = Vec::new();
        for p in &primes {
            let comp = m.primary_component(&PrimeIdeal::new_unchecked(p.clone())).isomorphism_type();
            local.push(lab.ctx(&comp).representable(kind)?);
        }
        let converse = !whole || local.iter().all(|&b| b);
        let primary = primes.len() != 1 || whole == local[0];
        let row = json!({
            "kind": kind.name(),
            "representable": whole,
            "components": primes.iter().zip(&local).map(|(p, b)| json!({ "prime": json::int(p), "representable": b })).collect::<Vec<_>>(),
            "primary": primes.len() == 1,
        });
        if !converse || !primary {
            return fails("representability of M and its components disagree", row);
        }
        rows.push(row);
    }
    holds("components follow M", Value::Array(rows))
}

fn subset_sums<T: Scalar>(lat: &Lattice<T>, r: &Representation<T>) -> HashSet<usize> {
    let idx: Vec<usize> = r
        .summands
        .iter()
        .map(|k| lat.index_of(k).expect("summands are lattice elements"))
        .collect();
    (1u32..1 << idx.len())
        .map(|mask| {
            let chosen: Vec<usize> = (0..idx.len()).filter(|j| mask >> j & 1 == 1).map(|j| idx[j]).collect();
            lat.join_all(&chosen)
        })
        .collect()
}

fn multiplication<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    if !cx.representable(Kind::Second)? {
        return Ok(Finding::Vacuous);
    }
    let lat = cx.lattice()?;
    let mult = is_multiplication(lat);
    let all = cx.att_all()?;
    let reps = cx.reps(Kind::Second)?;
    if reps.is_empty() {
        return fails("second representable but no minimal representation found", json!({}));
    }
    for r in reps {
        let att = r.prime_set();
        let sums = subset_sums(lat, r);
        let every = (0..lat.len()).filter(|&i| i != lat.zero()).all(|i| sums.contains(&i));
        let right = all == att && minimal_primes(&att) == att && every;
        if mult != right {
            return fails(
                "multiplication and the attached-prime condition disagree",
                json!({
                    "multiplication": mult,
                    "att_all": json::primes(&all),
                    "representation": json::representation(r),
                    "submodules_are_summand_sums": every,
                }),
            );
        }
    }
    holds(
        format!("multiplication = {mult} on both sides"),
        json!({ "multiplication": mult, "representations": reps.len() }),
    )
}

fn semisimple_multiplication<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    if !is_semisimple(lat) || !cx.representable(Kind::Second)? {
        return Ok(Finding::Vacuous);
    }
    let Some(att) = cx.att()? else {
        return vacuous_or_inconsistent(cx);
    };
    let flags = cx.flags(Kind::Second)?;
    let mult = is_multiplication(lat);
    let antichain = minimal_primes(&att) == att;
    let simple = (0..lat.len())
        .filter(|&i| flags[i].is_some())
        .all(|i| lat.lower_covers(i) == [lat.zero()]);
    let details = json!({
        "multiplication": mult,
        "att_incomparable": antichain,
        "seconds_simple": simple,
    });
    if mult != (antichain && simple) {
        return fails("multiplication and simple second submodules disagree", details);
    }
    holds(format!("multiplication = {mult} on both sides"), details)
}

fn atomic_semisimple<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    if !is_atomic(lat) {
        return Ok(Finding::Vacuous);
    }
    let flags = cx.flags(Kind::Second)?;
    let pure: Vec<usize> = (0..lat.len())
        .filter(|&k| {
            k != lat.zero() && {
                let p = &flags[k];
                p.is_some()
                    && lat
                        .down_set(k)
                        .into_iter()
                        .filter(|&j| j != lat.zero())
                        .all(|j| flags[j] == *p)
            }
        })
        .collect();
    let right = lat.join_all(&pure) == lat.whole();
    let semisimple = is_semisimple(lat);
    let details = json!({ "semisimple": semisimple, "sum_of_pure_second": right });
    if semisimple != right {
        return fails("semisimplicity and the pure-second sum disagree", details);
    }
    holds(format!("semisimple = {semisimple} on both sides"), details)
}

fn semisecond_semisimple<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    // finite modules are Noetherian
    if !cx.representable(Kind::Second)? || !is_atomic(lat) {
        return Ok(Finding::Vacuous);
    }
    if !is_semisimple(lat) {
        return fails("semisecond atomic module is not semisimple", json!({ "module": cx.module() }));
    }
    holds("semisecond, atomic and semisimple", json!({ "semisimple": true }))
}

/// Over `R = Z/n` with `n` squarefree, `R` is self-injective, so its direct
/// summands `E` are injective and `(p_1) ∩ ... ∩ (p_k) = 0`.
fn injective_att<T: Scalar>(lab: &Lab<T>, cx: &Ctx<T>) -> Result<Finding> {
    let m = cx.module();
    let n = m.order();
    let primes = m.primes();
    let squarefree = primes.iter().all(|p| valuation(&n, p) == 1);
    if !m.is_cyclic() || !squarefree {
        return Ok(Finding::Vacuous);
    }
    let ring: Vec<PrimeIdeal<T>> = primes.into_iter().map(PrimeIdeal::new_unchecked).collect();
    let lat = cx.lattice()?;
    let iso = cx.iso_types()?;
    let mut count = 0;
    for e in 0..lat.len() {
        if e == lat.zero() || !is_summand(lat, e) {
            continue;
        }
        count += 1;
        let sub = lat.get(e);
        let att = lab.ctx(&iso[e]).att()?;
        let contained = att.as_ref().is_some_and(|a| a.iter().all(|p| ring.contains(p)));
        let faithful = *sub.annihilator().generator() == n;
        let full = att.as_ref() == Some(&ring);
        if !contained || faithful != full {
            return fails(
                "injective module violates the attached-prime statement",
                json!({
                    "e": json::submodule(sub),
                    "att": att.as_deref().map(json::primes),
                    "ring_primes": json::primes(&ring),
                    "faithful": faithful,
                }),
            );
        }
    }
    holds(
        format!("{count} injective summands of Z/{n}"),
        json!({ "summands": count, "ring_primes": json::primes(&ring) }),
    )
}

fn chart<T: Scalar>(cx: &Ctx<T>) -> Result<Finding> {
    let lat = cx.lattice()?;
    let lifting = is_lifting(lat);
    let flags: [(&str, bool); 8] = [
        ("artinian", true),
        ("semisimple", is_semisimple(lat)),
        ("s_lifting", lifting && is_s_lifting(lat)),
        ("lifting", lifting),
        ("amply_supplemented", is_amply_supplemented(lat)),
        ("supplemented", is_supplemented(lat)),
        ("semisecond", cx.representable(Kind::Second)?),
        ("semisecondary", cx.representable(Kind::Secondary)?),
    ];
    let get = |name: &str| flags.iter().find(|(n, _)| *n == name).expect("known flag").1;
    let arrows = [
        ("semisimple", "s_lifting"),
        ("s_lifting", "lifting"),
        ("lifting", "amply_supplemented"),
        ("artinian", "amply_supplemented"),
        ("amply_supplemented", "supplemented"),
        ("semisimple", "semisecond"),
        ("semisecond", "semisecondary"),
    ];
    let details: serde_json::Map<String, Value> =
        flags.iter().map(|(n, b)| (n.to_string(), Value::Bool(*b))).collect();
    for (from, to) in arrows {
        if get(from) && !get(to) {
            return fails(format!("{from} does not imply {to}"), Value::Object(details));
        }
    }
    let fired = arrows.iter().filter(|(from, _)| get(from)).count();
    holds(format!("{fired} of {} arrows applicable, all hold", arrows.len()), Value::Object(details))
}
