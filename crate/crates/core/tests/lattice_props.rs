use std::collections::HashSet;

use modrep_core::{FinModule, Quotient, SmallModule, SmallSubmodule};
use proptest::prelude::*;

fn modules() -> impl Strategy<Value = SmallModule> {
    prop::collection::vec(2i64..=12, 1..=3)
        .prop_filter("small order", |f| f.iter().product::<i64>() <= 400)
        .prop_map(|f| FinModule::new(&f).unwrap())
}

fn vectors(m: &SmallModule, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let d = m.invariant_factors().to_vec();
    let one = d.iter().map(|&di| 0..di).collect::<Vec<_>>();
    prop::collection::vec(one, 0..=max)
}

/// A module with three random generator lists.
fn setup() -> impl Strategy<Value = (SmallModule, [Vec<Vec<i64>>; 3])> {
    modules().prop_flat_map(|m| {
        let v = [vectors(&m, 3), vectors(&m, 3), vectors(&m, 3)];
        (Just(m), v)
    })
}

/// Elements of the span of `gens`, by closure under addition.
fn span(m: &SmallModule, gens: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let d = m.invariant_factors();
    let zero = vec![0; d.len()];
    let mut seen = HashSet::from([zero.clone()]);
    let mut stack = vec![zero];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y: Vec<i64> = x.iter().zip(g).zip(d).map(|((a, b), n)| (a + b) % n).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

fn sub(m: &SmallModule, g: &[Vec<i64>]) -> SmallSubmodule {
    m.submodule(g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn order_and_membership_match_closure((m, [g, h, _]) in setup()) {
        let a = sub(&m, &g);
        let elems = span(&m, &g);
        prop_assert_eq!(a.order() as usize, elems.len());
        for x in span(&m, &h) {
            prop_assert_eq!(a.contains_vector(&x), elems.contains(&x));
        }
    }

    #[test]
    fn canonical_form_ignores_presentation((m, [g, h, _]) in setup()) {
        let a = sub(&m, &g);
        let mut more = g.clone();
        more.reverse();
        for x in &g {
            let doubled: Vec<i64> = x.iter().map(|v| 2 * v).collect();
            more.push(doubled);
        }
        prop_assert_eq!(sub(&m, &more), a.clone());
        let b = sub(&m, &h);
        prop_assert_eq!(sub(&m, &a.generators()), a.clone());
        let joined: Vec<Vec<i64>> = g.iter().chain(&h).cloned().collect();
        prop_assert_eq!(sub(&m, &joined), a.sum(&b).unwrap());
    }

    #[test]
    fn lattice_laws((m, [g, h, k]) in setup()) {
        let (a, b, c) = (sub(&m, &g), sub(&m, &h), sub(&m, &k));
        let ab = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(ab.order() * meet.order(), a.order() * b.order());
        prop_assert_eq!(&ab, &b.sum(&a).unwrap());
        prop_assert_eq!(&meet, &b.intersect(&a).unwrap());
        prop_assert_eq!(a.sum(&meet).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&ab).unwrap(), a.clone());
        // modular law, with A <= A + C
        let ac = a.sum(&c).unwrap();
        prop_assert_eq!(
            a.sum(&b.intersect(&ac).unwrap()).unwrap(),
            ab.intersect(&ac).unwrap()
        );
        let ea = span(&m, &a.generators());
        let eb = span(&m, &b.generators());
        prop_assert_eq!(meet.order() as usize, ea.intersection(&eb).count());
    }

    #[test]
    fn quotient_and_type_orders((m, [g, _, _]) in setup()) {
        let a = sub(&m, &g);
        prop_assert_eq!(a.isomorphism_type().order(), a.order());
        let q = Quotient::new(&a);
        prop_assert_eq!(q.module().order() * a.order(), m.order());
        prop_assert!(q.project(&a).is_zero());
        prop_assert!(q.project(&m.whole()).is_whole());
    }

    #[test]
    fn annihilator_and_scaling((m, [g, _, _]) in setup()) {
        let a = sub(&m, &g);
        let e = *a.annihilator().generator();
        prop_assert!(a.scale(&e).is_zero());
        for d in m.exponent_divisors() {
            prop_assert_eq!(a.scale(&d).is_zero(), d % e == 0);
        }
        let elems = span(&m, &g);
        for r in 0..4i64 {
            let scaled: Vec<Vec<i64>> = g.iter().map(|x| x.iter().map(|v| v * r).collect()).collect();
            prop_assert_eq!(a.scale(&r), sub(&m, &scaled));
            let img: HashSet<Vec<i64>> = elems
                .iter()
                .map(|x| x.iter().zip(m.invariant_factors()).map(|(v, n)| v * r % n).collect())
                .collect();
            prop_assert_eq!(a.scale(&r).order() as usize, img.len());
        }
    }

    #[test]
    fn colon_module_is_the_preimage((m, [g, _, _]) in setup(), r in 1i64..=6) {
        let a = sub(&m, &g);
        let colon = a.colon_module(&modrep_core::Ideal::new(r)).unwrap();
        let d = m.invariant_factors();
        let all = span(&m, &(0..d.len()).map(|i| {
            let mut e = vec![0; d.len()];
            e[i] = 1;
            e
        }).collect::<Vec<_>>());
        let count = all
            .iter()
            .filter(|x| {
                let rx: Vec<i64> = x.iter().zip(d).map(|(v, n)| v * r % n).collect();
                a.contains_vector(&rx)
            })
            .count();
        prop_assert_eq!(colon.order() as usize, count);
    }

    #[test]
    fn fixed_width_agrees_with_bigint((m, [g, h, _]) in setup()) {
        let big = |f: &[i64]| f.iter().map(|&x| num_bigint::BigInt::from(x)).collect::<Vec<_>>();
        let mb = modrep_core::ZModule::new(&big(m.invariant_factors())).unwrap();
        let gb: Vec<_> = g.iter().map(|x| big(x)).collect();
        let hb: Vec<_> = h.iter().map(|x| big(x)).collect();
        let (a, b) = (sub(&m, &g), sub(&m, &h));
        let (ab, bb) = (mb.submodule(&gb).unwrap(), mb.submodule(&hb).unwrap());
        let same = |x: &SmallSubmodule, y: &modrep_core::ZSubmodule| {
            x.generators().iter().map(|r| big(r)).collect::<Vec<_>>() == y.generators()
        };
        prop_assert!(same(&a, &ab));
        prop_assert!(same(&a.sum(&b).unwrap(), &ab.sum(&bb).unwrap()));
        prop_assert!(same(&a.intersect(&b).unwrap(), &ab.intersect(&bb).unwrap()));
        prop_assert_eq!(a.canonical_key().len(), ab.canonical_key().len());
    }
}
