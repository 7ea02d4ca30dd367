use modrep_core::linalg::{hermite_normal_form, smith_normal_form};
use modrep_core::second::*;
use modrep_core::structure::*;
use modrep_core::{Ideal, Lattice, Limits, Matrix, PrimeIdeal, Quotient, SmallModule, SmallSubmodule};

fn m(f: &[i64]) -> SmallModule {
    SmallModule::new(f).unwrap()
}

/// `aM` in a cyclic module.
fn c(m: &SmallModule, a: i64) -> SmallSubmodule {
    m.element_span(&[a]).unwrap()
}

fn primes(ps: &[PrimeIdeal<i64>]) -> Vec<i64> {
    ps.iter().map(|p| *p.generator()).collect()
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn normal_forms() {
    let a = Matrix::<i64>::from_i64(2, 2, &[0, 2, 3, 0]).unwrap();
    assert_eq!(hermite_normal_form(&a).h, Matrix::from_i64(2, 2, &[3, 0, 0, 2]).unwrap());
    let a = Matrix::<i64>::from_i64(2, 1, &[2, 3]).unwrap();
    assert_eq!(hermite_normal_form(&a).h.entries(), &[1, 0]);
    let a = Matrix::<i64>::from_i64(2, 2, &[2, 4, 4, 4]).unwrap();
    assert_eq!(smith_normal_form(&a).diagonal(), vec![2, 4]);
    assert_eq!(smith_normal_form(&Matrix::<i64>::zeros(2, 2)).diagonal(), vec![0, 0]);
}

#[test]
fn modules_and_submodules() {
    assert_eq!(m(&[2, 9]).invariant_factors(), &[18]);
    assert_eq!(m(&[2, 4]).invariant_factors(), &[2, 4]);
    assert_eq!(m(&[6]).submodules(&lim()).unwrap().len(), 4);
    assert_eq!(m(&[2, 2]).submodules(&lim()).unwrap().len(), 5);
    assert_eq!(SmallModule::zero().submodules(&lim()).unwrap().len(), 1);

    let z18 = m(&[18]);
    assert_eq!(z18.submodule(&[vec![9]]).unwrap().order(), 2);
    assert!(z18.submodule(&[]).unwrap().is_zero());
    assert!(m(&[2, 2]).submodule(&[vec![1, 0], vec![0, 1]]).unwrap().is_whole());
    assert_eq!(c(&z18, 6).sum(&c(&z18, 9)).unwrap(), c(&z18, 3));

    let z30 = m(&[30]);
    let s = c(&z30, 15).sum(&c(&z30, 10)).unwrap().sum(&c(&z30, 6)).unwrap();
    assert!(s.is_whole());

    let z12 = m(&[12]);
    assert_eq!(c(&z12, 2).intersect(&c(&z12, 3)).unwrap(), c(&z12, 6));
    assert!(c(&z12, 4).intersect(&c(&z12, 6)).unwrap().is_zero());
    assert_eq!(Quotient::new(&c(&z12, 6)).module(), &m(&[6]));
    assert!(Quotient::new(&z12.whole()).module().is_zero());
}

#[test]
fn actions_and_colons() {
    let z18 = m(&[18]);
    assert_eq!(c(&z18, 2).act(&Ideal::new(3)), c(&z18, 6));
    assert!(c(&z18, 2).act(&Ideal::zero()).is_zero());
    assert_eq!(c(&z18, 9).act(&Ideal::new(5)), c(&z18, 9));
    assert_eq!(c(&z18, 9).annihilator(), Ideal::new(2));
    assert_eq!(z18.whole().annihilator(), Ideal::new(18));
    assert_eq!(z18.zero_submodule().annihilator(), Ideal::unit());
    assert_eq!(c(&z18, 9).colon_ring(&z18.whole()).unwrap(), Ideal::new(9));
    assert_eq!(z18.zero_submodule().colon_ring(&c(&z18, 9)).unwrap(), Ideal::new(2));
    let z12 = m(&[12]);
    assert_eq!(z12.zero_submodule().colon_module(&Ideal::new(2)).unwrap(), c(&z12, 6));
    assert_eq!(z18.zero_submodule().colon_module(&Ideal::new(3)).unwrap(), c(&z18, 6));
}

#[test]
fn socle_radical_components() {
    let z12 = m(&[12]);
    assert_eq!(z12.socle(), c(&z12, 2));
    assert_eq!(z12.radical(&lim()).unwrap(), c(&z12, 6));
    assert_eq!(m(&[8]).socle(), c(&m(&[8]), 4));
    assert_eq!(m(&[8]).radical(&lim()).unwrap(), c(&m(&[8]), 2));
    assert!(m(&[2, 2]).socle().is_whole());
    assert!(m(&[2, 2]).radical(&lim()).unwrap().is_zero());
    assert_eq!(z12.maximal_submodules(&lim()).unwrap(), vec![c(&z12, 3), c(&z12, 2)]);
    assert_eq!(m(&[7]).maximal_submodules(&lim()).unwrap(), vec![m(&[7]).zero_submodule()]);
    let z18 = m(&[18]);
    let p = |x: i64| PrimeIdeal::new(x).unwrap();
    assert_eq!(z18.primary_component(&p(3)), c(&z18, 2));
    assert!(z18.primary_component(&p(5)).is_zero());
    assert_eq!(z12.primary_component(&p(2)).isomorphism_type(), m(&[4]));
}

#[test]
fn second_and_secondary() {
    let z18 = m(&[18]);
    assert_eq!(is_second(&c(&z18, 9)).map(|p| *p.generator()), Some(2));
    assert_eq!(is_second(&c(&z18, 6)).map(|p| *p.generator()), Some(3));
    assert_eq!(is_second(&c(&z18, 3)), None);
    assert_eq!(is_secondary(&c(&z18, 2)).map(|p| *p.generator()), Some(3));
    let z12 = m(&[12]);
    assert_eq!(is_secondary(&c(&z12, 3)).map(|p| *p.generator()), Some(2));
    assert_eq!(is_secondary(&c(&z12, 2)), None);

    assert_eq!(spec_second(&z18, &lim()).unwrap(), vec![c(&z18, 9), c(&z18, 6)]);
    assert_eq!(spec_second(&m(&[8]), &lim()).unwrap(), vec![c(&m(&[8]), 4)]);
    let z30 = m(&[30]);
    assert_eq!(
        spec_second(&z30, &lim()).unwrap(),
        vec![c(&z30, 15), c(&z30, 10), c(&z30, 6)]
    );

    let r = att_report(&z18, &lim()).unwrap();
    assert_eq!((primes(&r.att_all), primes(&r.att_main)), (vec![2, 3], vec![]));
    let r = att_report(&z30, &lim()).unwrap();
    assert_eq!(primes(&r.att_main), vec![2, 3, 5]);
    assert_eq!(r.att_all, r.att_main);
    let r = att_report(&m(&[7]), &lim()).unwrap();
    assert_eq!((primes(&r.att_all), primes(&r.att_main)), (vec![7], vec![7]));

    assert!(is_semisecond(&z30, &lim()).unwrap());
    assert!(!is_semisecond(&z18, &lim()).unwrap());
    assert!(is_semisecond(&m(&[2, 2]), &lim()).unwrap());
}

#[test]
fn representations() {
    let z18 = m(&[18]);
    let r = find_representation(&z18, Kind::Secondary).unwrap();
    assert!(r.is_minimal);
    assert_eq!(r.summands, vec![c(&z18, 9), c(&z18, 2)]);
    assert_eq!(primes(&r.attached), vec![2, 3]);
    assert!(find_representation(&z18, Kind::Second).is_none());
    let z30 = m(&[30]);
    let r = find_representation(&z30, Kind::Second).unwrap();
    assert_eq!(r.summands, vec![c(&z30, 15), c(&z30, 10), c(&z30, 6)]);
    assert_eq!(primes(&r.prime_set()), vec![2, 3, 5]);

    let redundant = Representation::new(
        Kind::Second,
        vec![c(&z30, 15), c(&z30, 10), c(&z30, 6), c(&z30, 10)],
    )
    .unwrap();
    let min = minimize_representation(&redundant);
    assert!(min.is_minimal && min.is_complete() && min.summands.len() == 3);
    assert_eq!(minimize_representation(&min), min);
    let v4 = m(&[2, 2]);
    let two = Representation::new(
        Kind::Second,
        vec![v4.element_span(&[1, 0]).unwrap(), v4.element_span(&[0, 1]).unwrap()],
    )
    .unwrap();
    let merged = minimize_representation(&two);
    assert_eq!(merged.summands, vec![v4.whole()]);
    assert_eq!(primes(&merged.attached), vec![2]);

    assert_eq!(all_minimal_representations(&z30, Kind::Second, &lim()).unwrap().len(), 1);
    assert!(all_minimal_representations(&z18, Kind::Second, &lim()).unwrap().is_empty());
    let z4 = m(&[4]);
    let all = all_minimal_representations(&z4, Kind::Secondary, &lim()).unwrap();
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].summands, vec![z4.whole()]);

    let p = |x: i64| PrimeIdeal::new(x).unwrap();
    let att = vec![p(2), p(3)];
    assert!(is_isolated(&att, &att).unwrap());
    assert!(is_isolated(&[], &att).unwrap());
    assert!(is_isolated(&[p(2)], &att).unwrap());
    assert!(is_isolated(&[p(5)], &att).is_err());
}

#[test]
fn structure() {
    let lat = |f: &[i64]| Lattice::new(&m(f), &lim()).unwrap();
    let idx = |l: &Lattice<i64>, a: i64| l.index_of(&c(l.module(), a)).unwrap();

    let z12 = lat(&[12]);
    assert!(is_small(&z12, idx(&z12, 6)));
    assert!(is_small(&z12, z12.zero()));
    assert!(!is_small(&z12, idx(&z12, 4)));
    assert!(!is_large(&z12, idx(&z12, 4)));
    let z8 = lat(&[8]);
    assert!(is_large(&z8, idx(&z8, 2)));
    assert!(is_large(&z8, z8.whole()));

    let z6 = lat(&[6]);
    assert_eq!(supplements_of(&z6, idx(&z6, 2)), &[idx(&z6, 3)]);
    assert_eq!(supplements_of(&z6, z6.whole()), &[z6.zero()]);
    let z18 = lat(&[18]);
    assert_eq!(supplements_of(&z18, idx(&z18, 9)), &[idx(&z18, 2)]);
    assert!(satisfies_is(&z18, idx(&z18, 9)));
    assert!(!satisfies_is(&z18, idx(&z18, 6)));
    assert!(satisfies_is(&z18, z18.zero()));

    let mh = |l: &Lattice<i64>| maximal_hollow_submodules(l);
    assert_eq!(mh(&z12), vec![idx(&z12, 3), idx(&z12, 4)]);
    assert_eq!(mh(&z8), vec![z8.whole()]);
    let v4 = lat(&[2, 2]);
    assert_eq!(mh(&v4), v4.atoms().to_vec());
    assert_eq!(mh(&v4).len(), 3);

    let p = classify(&z12);
    assert!(p.is_lifting && !p.is_s_lifting && p.is_multiplication);
    assert_eq!(p.hollow_dim, 2);
    let p = classify(&z8);
    assert!(p.is_lifting && !p.is_s_lifting);
    let p = classify(&v4);
    assert!(p.is_semisimple && p.is_s_lifting && !p.is_multiplication);
}
