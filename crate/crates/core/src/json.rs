//! Machine-readable records. Integers are JSON numbers when they fit in an
//! `i64` and decimal strings otherwise; primes and ideals appear as their
//! non-negative generators.

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::module::{FinModule, Ideal, PrimeIdeal, Submodule};
use crate::scalar::Scalar;
use crate::second::{AttReport, Representation};
use crate::structure::StructureProfile;

pub fn int<T: Scalar>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl<T: Scalar> Serialize for FinModule<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rank()))?;
        for d in self.invariant_factors() {
            seq.serialize_element(&int(d))?;
        }
        seq.end()
    }
}

pub fn ideal<T: Scalar>(i: &Ideal<T>) -> Value {
    int(i.generator())
}

pub fn primes<T: Scalar>(ps: &[PrimeIdeal<T>]) -> Value {
    Value::Array(ps.iter().map(|p| int(p.generator())).collect())
}

pub fn submodule<T: Scalar>(s: &Submodule<T>) -> Value {
    json!({
        "order": int(&s.order()),
        "generators": s
            .generators()
            .iter()
            .map(|g| Value::Array(g.iter().map(int).collect()))
            .collect::<Vec<_>>(),
        "annihilator": ideal(&s.annihilator()),
    })
}

/// Rebuilds a submodule of `parent` from its record.
pub fn submodule_from<T: Scalar>(parent: &FinModule<T>, v: &Value) -> Result<Submodule<T>> {
    let bad = || Error::InvalidFactor(format!("malformed submodule record {v}"));
    let gens = v["generators"]
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|g| {
            g.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| parse_int(x).and_then(|b| T::from_big(&b)).ok_or_else(bad))
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    parent.submodule(&gens)
}

pub fn representation<T: Scalar>(r: &Representation<T>) -> Value {
    json!({
        "kind": r.kind.name(),
        "summands": r
            .summands
            .iter()
            .zip(&r.attached)
            .map(|(k, p)| json!({ "submodule": submodule(k), "prime": int(p.generator()) }))
            .collect::<Vec<_>>(),
        "attached": primes(&r.attached),
        "is_minimal": r.is_minimal,
        "is_direct": r.is_direct,
    })
}

pub fn att_report<T: Scalar>(a: &AttReport<T>) -> Value {
    json!({
        "att_all": primes(&a.att_all),
        "att_main": primes(&a.att_main),
        "min_all": primes(&a.min_all),
        "max_all": primes(&a.max_all),
        "min_main": primes(&a.min_main),
        "max_main": primes(&a.max_main),
    })
}

pub fn profile(p: &StructureProfile) -> Value {
    json!({
        "is_semisimple": p.is_semisimple,
        "is_hollow": p.is_hollow,
        "is_uniform": p.is_uniform,
        "is_supplemented": p.is_supplemented,
        "is_amply_supplemented": p.is_amply_supplemented,
        "is_lifting": p.is_lifting,
        "is_s_lifting": p.is_s_lifting,
        "is_multiplication": p.is_multiplication,
        "is_atomic": p.is_atomic,
        "is_coatomic": p.is_coatomic,
        "hollow_dim": p.hollow_dim,
        "uniform_dim": p.uniform_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers() {
        assert_eq!(int(&7i64), json!(7));
        let big = BigInt::from(1u128 << 100);
        assert_eq!(int(&big), json!(big.to_string()));
        assert_eq!(parse_int(&int(&big)), Some(big));
    }

    #[test]
    fn submodule_round_trip() {
        let g = FinModule::new(&[2i64, 12]).unwrap();
        let s = g.submodule(&[vec![1, 3], vec![0, 4]]).unwrap();
        let v = submodule(&s);
        assert_eq!(v["order"], json!(s.order()));
        assert_eq!(submodule_from(&g, &v).unwrap(), s);
    }

    #[test]
    fn module_serializes_as_factors() {
        let g = FinModule::new(&[2i64, 9]).unwrap();
        assert_eq!(serde_json::to_value(&g).unwrap(), json!([18]));
    }
}
