//! JSON encodings of the domain types. Rationals serialize as strings
//! `"p/q"` (or `"p"`) in lowest terms with positive denominator; root
//! systems as `{"kind":"C","n":3}`; ideals as a system plus a functional
//! list, where each functional is the map `mu -> h . mu + c`. Shorthand
//! generators are accepted on input: `{"H":2,"c":"1"}` is the second
//! simple-coroot functional plus 1, `{"E":3,"c":"0"}` the third coordinate
//! functional.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::exactlin::{AffineSubspace, RatVec};
use crate::fcr::FcrVerdict;
use crate::ideals::{canonicalize, LinearIdeal};
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::rootsys::{build, Kind, RootSystem};
use crate::weyl::{word_string, WeylElement};
use crate::{Error, Result};

pub fn ratvec_to_json(v: &RatVec) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rat_to_string(x))).collect())
}

pub fn ratvec_from_json(v: &Value, dim: usize) -> Result<RatVec> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of rational strings".into()))?;
    if arr.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: arr.len() });
    }
    let entries = arr
        .iter()
        .map(|x| match x {
            Value::String(s) => rat_from_str(s),
            Value::Number(m) if m.is_i64() => Ok(rat_int(m.as_i64().unwrap())),
            other => Err(Error::Parse(format!("bad rational {other}"))),
        })
        .collect::<Result<Vec<Rat>>>()?;
    Ok(RatVec::new(entries))
}

pub fn system_to_json(rs: &RootSystem) -> Value {
    json!({ "kind": rs.kind().to_string(), "n": rs.ambient_dim() })
}

pub fn system_from_json(v: &Value) -> Result<Arc<RootSystem>> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("system needs a \"kind\" string".into()))?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("system needs a positive \"n\"".into()))?;
    build(Kind::parse(kind)?, n as usize)
}

pub fn subspace_to_json(s: &AffineSubspace) -> Value {
    json!({
        "base": ratvec_to_json(s.base_point()),
        "directions": s.direction_basis().iter().map(ratvec_to_json).collect::<Vec<_>>(),
        "dim": s.dim(),
    })
}

fn functional_from_json(rs: &RootSystem, v: &Value) -> Result<(RatVec, Rat)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("functional must be an object".into()))?;
    let c = match obj.get("c") {
        None => Rat::from_integer(0.into()),
        Some(Value::String(s)) => rat_from_str(s)?,
        Some(Value::Number(m)) if m.is_i64() => rat_int(m.as_i64().unwrap()),
        Some(other) => return Err(Error::Parse(format!("bad constant {other}"))),
    };
    let n = rs.ambient_dim();
    if let Some(h) = obj.get("h") {
        return Ok((ratvec_from_json(h, n)?, c));
    }
    if let Some(i) = obj.get("H").and_then(Value::as_u64) {
        let i = i as usize;
        if i == 0 || i > rs.semisimple_rank() {
            return Err(Error::Parse(format!(
                "H index {i} out of range 1..={}",
                rs.semisimple_rank()
            )));
        }
        let alpha = &rs.simple_roots()[i - 1];
        let covee = alpha.scale(&(rat_int(2) / alpha.dot(alpha)));
        return Ok((covee, c));
    }
    if let Some(i) = obj.get("E").and_then(Value::as_u64) {
        let i = i as usize;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("E index {i} out of range 1..={n}")));
        }
        return Ok((RatVec::unit(n, i - 1), c));
    }
    Err(Error::Parse("functional needs one of \"h\", \"H\", \"E\"".into()))
}

pub fn ideal_to_json(ideal: &LinearIdeal) -> Value {
    let functionals: Vec<Value> = ideal
        .functionals()
        .iter()
        .map(|(h, c)| json!({ "h": ratvec_to_json(h), "c": rat_to_string(c) }))
        .collect();
    json!({
        "system": system_to_json(ideal.system()),
        "functionals": functionals,
        "variety": subspace_to_json(ideal.variety()),
    })
}

pub fn ideal_from_json(v: &Value) -> Result<LinearIdeal> {
    let system = system_from_json(
        v.get("system")
            .ok_or_else(|| Error::Parse("ideal needs a \"system\"".into()))?,
    )?;
    let fs = v
        .get("functionals")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("ideal needs a \"functionals\" array".into()))?;
    let functionals: Vec<(RatVec, Rat)> = fs
        .iter()
        .map(|f| functional_from_json(&system, f))
        .collect::<Result<_>>()?;
    canonicalize(&system, &functionals)
}

pub fn verdict_to_json(rs: &RootSystem, verdict: &FcrVerdict) -> Value {
    let mut obj = Map::new();
    obj.insert("status".into(), Value::String(verdict.status.as_str().into()));
    if let Some(w) = &verdict.witness {
        obj.insert("witness".into(), Value::String(word_string(rs, w)));
    }
    if let Some(b) = &verdict.b_lambda {
        obj.insert(
            "b_lambda".into(),
            Value::Array(b.iter().map(ratvec_to_json).collect()),
        );
    }
    if let Some(base) = &verdict.base_ideal {
        obj.insert("base_ideal".into(), ideal_to_json(base));
    }
    Value::Object(obj)
}

pub fn element_to_json(rs: &RootSystem, w: &WeylElement) -> Value {
    json!({
        "word": word_string(rs, w),
        "matrix": w.matrix().iter().map(ratvec_to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn ideal_round_trip_with_shorthands() {
        let text = r#"{
            "system": {"kind": "C", "n": 3},
            "functionals": [
                {"h": ["1", "-1", "0"], "c": "0"},
                {"H": 2, "c": "1"},
                {"E": 3}
            ]
        }"#;
        let v: Value = serde_json::from_str(text).unwrap();
        let ideal = ideal_from_json(&v).unwrap();
        // H2 + 1 means mu_2 - mu_3 + 1 = 0, E3 means mu_3 = 0, and the
        // explicit row pins mu_1 = mu_2: variety {(-1, -1, 0)}.
        assert_eq!(ideal.dim(), 0);
        assert!(ideal
            .variety()
            .contains_point(&RatVec::from_ints(&[-1, -1, 0])));
        let back = ideal_to_json(&ideal);
        let again = ideal_from_json(&back).unwrap();
        assert_eq!(again, ideal);
    }

    #[test]
    fn rejects_malformed_input() {
        for text in [
            r#"{"system": {"kind": "Z", "n": 2}, "functionals": []}"#,
            r#"{"system": {"kind": "C", "n": 2}, "functionals": [{"c": "1"}]}"#,
            r#"{"system": {"kind": "C", "n": 2}, "functionals": [{"H": 5}]}"#,
            r#"{"system": {"kind": "C", "n": 2}, "functionals": [{"h": ["1"], "c": "0"}]}"#,
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            assert!(ideal_from_json(&v).is_err(), "{text}");
        }
    }

    #[test]
    fn verdict_serialization_shape() {
        let rs = crate::rootsys::build(Kind::C, 2).unwrap();
        let g = crate::weyl::enumerate_group(&rs).unwrap();
        let ideal = crate::ideals::canonicalize(
            &rs,
            &[(RatVec::from_ints(&[0, 1]), Rat::zero())],
        )
        .unwrap();
        let verdict = crate::fcr::fcr_decide(&g, &ideal).unwrap();
        let v = verdict_to_json(&rs, &verdict);
        assert_eq!(v["status"], "FCR");
        assert!(v.get("witness").is_some());
        assert!(v.get("b_lambda").is_some());
    }
}
