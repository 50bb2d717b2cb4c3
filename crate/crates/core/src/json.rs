//! JSON encoding of the exact types.
//!
//! Rationals travel as strings (`"p/q"`, or just `"p"` for integers) so that
//! no precision is lost; polynomials are arrays of those strings in
//! ascending order.  Laurent polynomials and Faulhaber polynomials carry
//! their extra structure (`min_exp`, the power-sum index `n`) in small
//! objects.  Every encoder has a matching parser and parsing re-validates
//! structure, so round-tripping is exact.

use crate::error::{Error, Result};
use crate::faulhaber::FaulhaberPoly;
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::rational::{self, Rational};
use serde_json::{json, Value};

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(rational::to_string(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rational::rat(i))
            } else {
                Err(Error::Parse(format!(
                    "only integer JSON numbers convert exactly, got {n}"
                )))
            }
        }
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient array, got {v}")))?;
    let coeffs = arr.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

pub fn laurent_to_json(l: &LaurentPoly) -> Value {
    json!({
        "min_exp": l.min_exp(),
        "coeffs": Value::Array(l.coeffs().iter().map(rational_to_json).collect::<Vec<_>>()),
    })
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected a Laurent object, got {v}")))?;
    let min_exp = obj
        .get("min_exp")
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Parse("Laurent object needs an integer `min_exp`".into()))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("Laurent object needs a `coeffs` array".into()))?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentPoly::new(min_exp, coeffs))
}

pub fn faulhaber_to_json(f: &FaulhaberPoly) -> Value {
    json!({
        "n": f.index(),
        "coeffs": Value::Array(f.coeffs().iter().map(rational_to_json).collect::<Vec<_>>()),
    })
}

pub fn faulhaber_from_json(v: &Value) -> Result<FaulhaberPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse(format!("expected a Faulhaber object, got {v}")))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("Faulhaber object needs an index `n`".into()))?;
    let n = u32::try_from(n).map_err(|_| Error::Parse(format!("index {n} out of range")))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("Faulhaber object needs a `coeffs` array".into()))?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    FaulhaberPoly::from_checked(n, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faulhaber::faulhaber_by_substitution;
    use crate::rational::{frac, rat};

    #[test]
    fn rational_round_trip() {
        for r in [rat(0), rat(-7), frac(22, 7), frac(-691, 2730)] {
            let v = rational_to_json(&r);
            assert_eq!(rational_from_json(&v).unwrap(), r);
        }
        assert_eq!(rational_from_json(&json!(13)).unwrap(), rat(13));
        assert!(rational_from_json(&json!(0.5)).is_err());
        assert!(rational_from_json(&json!("1/0")).is_err());
        assert!(rational_from_json(&json!([1])).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let p = Poly::from_coeffs(vec![rat(0), frac(-1, 6), rat(3)]);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
        assert_eq!(poly_to_json(&Poly::zero()), json!([]));
        assert!(poly_from_json(&json!("x")).is_err());
    }

    #[test]
    fn laurent_round_trip() {
        let l = LaurentPoly::new(-3, vec![rat(1), rat(0), frac(5, 2), rat(-1)]);
        let v = laurent_to_json(&l);
        assert_eq!(v["min_exp"], json!(-3));
        assert_eq!(laurent_from_json(&v).unwrap(), l);
        assert!(laurent_from_json(&json!({"coeffs": []})).is_err());
    }

    #[test]
    fn faulhaber_round_trip_re_validates() {
        for n in 2..=15u32 {
            let f = faulhaber_by_substitution(n).unwrap();
            let v = faulhaber_to_json(&f);
            assert_eq!(faulhaber_from_json(&v).unwrap(), f);
        }
        // Corrupting a coefficient breaks an invariant and the parse fails.
        let f = faulhaber_by_substitution(9).unwrap();
        let mut v = faulhaber_to_json(&f);
        v["coeffs"][0] = json!("1/2");
        assert!(faulhaber_from_json(&v).is_err());
        // Wrong coefficient count fails too.
        let short = json!({"n": 9, "coeffs": ["1"]});
        assert!(faulhaber_from_json(&short).is_err());
    }
}
