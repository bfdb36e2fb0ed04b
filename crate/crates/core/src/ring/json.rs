//! JSON form of rings and elements: `{"ring": descriptor, "payload": tree}`.
//!
//! Integers and residues are decimal strings, rationals `"p/q"`, polynomials lists of
//! `[exponents, coefficient]`, localized elements `{"num": .., "exp": k}`, pairs 2-lists.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value as Json};

use super::value::{Mono, Poly, Value};
use super::{Ring, RingElement, RingKind};
use crate::error::{Error, Result};

fn bad(what: &str, j: &Json) -> Error {
    Error::Parse(format!("malformed {what}: {j}"))
}

impl Ring {
    pub fn to_json(&self) -> Json {
        match self.kind() {
            RingKind::Integers => json!({"type": "integers"}),
            RingKind::PrimeField(p) => json!({"type": "prime_field", "p": p}),
            RingKind::Rationals => json!({"type": "rationals"}),
            RingKind::Polynomial { base, vars } => {
                json!({"type": "polynomial", "base": base.to_json(), "vars": vars})
            }
            RingKind::Localization { base, multiplier } => json!({
                "type": "localization", "base": base.to_json(), "multiplier": base.payload_to_json(multiplier)
            }),
            RingKind::Quotient { base, modulus, .. } => json!({
                "type": "quotient", "base": base.to_json(), "modulus": base.payload_to_json(modulus)
            }),
            RingKind::Product(a, b) => json!({"type": "product", "left": a.to_json(), "right": b.to_json()}),
            RingKind::MilnorSemidirect { base, multiplier, .. } => json!({
                "type": "milnor_semidirect", "base": base.to_json(), "multiplier": base.payload_to_json(multiplier)
            }),
        }
    }

    /// Accepts the object form above or a string understood by [`Ring::parse_spec`].
    pub fn from_json(j: &Json) -> Result<Ring> {
        if let Some(s) = j.as_str() {
            return Ring::parse_spec(s);
        }
        let ty = j.get("type").and_then(Json::as_str).ok_or_else(|| bad("ring", j))?;
        let sub = |k: &str| j.get(k).ok_or_else(|| bad("ring", j)).and_then(Ring::from_json);
        match ty {
            "integers" => Ok(Ring::integers()),
            "rationals" => Ok(Ring::rationals()),
            "prime_field" => Ring::prime_field(j.get("p").and_then(Json::as_u64).ok_or_else(|| bad("ring", j))?),
            "polynomial" => {
                let vars: Vec<&str> = j
                    .get("vars")
                    .and_then(Json::as_array)
                    .ok_or_else(|| bad("ring", j))?
                    .iter()
                    .map(|v| v.as_str().ok_or_else(|| bad("variable", v)))
                    .collect::<Result<_>>()?;
                Ring::polynomial(&sub("base")?, &vars)
            }
            "localization" | "quotient" | "milnor_semidirect" => {
                let base = sub("base")?;
                let key = if ty == "quotient" { "modulus" } else { "multiplier" };
                let m = base.element_from_payload(j.get(key).ok_or_else(|| bad("ring", j))?)?;
                match ty {
                    "localization" => Ring::localization(&base, &m),
                    "quotient" => Ring::quotient(&base, &m),
                    _ => Ring::milnor_semidirect(&base, &m),
                }
            }
            "product" => Ok(Ring::product(&sub("left")?, &sub("right")?)),
            _ => Err(bad("ring", j)),
        }
    }

    pub(crate) fn payload_to_json(&self, v: &Value) -> Json {
        match (self.kind(), v) {
            (_, Value::Int(n)) => json!(n.to_string()),
            (_, Value::Residue(r)) => json!(r.to_string()),
            (_, Value::Rat(q)) => json!(q.to_string()),
            (_, Value::Poly(p)) => {
                let (coeffs, _) = self.poly_parts().unwrap();
                Json::Array(p.terms.iter().map(|(m, c)| json!([m.0, coeffs.payload_to_json(c)])).collect())
            }
            (RingKind::Localization { base, .. }, Value::Frac(n, k)) => {
                json!({"num": base.payload_to_json(n), "exp": k})
            }
            (RingKind::Product(a, b), Value::Pair(x, y)) => json!([a.payload_to_json(x), b.payload_to_json(y)]),
            (RingKind::MilnorSemidirect { base, poly, .. }, Value::Pair(x, y)) => {
                json!([base.payload_to_json(x), poly.payload_to_json(y)])
            }
            _ => Json::Null,
        }
    }

    fn payload_from_json(&self, j: &Json) -> Result<Value> {
        // Bare numbers and strings are accepted anywhere an integer makes sense.
        if let Some(n) = j.as_i64() {
            return Ok(self.from_big_v(&BigInt::from(n)));
        }
        match self.kind() {
            RingKind::Rationals => {
                let s = j.as_str().ok_or_else(|| bad("rational", j))?;
                let q: BigRational = s.parse().map_err(|_| bad("rational", j))?;
                Ok(Value::Rat(q))
            }
            RingKind::Integers | RingKind::PrimeField(_) => {
                let s = j.as_str().ok_or_else(|| bad("integer", j))?;
                let n: BigInt = s.parse().map_err(|_| bad("integer", j))?;
                Ok(self.from_big_v(&n))
            }
            RingKind::Quotient { .. } if self.residue_modulus().is_some() => {
                let s = j.as_str().ok_or_else(|| bad("integer", j))?;
                let n: BigInt = s.parse().map_err(|_| bad("integer", j))?;
                Ok(self.from_big_v(&n))
            }
            RingKind::Polynomial { .. } | RingKind::Quotient { .. } => {
                if let Some(s) = j.as_str() {
                    return Ok(self.parse(s)?.into_value());
                }
                let (coeffs, n) = self.poly_parts().unwrap();
                let mut terms = Vec::new();
                for t in j.as_array().ok_or_else(|| bad("polynomial", j))? {
                    let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term", t))?;
                    let exps: Vec<u32> = pair[0]
                        .as_array()
                        .ok_or_else(|| bad("exponents", t))?
                        .iter()
                        .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| bad("exponent", e)))
                        .collect::<Result<_>>()?;
                    if exps.len() != n {
                        return Err(bad("exponents", t));
                    }
                    terms.push((Mono(exps), coeffs.payload_from_json(&pair[1])?));
                }
                Ok(Value::Poly(Poly { terms }))
            }
            RingKind::Localization { base, .. } => {
                if let Some(s) = j.as_str() {
                    return Ok(self.parse(s)?.into_value());
                }
                let num = base.payload_from_json(j.get("num").ok_or_else(|| bad("fraction", j))?)?;
                let k = j.get("exp").and_then(Json::as_u64).ok_or_else(|| bad("fraction", j))?;
                Ok(Value::Frac(Box::new(num), k as u32))
            }
            RingKind::Product(a, b) => {
                let pair = j.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("pair", j))?;
                Ok(Value::pair(a.payload_from_json(&pair[0])?, b.payload_from_json(&pair[1])?))
            }
            RingKind::MilnorSemidirect { base, poly, .. } => {
                let pair = j.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("pair", j))?;
                Ok(Value::pair(base.payload_from_json(&pair[0])?, poly.payload_from_json(&pair[1])?))
            }
        }
    }

    /// Element from a payload tree (or an expression string) in this ring.
    pub fn element_from_payload(&self, j: &Json) -> Result<RingElement> {
        let v = self.payload_from_json(j)?;
        self.element(v)
    }
}

impl RingElement {
    pub fn to_json(&self) -> Json {
        json!({"ring": self.ring().to_json(), "payload": self.ring().payload_to_json(self.value())})
    }

    pub fn from_json(j: &Json) -> Result<RingElement> {
        let ring = Ring::from_json(j.get("ring").ok_or_else(|| bad("element", j))?)?;
        ring.element_from_payload(j.get("payload").ok_or_else(|| bad("element", j))?)
    }
}
