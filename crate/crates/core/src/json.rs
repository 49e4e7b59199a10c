//! Exact integer values in JSON documents.

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};

pub(crate) fn int(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

pub(crate) fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub(crate) fn parse_int(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::Parse(format!("expected an integer, got {v}"))),
    };
    text.parse()
        .map_err(|_| Error::Parse(format!("expected an integer, got {text}")))
}

pub(crate) fn parse_ints(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an integer array, got {v}")))?
        .iter()
        .map(parse_int)
        .collect()
}
