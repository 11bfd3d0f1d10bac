//! JSON encoding of exact integers: a number up to 2^53, a decimal string beyond.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serializer};

const MAX_SAFE: u64 = 1 << 53;

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) if v <= MAX_SAFE => s.serialize_u64(v),
        _ => s.serialize_str(&value.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(u64),
        Str(String),
    }
    match Raw::deserialize(d)? {
        Raw::Num(v) => Ok(BigUint::from(v)),
        Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
    }
}
