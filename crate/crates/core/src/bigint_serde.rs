//! Serde adapters that write `BigInt` as a bare JSON number in full decimal.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n = serde_json::Number::from_str(&value.to_string()).map_err(S::Error::custom)?;
    n.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let n = serde_json::Number::deserialize(d)?;
    BigInt::from_str(&n.to_string()).map_err(D::Error::custom)
}

/// Borrowed wrapper for use inside hand-written `Serialize` impls.
pub(crate) struct Num<'a>(pub &'a BigInt);

impl Serialize for Num<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(self.0, s)
    }
}

pub(crate) struct OwnedNum(pub BigInt);

impl<'de> Deserialize<'de> for OwnedNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize(d).map(OwnedNum)
    }
}
