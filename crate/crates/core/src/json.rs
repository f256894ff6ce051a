//! Exact JSON encoding of big integers.
//!
//! Values that fit a machine word are emitted as plain JSON numbers. Larger
//! values go through `serde_json::Number`, which keeps every digit when the
//! `arbitrary_precision` feature is on.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::ser::{Error as _, SerializeSeq};
use serde::{Serialize, Serializer};

pub(crate) struct Nat<'a>(pub &'a BigUint);

impl Serialize for Nat<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => serializer.serialize_u64(v),
            None => serde_json::Number::from_str(&self.0.to_string())
                .map_err(S::Error::custom)?
                .serialize(serializer),
        }
    }
}

pub(crate) struct Int<'a>(pub &'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serde_json::Number::from_str(&self.0.to_string())
                .map_err(S::Error::custom)?
                .serialize(serializer),
        }
    }
}

pub(crate) struct NatSeq<'a>(pub &'a [BigUint]);

impl Serialize for NatSeq<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&Nat(v))?;
        }
        seq.end()
    }
}

pub(crate) struct IntSeq<'a>(pub &'a [BigInt]);

impl Serialize for IntSeq<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&Int(v))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_values_keep_all_digits() {
        let big = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let small = BigUint::from(42u32);
        let v = vec![small, big];
        let s = serde_json::to_string(&NatSeq(&v)).unwrap();
        assert_eq!(s, "[42,123456789012345678901234567890]");

        let neg = vec![BigInt::from(-74), -BigInt::from(10u8).pow(25)];
        let s = serde_json::to_string(&IntSeq(&neg)).unwrap();
        assert_eq!(s, "[-74,-10000000000000000000000000]");
    }
}
