//! Naturals extended by a saturating infinity.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A count that may be infinite. `Finite(_) < Infinite`, and sums saturate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }

    /// `self >= bound`, where a negative bound is always met.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            ExtNat::Infinite => true,
            ExtNat::Finite(n) => bound <= 0 || n >= bound as u64,
        }
    }

    pub fn saturating_add(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a + b),
            _ => ExtNat::Infinite,
        }
    }

    pub fn plus(self, n: u64) -> ExtNat {
        self.saturating_add(ExtNat::Finite(n))
    }
}

impl std::ops::Add for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: ExtNat) -> ExtNat {
        self.saturating_add(rhs)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(n) => s.serialize_u64(*n),
            ExtNat::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(ExtNat::Finite)
                .ok_or_else(|| serde::de::Error::custom("expected a natural number")),
            serde_json::Value::String(s) if s == "inf" => Ok(ExtNat::Infinite),
            _ => Err(serde::de::Error::custom("expected a natural number or \"inf\"")),
        }
    }
}
