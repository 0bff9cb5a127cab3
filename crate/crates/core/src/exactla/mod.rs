//! Exact rational arithmetic: matrices, rank, kernels and LP feasibility.

mod lp;
mod matrix;

pub use lp::{
    affine_dependence_with_signs, FarkasCertificate, LinearProgram, LpFeasibility, LpOptimum,
    Relation, VarSign,
};
pub use matrix::{bareiss_rank, sparse_integer_rank, RationalMatrix};

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

/// Arbitrary-precision rational; always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"p"` or a decimal like `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num::pow(BigInt::from(10), frac.len());
        let mag = int_part.abs() * &scale + frac_part;
        let num = if neg { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    let p: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapters for rationals as strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        value_to_rational(&v).map_err(serde::de::Error::custom)
    }

    pub(crate) fn value_to_rational(v: &serde_json::Value) -> Result<Rational, String> {
        match v {
            serde_json::Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(super::rat(i))
                } else {
                    parse_rational(&n.to_string()).map_err(|e| e.to_string())
                }
            }
            _ => Err("expected a rational string".into()),
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<serde_json::Value>::deserialize(d)?;
            v.iter()
                .map(value_to_rational)
                .collect::<Result<_, _>>()
                .map_err(serde::de::Error::custom)
        }
    }
}
