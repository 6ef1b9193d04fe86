//! JSON shape: a polynomial is an array of coefficient strings `"p/q"` (or
//! `"p"` when `q = 1`) from low to high degree; a rational function is
//! `{"num": [...], "den": [...]}` in canonical form.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, Poly, RatFn, Rat};

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(bad());
    }
    match s.split_once('/') {
        None => num_bigint::BigInt::from_str(s).map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = num_bigint::BigInt::from_str(p).map_err(|_| bad())?;
            let q = num_bigint::BigInt::from_str(q).map_err(|_| bad())?;
            if q == 0.into() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct PolyVisitor;

impl<'de> Visitor<'de> for PolyVisitor {
    type Value = Poly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an array of rational coefficient strings")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Poly, A::Error> {
        let mut coeffs = Vec::new();
        while let Some(s) = seq.next_element::<String>()? {
            coeffs.push(parse_rat(&s).map_err(de::Error::custom)?);
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Poly, D::Error> {
        deserializer.deserialize_seq(PolyVisitor)
    }
}

#[derive(Serialize, Deserialize)]
struct RatFnRepr {
    num: Poly,
    den: Poly,
}

impl Serialize for RatFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFnRepr { num: self.num().clone(), den: self.den().clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<RatFn, D::Error> {
        let repr = RatFnRepr::deserialize(deserializer)?;
        RatFn::make(repr.num, repr.den).map_err(de::Error::custom)
    }
}
