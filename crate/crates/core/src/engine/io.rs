//! JSON forms of [`PointSet`] and [`DerivationTrace`].
//!
//! ```json
//! {"dim": 2, "norm": "l1", "points": [["1/2", "1/2"], ["1", "0"]]}
//! ```
//!
//! Rationals are written as `"p/q"` strings in lowest terms, or as integer
//! strings when the denominator is 1. On input, bare JSON integers are also
//! accepted. Trace ranks are integers, or `"stable"`.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{DerivationTrace, EngineError, NormTag, PointSet, Rank, Rational, Result, Vector};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() || s.ends_with('/') {
        return Err(EngineError::Format(format!("invalid rational {s:?}")));
    }
    if let Some((_, den)) = s.split_once('/') {
        if den.trim_start_matches('0').is_empty() {
            return Err(EngineError::Format(format!("zero denominator in {s:?}")));
        }
    }
    Rational::from_str(s).map_err(|_| EngineError::Format(format!("invalid rational {s:?}")))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

impl RawRational {
    fn into_rational(self) -> Result<Rational> {
        match self {
            RawRational::Text(s) => parse_rational(&s),
            RawRational::Int(n) => Ok(Rational::from_integer(n.into())),
        }
    }
}

pub(crate) mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        RawRational::deserialize(d)?
            .into_rational()
            .map_err(D::Error::custom)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RawRational>::deserialize(d)?;
        raw.into_iter()
            .map(RawRational::into_rational)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PointSetRepr {
    dim: usize,
    norm: NormTag,
    points: Vec<Vector>,
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointSetRepr {
            dim: self.dim(),
            norm: self.norm(),
            points: self.points().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PointSetRepr::deserialize(d)?;
        PointSet::new(r.dim, r.norm, r.points).map_err(D::Error::custom)
    }
}

impl PointSet {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| EngineError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("point sets always serialize")
    }
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rank::Finite(k) => s.serialize_u64(*k as u64),
            Rank::Stable => s.serialize_str("stable"),
        }
    }
}

impl<'de> Deserialize<'de> for Rank {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(usize),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(k) => Ok(Rank::Finite(k)),
            Raw::Word(w) if w == "stable" => Ok(Rank::Stable),
            Raw::Word(w) => Err(D::Error::custom(format!("invalid rank {w:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TraceRepr {
    #[serde(with = "rational_str")]
    epsilon: Rational,
    stages: Vec<Vec<usize>>,
    ranks: Vec<Rank>,
    stabilized: bool,
}

impl Serialize for DerivationTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TraceRepr {
            epsilon: self.epsilon.clone(),
            stages: self.stages.clone(),
            ranks: self.ranks.clone(),
            stabilized: self.stabilized,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DerivationTrace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TraceRepr::deserialize(d)?;
        Ok(DerivationTrace {
            epsilon: r.epsilon,
            stages: r.stages,
            ranks: r.ranks,
            stabilized: r.stabilized,
        })
    }
}

impl DerivationTrace {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| EngineError::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("traces always serialize")
    }
}
