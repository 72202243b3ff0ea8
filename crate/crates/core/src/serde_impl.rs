//! JSON-friendly encodings. Decoding re-runs every validation.
//!
//! - `ValidPair`: `{"word":[8,4,3,...],"intervals":[[1,6],[3,8]]}`
//! - `ParkingFn`: `{"domain":[3,4,6],"values":[1,1,3]}`
//! - `Word`, `GroundSet`: arrays of letters; `Interval`: `[open, close]`
//! - `RationalPoint`: array of `"p/q"` strings

use alloc::string::String;
use alloc::vec::Vec;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::geometry::{format_rational, parse_rational, RationalPoint};
use crate::model::{GroundSet, Interval, IntervalSet, Letter, ParkingFn, ValidPair, Word};

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroundSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        GroundSet::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Word::from_letters(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.open, self.close].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [open, close] = <[usize; 2]>::deserialize(d)?;
        Ok(Interval::new(open, close))
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_slice().serialize(s)
    }
}

#[derive(Serialize)]
struct PairOut<'a> {
    word: &'a [Letter],
    intervals: &'a [Interval],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairIn {
    word: Vec<Letter>,
    #[serde(default)]
    intervals: Vec<Interval>,
}

impl Serialize for ValidPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PairOut {
            word: self.word().letters(),
            intervals: self.arcs().as_slice(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ValidPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PairIn::deserialize(d)?;
        let word = Word::from_letters(raw.word).map_err(D::Error::custom)?;
        ValidPair::new(word, raw.intervals).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct FnOut<'a> {
    domain: &'a [Letter],
    values: &'a [u32],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FnIn {
    domain: Option<Vec<Letter>>,
    values: Vec<u32>,
}

impl Serialize for ParkingFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FnOut {
            domain: self.ground().elements(),
            values: self.values(),
        }
        .serialize(s)
    }
}

/// A missing `domain` means `[1, m]`.
impl<'de> Deserialize<'de> for ParkingFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FnIn::deserialize(d)?;
        let ground = match raw.domain {
            Some(domain) => GroundSet::new(domain),
            None => GroundSet::upto(raw.values.len()),
        }
        .map_err(D::Error::custom)?;
        ParkingFn::new(ground, raw.values).map_err(D::Error::custom)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coords: Vec<String> = self.coords().iter().map(format_rational).collect();
        coords.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coords = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        RationalPoint::new(coords).map_err(D::Error::custom)
    }
}
