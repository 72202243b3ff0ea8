//! Reading and writing the objects of `shipark_core` as JSON or compact text.
//!
//! Compact text: a word or function is a string of nonzero digits, a pair is
//! `word arcs` (`843967125 1-6,3-8,6-9`, arcs omitted when empty), a function
//! off `[m]` is `values domain` (`113414 346789`), a point is `p/q` entries
//! separated by commas. JSON follows the core serde encodings.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use shipark_core::geometry::{format_rational, parse_rational, RationalPoint};
use shipark_core::{
    format_compact, parse_compact_fn, parse_compact_intervals, parse_compact_word, GroundSet,
    Interval, IntervalSet, ParkingFn, ValidPair, Word,
};

/// Errors surfaced by the command line.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] shipark_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Json(_) => "Json",
            CliError::Io(_) => "Io",
            CliError::Usage(_) => "Usage",
        }
    }

    /// 2 for usage errors, 1 otherwise.
    pub fn status(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    /// JSON when the text starts like a JSON document.
    pub fn detect(s: &str) -> Format {
        match s.trim_start().chars().next() {
            Some('{') | Some('[') | Some('"') => Format::Json,
            _ => Format::Text,
        }
    }
}

/// The whole of a file, or of standard input for `-`.
pub fn read_source(path: &Path) -> Result<String> {
    let mut s = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path)?;
    }
    if s.trim().is_empty() {
        return Err(CliError::Usage(format!("no input in {}", path.display())));
    }
    Ok(s)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairRaw {
    word: Vec<u32>,
    #[serde(default)]
    intervals: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FnRaw {
    Full {
        domain: Option<Vec<u32>>,
        values: Vec<u32>,
    },
    Bare(Vec<u32>),
}

pub fn pair_from_parts(word: Vec<u32>, intervals: Vec<Interval>) -> Result<ValidPair> {
    Ok(ValidPair::new(Word::from_letters(word)?, intervals)?)
}

pub fn fn_from_parts(domain: Option<Vec<u32>>, values: Vec<u32>) -> Result<ParkingFn> {
    let ground = match domain {
        Some(d) => GroundSet::new(d)?,
        None => GroundSet::upto(values.len())?,
    };
    Ok(ParkingFn::new(ground, values)?)
}

/// A domain given as digits (`346789`) or separated numbers (`3,4,6,10`).
pub fn parse_domain(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse().map_err(|_| {
                    CliError::Domain(shipark_core::Error::Parse {
                        what: "domain",
                        input: s.to_string(),
                    })
                })
            })
            .collect()
    } else {
        Ok(parse_compact_word(s)?)
    }
}

pub fn parse_pair(s: &str) -> Result<ValidPair> {
    match Format::detect(s) {
        Format::Json => {
            let raw: PairRaw = serde_json::from_str(s)?;
            pair_from_parts(
                raw.word,
                raw.intervals
                    .into_iter()
                    .map(|[o, c]| Interval::new(o, c))
                    .collect(),
            )
        }
        Format::Text => {
            let mut parts = s.split_whitespace();
            let word = parse_compact_word(parts.next().unwrap_or(""))?;
            let rest: Vec<&str> = parts.collect();
            pair_from_parts(word, parse_compact_intervals(&rest.join(""))?)
        }
    }
}

pub fn parse_fn(s: &str) -> Result<ParkingFn> {
    match Format::detect(s) {
        Format::Json => match serde_json::from_str(s)? {
            FnRaw::Full { domain, values } => fn_from_parts(domain, values),
            FnRaw::Bare(values) => fn_from_parts(None, values),
        },
        Format::Text => {
            let mut parts = s.split_whitespace();
            let values = parse_compact_fn(parts.next().unwrap_or(""))?;
            let domain = parts.next().map(parse_domain).transpose()?;
            if parts.next().is_some() {
                return Err(shipark_core::Error::Parse {
                    what: "function",
                    input: s.trim().to_string(),
                }
                .into());
            }
            fn_from_parts(domain, values)
        }
    }
}

/// A word, also accepted as the `word` of a pair object.
pub fn parse_word(s: &str) -> Result<Word> {
    match Format::detect(s) {
        Format::Json => {
            let v: serde_json::Value = serde_json::from_str(s)?;
            let letters = match v.get("word") {
                Some(w) => Vec::<u32>::deserialize(w)?,
                None => Vec::<u32>::deserialize(&v)?,
            };
            Ok(Word::from_letters(letters)?)
        }
        Format::Text => Ok(Word::from_letters(parse_compact_word(s)?)?),
    }
}

pub fn parse_point(s: &str) -> Result<RationalPoint> {
    let entries: Vec<String> = match Format::detect(s) {
        Format::Json => serde_json::from_str(s)?,
        Format::Text => s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect(),
    };
    let coords = entries
        .iter()
        .map(|e| parse_rational(e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalPoint::new(coords)?)
}

pub fn fn_text(f: &ParkingFn) -> String {
    if f.ground().is_initial() {
        f.to_string()
    } else {
        format!("{} {}", f, format_compact(f.ground().elements()))
    }
}

pub fn point_text(x: &RationalPoint) -> String {
    x.coords()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn arcs_text(arcs: &IntervalSet) -> String {
    arcs.to_string()
}

/// Serializes `value` as one line, or indented with `pretty`.
pub fn to_json<T: Serialize + ?Sized>(value: &T, pretty: bool) -> String {
    let s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    s.expect("serializable")
}

/// Elements in one row and values below, aligned.
pub fn two_line(f: &ParkingFn) -> String {
    let width = f
        .ground()
        .elements()
        .iter()
        .chain(f.values())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let row = |vals: &[u32]| {
        vals.iter()
            .map(|v| format!("{v:>width$}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("x  {}\nf  {}", row(f.ground().elements()), row(f.values()))
}
