//! Compact text forms: digit strings for words and functions, `1-6,3-8` for
//! interval lists.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::model::{Interval, Letter};

/// Concatenated digits when every entry is a single digit, space-separated
/// decimals otherwise.
pub fn format_compact(values: &[u32]) -> String {
    let mut out = String::with_capacity(values.len());
    let single = values.iter().all(|&v| v < 10);
    for (k, v) in values.iter().enumerate() {
        if k > 0 && !single {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn parse_digits(what: &'static str, s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let err = || Error::Parse {
        what,
        input: s.to_string(),
    };
    if s.is_empty() {
        return Err(err());
    }
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if d > 0 => Ok(d),
            _ => Err(err()),
        })
        .collect()
}

/// A word written as a string of nonzero digits, e.g. `843967125`.
pub fn parse_compact_word(s: &str) -> Result<Vec<Letter>> {
    parse_digits("word", s)
}

/// A function in one-line notation, e.g. `341183414`.
pub fn parse_compact_fn(s: &str) -> Result<Vec<u32>> {
    parse_digits("function", s)
}

/// Interval lists such as `1-6,3-8,6-9`; the empty string is the empty list.
pub fn parse_compact_intervals(s: &str) -> Result<Vec<Interval>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            let err = || Error::Parse {
                what: "interval",
                input: part.to_string(),
            };
            let (o, c) = part.trim().split_once('-').ok_or_else(err)?;
            let open = o.trim().parse().map_err(|_| err())?;
            let close = c.trim().parse().map_err(|_| err())?;
            Ok(Interval::new(open, close))
        })
        .collect()
}
