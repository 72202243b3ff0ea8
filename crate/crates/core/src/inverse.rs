//! Recovering the valid pair of a parking function.
//!
//! [`invert`] builds the word left to right together with the opener of the
//! least interval covering each position, keeping only choices that
//! reproduce `f` at that position.
//!
//! The peeling procedure is also provided. The center of `f` and its
//! s-parking give the first letters of the word and the maximal inversions of
//! that prefix give the first arcs. When `f` is not central, [`peel`] cuts the
//! prefix at position `c`, commits the first `c − 1` letters and leaves a
//! parking function on the remaining letters; [`invert_by_peeling`] repeats
//! until what is left is central. It finds the right pair for every parking
//! function on at most five letters but not beyond: from six letters on, the
//! letter following the center is not always `a`, and the result then fails
//! the label check.

use alloc::vec::Vec;

use crate::contraction::{center, maxinv, s_park, CenterDecomposition};
use crate::error::{Error, Result};
use crate::labeling::label;
use crate::model::{GroundSet, Interval, IntervalSet, Letter, ParkingFn, ValidPair, Word};

/// One level of the peeling recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub center: CenterDecomposition,
    /// `s_park(f_Z)`, the prefix of the final word on the center.
    pub prefix: Word,
    /// `maxinv(prefix)`.
    pub prefix_arcs: IntervalSet,
    /// `min f(A∖Z)`.
    pub b: u32,
    /// The largest element outside the center with `f(a) = b`.
    pub a: Letter,
    /// Cut position; the first `c − 1` letters of the prefix are committed.
    pub c: usize,
    /// The committed letters, `X = prefix([c − 1])`.
    pub removed: GroundSet,
    /// `f̃` on `A∖X`.
    pub residual: ParkingFn,
}

impl PeelStep {
    pub fn zeta(&self) -> usize {
        self.center.zeta()
    }

    /// The committed letters in word order.
    pub fn committed(&self) -> &[Letter] {
        &self.prefix.letters()[..self.c - 1]
    }

    /// The arcs of the prefix that open before the cut; these are final.
    pub fn kept_arcs(&self) -> impl Iterator<Item = &Interval> {
        self.prefix_arcs.iter().filter(move |iv| iv.open < self.c)
    }
}

/// Peels one level off a parking function that is not central.
pub fn peel(f: &ParkingFn) -> Result<PeelStep> {
    let dec = center(f);
    if dec.zeta() == f.len() {
        return Err(Error::AlreadyCentral);
    }
    let prefix =
        s_park(&dec.restriction).map_err(|_| Error::InternalMismatch("center is not central"))?;
    peel_from(f, dec, prefix)
}

fn peel_from(f: &ParkingFn, dec: CenterDecomposition, prefix: Word) -> Result<PeelStep> {
    let zeta = dec.zeta();
    let outside = || f.iter().filter(|&(x, _)| !dec.center.contains(x));
    let b = outside()
        .map(|(_, v)| v)
        .min()
        .ok_or(Error::AlreadyCentral)?;
    let a = outside()
        .filter(|&(_, v)| v == b)
        .map(|(x, _)| x)
        .max()
        .unwrap();

    let c = if b as usize > zeta {
        if b as usize != zeta + 1 {
            return Err(Error::InternalMismatch("b exceeds zeta + 1"));
        }
        b as usize
    } else {
        let letters = prefix.letters();
        // h(i) = i + |prefix([i, ζ]) ∩ [a − 1]|
        let mut small_suffix = letters.iter().filter(|&&x| x < a).count();
        let mut h = alloc::vec![0usize; zeta + 1];
        for i in 1..=zeta {
            h[i] = i + small_suffix;
            if letters[i - 1] < a {
                small_suffix -= 1;
            }
        }
        if !(h[1] < b as usize && b as usize <= h[zeta]) {
            return Err(Error::InternalMismatch("cut equation has no solution"));
        }
        let c = (1..=zeta).rev().find(|&i| h[i] == b as usize).unwrap();
        if prefix.letter(c) <= a {
            return Err(Error::InternalMismatch(
                "letter at the cut does not exceed a",
            ));
        }
        c
    };

    let mut committed = prefix.letters()[..c - 1].to_vec();
    committed.sort_unstable();
    let removed = GroundSet::new(committed).map_err(|_| Error::InternalMismatch("empty cut"))?;
    let rest = f
        .ground()
        .filter(|x| !removed.contains(x))
        .ok_or(Error::InternalMismatch("cut removes every element"))?;
    let values = rest
        .elements()
        .iter()
        .map(|&x| {
            let v = f.value(x).unwrap() as usize;
            if dec.center.contains(x) {
                v - removed.elements().iter().filter(|&&y| y < x).count()
            } else {
                v + 1 - c
            }
        })
        .map(|v| v as u32)
        .collect();
    let residual = ParkingFn::new(rest, values)
        .map_err(|_| Error::InternalMismatch("residual is not parking"))?;

    let next = center(&residual);
    if !next.center.contains(a) {
        return Err(Error::InternalMismatch("a is outside the residual center"));
    }
    if dec
        .center
        .elements()
        .iter()
        .any(|&z| !removed.contains(z) && !next.center.contains(z))
    {
        return Err(Error::InternalMismatch(
            "Z∖X is not inside the residual center",
        ));
    }

    let prefix_arcs = maxinv(&prefix);
    Ok(PeelStep {
        center: dec,
        prefix,
        prefix_arcs,
        b,
        a,
        c,
        removed,
        residual,
    })
}

/// One row of the peeling table: the function at that level, the peel data
/// (absent on the final, central level), `f_Z` and its s-parking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelTraceRow {
    pub function: ParkingFn,
    pub a: Option<Letter>,
    pub b: Option<u32>,
    pub c: Option<usize>,
    pub restriction: ParkingFn,
    pub prefix: Word,
}

/// The unique valid pair labeled by `f`.
pub fn invert(f: &ParkingFn) -> Result<ValidPair> {
    let mut s = Search::new(f);
    if !s.extend(1) {
        return Err(Error::InternalMismatch("no valid pair has this label"));
    }
    let pair = s.pair(f);
    if label(&pair) != *f {
        return Err(Error::InternalMismatch(
            "label of the recovered pair differs",
        ));
    }
    Ok(pair)
}

/// Depth-first construction of `(w, o)`, where `o_j` is the opener of the
/// least interval covering `j` (or `j`). With `o` nondecreasing, the label
/// reads `f(w_j) = j − |{o_j ≤ k < j : w_k > w_j}|`, and the positions
/// sharing an opener `v` form the interval `[v, last]` whenever `last > v`.
struct Search<'a> {
    /// `f` by rank.
    values: &'a [u32],
    /// Ranks of the letters placed so far.
    word: Vec<usize>,
    openers: Vec<usize>,
    used: Vec<bool>,
    /// Unplaced elements by value.
    pending: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(f: &'a ParkingFn) -> Self {
        let m = f.len();
        let mut pending = alloc::vec![0; m + 1];
        for &v in f.values() {
            pending[v as usize] += 1;
        }
        Search {
            values: f.values(),
            word: Vec::with_capacity(m),
            openers: Vec::with_capacity(m),
            used: alloc::vec![false; m],
            pending,
        }
    }

    fn len(&self) -> usize {
        self.values.len()
    }

    /// Whether the interval of the block with opener `v` ending at `last`
    /// has a descent at its ends.
    fn block_closes(&self, v: usize, last: usize) -> bool {
        v == last || self.word[v - 1] > self.word[last - 1]
    }

    /// Every unplaced element can still land somewhere: its value is at least
    /// the current opener and at most its position.
    fn feasible(&self, opener: usize) -> bool {
        let m = self.len();
        let p = self.word.len();
        if self.pending[1..opener].iter().any(|&k| k > 0) {
            return false;
        }
        let mut at_most = self.pending[..=p].iter().sum::<usize>();
        for t in p + 1..=m {
            at_most += self.pending[t];
            if at_most < t - p {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, p: usize) -> bool {
        let m = self.len();
        if p > m {
            return self.block_closes(self.openers[m - 1], m);
        }
        let lo = self.openers.last().copied().unwrap_or(1);
        for x in 0..m {
            let target = self.values[x] as usize;
            if self.used[x] || target > p || target < lo {
                continue;
            }
            // f(x) = p − larger letters in [o, p), nonincreasing as o drops
            let mut larger = 0;
            for o in (lo..=p).rev() {
                if o < p && self.word[o - 1] > x {
                    larger += 1;
                }
                let v = p - larger;
                if v < target {
                    break;
                }
                if v > target {
                    continue;
                }
                if p > 1 && o != lo && !self.block_closes(lo, p - 1) {
                    continue;
                }
                self.word.push(x);
                self.openers.push(o);
                self.used[x] = true;
                self.pending[target] -= 1;
                if self.feasible(o) && self.extend(p + 1) {
                    return true;
                }
                self.pending[target] += 1;
                self.used[x] = false;
                self.openers.pop();
                self.word.pop();
            }
        }
        false
    }

    fn pair(&self, f: &ParkingFn) -> ValidPair {
        let ground = f.ground();
        let letters = self.word.iter().map(|&r| ground.elements()[r]).collect();
        let word = Word::from_parts_unchecked(ground.clone(), letters);
        let mut arcs = Vec::new();
        for (j, &v) in self.openers.iter().enumerate() {
            let last = j + 1;
            let ends_block = self.openers.get(j + 1).is_none_or(|&next| next != v);
            if ends_block && v < last {
                arcs.push(Interval::new(v, last));
            }
        }
        ValidPair::from_parts_unchecked(word, IntervalSet::from_unchecked(arcs))
    }
}

/// The peeling procedure, checked against the label at the end.
pub fn invert_by_peeling(f: &ParkingFn) -> Result<ValidPair> {
    invert_with(f, |_| {})
}

/// [`invert_by_peeling`], also returning one row per peel level. The rows
/// are returned even when the reconstruction fails the label check.
pub fn peel_trace(f: &ParkingFn) -> (Result<ValidPair>, Vec<PeelTraceRow>) {
    let mut rows = Vec::new();
    let p = invert_with(f, |row| rows.push(row));
    (p, rows)
}

fn invert_with(f: &ParkingFn, mut on_level: impl FnMut(PeelTraceRow)) -> Result<ValidPair> {
    let m = f.len();
    let mut letters: Vec<Letter> = Vec::with_capacity(m);
    let mut arcs: Vec<Interval> = Vec::new();
    let mut offset = 0;
    let mut current = f.clone();
    loop {
        let dec = center(&current);
        let prefix = s_park(&dec.restriction)
            .map_err(|_| Error::InternalMismatch("center is not central"))?;
        let central = dec.zeta() == current.len();
        let step = if central {
            None
        } else {
            Some(peel_from(&current, dec.clone(), prefix.clone())?)
        };
        // arcs opening at or after the cut may be truncated by the center;
        // the next level rebuilds them
        let cut = step.as_ref().map_or(usize::MAX, |s| s.c);
        for iv in maxinv(&prefix).iter().filter(|iv| iv.open < cut) {
            let iv = iv.shifted(offset);
            if let Some(last) = arcs.last() {
                if iv.open <= last.open || iv.close <= last.close {
                    return Err(Error::InternalMismatch("arcs out of order across levels"));
                }
            }
            arcs.push(iv);
        }
        let Some(step) = step else {
            letters.extend_from_slice(prefix.letters());
            on_level(PeelTraceRow {
                function: current,
                a: None,
                b: None,
                c: None,
                restriction: dec.restriction,
                prefix,
            });
            break;
        };
        letters.extend_from_slice(step.committed());
        offset += step.c - 1;
        on_level(PeelTraceRow {
            function: current,
            a: Some(step.a),
            b: Some(step.b),
            c: Some(step.c),
            restriction: step.center.restriction,
            prefix: step.prefix,
        });
        current = step.residual;
    }

    let word = Word::new(f.ground().clone(), letters)
        .map_err(|_| Error::InternalMismatch("recovered letters are not a word"))?;
    let pair = ValidPair::new(word, arcs)
        .map_err(|_| Error::InternalMismatch("recovered arcs are invalid"))?;
    if label(&pair) != *f {
        return Err(Error::InternalMismatch(
            "label of the recovered pair differs",
        ));
    }
    Ok(pair)
}
