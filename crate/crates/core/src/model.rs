//! Ground sets, words, interval families, valid pairs and parking functions.
//!
//! Every position in this crate is 1-based, and so is every rank of an
//! element inside its ground set.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::text::format_compact;

/// Elements of ground sets, i.e. letters of words.
pub type Letter = u32;

/// A finite nonempty set of positive integers, stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    elements: Vec<Letter>,
}

impl GroundSet {
    /// Builds a ground set from an increasing list of positive integers.
    pub fn new(elements: Vec<Letter>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyGround);
        }
        if let Some(&bad) = elements.iter().find(|&&a| a == 0) {
            return Err(Error::NonPositive(bad));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedGround(w[1]));
        }
        Ok(GroundSet { elements })
    }

    /// The set `{1, ..., n}`.
    pub fn upto(n: usize) -> Result<Self> {
        GroundSet::new((1..=n as Letter).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Letter] {
        &self.elements
    }

    /// The element of rank `i` (1-based).
    pub fn get(&self, i: usize) -> Option<Letter> {
        i.checked_sub(1).and_then(|k| self.elements.get(k).copied())
    }

    /// Rank of `a` in the set (1-based), if present.
    pub fn rank(&self, a: Letter) -> Option<usize> {
        self.elements.binary_search(&a).ok().map(|k| k + 1)
    }

    pub fn contains(&self, a: Letter) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// True when the set is exactly `{1, ..., m}`.
    pub fn is_initial(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(k, &a)| a as usize == k + 1)
    }

    /// The subset of elements accepted by `keep`, or `None` when it is empty.
    pub fn filter(&self, mut keep: impl FnMut(Letter) -> bool) -> Option<GroundSet> {
        let elements: Vec<Letter> = self.elements.iter().copied().filter(|&a| keep(a)).collect();
        (!elements.is_empty()).then_some(GroundSet { elements })
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<Letter>) -> Self {
        debug_assert!(GroundSet::new(elements.clone()).is_ok());
        GroundSet { elements }
    }
}

/// An arrangement of all the elements of a ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    ground: GroundSet,
    letters: Vec<Letter>,
    // positions[r - 1] is the position of the element of rank r
    positions: Vec<usize>,
}

/// Checks that `letters` is a permutation of `ground`.
pub fn validate_word(ground: GroundSet, letters: Vec<Letter>) -> Result<Word> {
    let m = ground.len();
    let mut positions = vec![0usize; m];
    for (k, &a) in letters.iter().enumerate() {
        let r = ground.rank(a).ok_or(Error::UnknownLetter(a))?;
        if positions[r - 1] != 0 {
            return Err(Error::DuplicateLetter(a));
        }
        positions[r - 1] = k + 1;
    }
    if let Some(r) = positions.iter().position(|&p| p == 0) {
        return Err(Error::MissingLetter(ground.elements[r]));
    }
    Ok(Word {
        ground,
        letters,
        positions,
    })
}

impl Word {
    pub fn new(ground: GroundSet, letters: Vec<Letter>) -> Result<Self> {
        validate_word(ground, letters)
    }

    /// A word over the set of its own letters.
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLetter(w[0]));
        }
        validate_word(GroundSet::new(sorted)?, letters)
    }

    /// The increasing word `a_1 a_2 ... a_m`.
    pub fn ascending(ground: GroundSet) -> Self {
        let letters = ground.elements.clone();
        let positions = (1..=letters.len()).collect();
        Word {
            ground,
            letters,
            positions,
        }
    }

    /// The decreasing word `a_m ... a_2 a_1`.
    pub fn descending(ground: GroundSet) -> Self {
        let letters: Vec<Letter> = ground.elements.iter().rev().copied().collect();
        let m = letters.len();
        let positions = (1..=m).rev().collect();
        Word {
            ground,
            letters,
            positions,
        }
    }

    pub(crate) fn from_parts_unchecked(ground: GroundSet, letters: Vec<Letter>) -> Self {
        let mut positions = vec![0; ground.len()];
        for (k, &a) in letters.iter().enumerate() {
            positions[ground.rank(a).expect("letter outside ground set") - 1] = k + 1;
        }
        Word {
            ground,
            letters,
            positions,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `w_i` (1-based).
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    /// `w^{-1}(a)` (1-based), if `a` is a letter of the word.
    pub fn position(&self, a: Letter) -> Option<usize> {
        self.ground.rank(a).map(|r| self.positions[r - 1])
    }

    /// Positions of the letters, indexed by rank of the letter.
    pub fn positions_by_rank(&self) -> &[usize] {
        &self.positions
    }

    /// The subword `w_i ... w_j` as a word over its own letters.
    pub fn subword(&self, i: usize, j: usize) -> Word {
        assert!(
            1 <= i && i <= j && j <= self.len(),
            "subword [{i}, {j}] out of range"
        );
        let letters = self.letters[i - 1..j].to_vec();
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        Word::from_parts_unchecked(GroundSet::from_sorted_unchecked(sorted), letters)
    }
}

/// A closed interval `[open, close]` of positions, `open < close`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub open: usize,
    pub close: usize,
}

impl Interval {
    pub const fn new(open: usize, close: usize) -> Self {
        Interval { open, close }
    }

    pub fn contains(&self, position: usize) -> bool {
        self.open <= position && position <= self.close
    }

    /// Containment of intervals, `self ⊆ other`.
    pub fn is_within(&self, other: &Interval) -> bool {
        other.open <= self.open && self.close <= other.close
    }

    pub(crate) fn shifted(self, offset: usize) -> Interval {
        Interval {
            open: self.open + offset,
            close: self.close + offset,
        }
    }
}

impl From<(usize, usize)> for Interval {
    fn from((open, close): (usize, usize)) -> Self {
        Interval { open, close }
    }
}

/// Intervals with strictly increasing openers and strictly increasing closers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    /// Validates the ordering invariants against a word of length `len`.
    pub fn new(intervals: Vec<Interval>, len: usize) -> Result<Self> {
        check_intervals(&intervals, len, |_| Ok(()))?;
        Ok(IntervalSet { intervals })
    }

    pub fn empty() -> Self {
        IntervalSet {
            intervals: Vec::new(),
        }
    }

    pub(crate) fn from_unchecked(intervals: Vec<Interval>) -> Self {
        IntervalSet { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn as_slice(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    /// The first interval (least index) containing `position`.
    pub fn least_covering(&self, position: usize) -> Option<&Interval> {
        // openers increase, so once an opener passes `position` nothing later covers it
        self.intervals
            .iter()
            .take_while(|iv| iv.open <= position)
            .find(|iv| iv.close >= position)
    }

    /// True when some interval contains both positions.
    pub fn covers_both(&self, p: usize, q: usize) -> bool {
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        self.intervals
            .iter()
            .any(|iv| iv.open <= lo && hi <= iv.close)
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = core::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}

fn check_intervals(
    intervals: &[Interval],
    len: usize,
    mut extra: impl FnMut(&Interval) -> Result<()>,
) -> Result<()> {
    let mut prev: Option<&Interval> = None;
    for (index, iv) in intervals.iter().enumerate() {
        if iv.open < 1 || iv.open >= iv.close || iv.close > len {
            return Err(Error::OutOfRange {
                open: iv.open,
                close: iv.close,
                len,
            });
        }
        if let Some(p) = prev {
            if iv.open <= p.open {
                return Err(Error::OpenerOrder { index: index + 1 });
            }
            if iv.close <= p.close {
                return Err(Error::CloserOrder { index: index + 1 });
            }
        }
        extra(iv)?;
        prev = Some(iv);
    }
    Ok(())
}

/// A word together with a compatible interval family; encodes a region.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValidPair {
    word: Word,
    arcs: IntervalSet,
}

/// Checks the interval invariants and the descent condition `w_o > w_c`.
pub fn validate_pair(word: Word, intervals: Vec<Interval>) -> Result<ValidPair> {
    check_intervals(&intervals, word.len(), |iv| {
        if word.letter(iv.open) > word.letter(iv.close) {
            Ok(())
        } else {
            Err(Error::DescentViolated {
                open: iv.open,
                close: iv.close,
            })
        }
    })?;
    Ok(ValidPair {
        word,
        arcs: IntervalSet { intervals },
    })
}

impl ValidPair {
    pub fn new(word: Word, intervals: Vec<Interval>) -> Result<Self> {
        validate_pair(word, intervals)
    }

    pub(crate) fn from_parts_unchecked(word: Word, arcs: IntervalSet) -> Self {
        debug_assert!(validate_pair(word.clone(), arcs.intervals.clone()).is_ok());
        ValidPair { word, arcs }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn arcs(&self) -> &IntervalSet {
        &self.arcs
    }

    pub fn into_parts(self) -> (Word, IntervalSet) {
        (self.word, self.arcs)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The pair of the base region: `m ... 2 1` with the single arc `[1, m]`.
    /// For a singleton ground set there is no arc.
    pub fn base_region(ground: GroundSet) -> Self {
        let m = ground.len();
        let word = Word::descending(ground);
        let arcs = if m > 1 {
            vec![Interval::new(1, m)]
        } else {
            Vec::new()
        };
        ValidPair {
            word,
            arcs: IntervalSet { intervals: arcs },
        }
    }
}

/// A function `A -> [m]` satisfying the parking condition.
///
/// Values are stored parallel to the increasing list of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFn {
    ground: GroundSet,
    values: Vec<u32>,
}

/// The output of the labeling.
pub type Label = ParkingFn;

/// Parking condition `|f^{-1}([j])| >= j` for all `j`, on raw values parallel
/// to `ground`.
pub fn is_parking(ground: &GroundSet, values: &[u32]) -> Result<bool> {
    Ok(first_parking_violation(ground, values)?.is_none())
}

fn first_parking_violation(ground: &GroundSet, values: &[u32]) -> Result<Option<usize>> {
    let m = ground.len();
    if values.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: values.len(),
        });
    }
    let mut counts = vec![0usize; m + 1];
    for (&a, &v) in ground.elements().iter().zip(values) {
        if v == 0 || v as usize > m {
            return Err(Error::ValueOutOfRange {
                element: a,
                value: v,
                max: m,
            });
        }
        counts[v as usize] += 1;
    }
    let mut total = 0;
    for (j, &c) in counts.iter().enumerate().skip(1) {
        total += c;
        if total < j {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// `f(a_j) <= j` for every `j`.
pub fn is_central(f: &ParkingFn) -> bool {
    f.values
        .iter()
        .enumerate()
        .all(|(k, &v)| v as usize <= k + 1)
}

impl ParkingFn {
    pub fn new(ground: GroundSet, values: Vec<u32>) -> Result<Self> {
        match first_parking_violation(&ground, &values)? {
            Some(j) => Err(Error::NotParking(j)),
            None => Ok(ParkingFn { ground, values }),
        }
    }

    /// A parking function on `{1, ..., m}` given in one-line notation.
    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        ParkingFn::new(GroundSet::upto(values.len())?, values)
    }

    pub(crate) fn from_parts_unchecked(ground: GroundSet, values: Vec<u32>) -> Self {
        debug_assert_eq!(ground.len(), values.len());
        ParkingFn { ground, values }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values in the order of the increasing ground set.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `f(a)`, if `a` is in the domain.
    pub fn value(&self, a: Letter) -> Option<u32> {
        self.ground.rank(a).map(|r| self.values[r - 1])
    }

    /// `(a, f(a))` in increasing order of `a`.
    pub fn iter(&self) -> impl Iterator<Item = (Letter, u32)> + '_ {
        self.ground
            .elements()
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    /// `f^{-1}(v)` in increasing order.
    pub fn preimage(&self, v: u32) -> impl Iterator<Item = Letter> + '_ {
        self.iter().filter(move |&(_, fv)| fv == v).map(|(a, _)| a)
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, a) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_compact(&self.letters))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.open, self.close)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// `word` alone when there are no arcs, `word arcs` otherwise.
impl fmt::Display for ValidPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            write!(f, "{}", self.word)
        } else {
            write!(f, "{} {}", self.word, self.arcs)
        }
    }
}

impl fmt::Display for ParkingFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_compact(&self.values))
    }
}
