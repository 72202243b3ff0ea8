//! Exhaustive generation of words, valid pairs and parking functions, and the
//! bijectivity audit of the labeling.
//!
//! All generators are deterministic and lexicographic. The audit is split in
//! a per-word part ([`audit_word`]) and a final part ([`finish_audit`]) so a
//! caller can spread the words over several threads; the shared state is a
//! [`LabelBitset`] that supports concurrent inserts.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};
use core::time::Duration;

use crate::error::Error;
use crate::inverse::{invert, invert_by_peeling, peel};
use crate::labeling::label;
use crate::model::{
    is_parking, GroundSet, Interval, IntervalSet, Label, ParkingFn, ValidPair, Word,
};

/// All words over `ground`, lexicographic by letter sequence.
pub fn words(ground: GroundSet) -> Words {
    Words {
        letters: Some(ground.elements().to_vec()),
        ground,
    }
}

pub struct Words {
    ground: GroundSet,
    letters: Option<Vec<u32>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let letters = self.letters.as_mut()?;
        let out = Word::from_parts_unchecked(self.ground.clone(), letters.clone());
        if !next_permutation(letters) {
            self.letters = None;
        }
        Some(out)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every interval set forming a valid pair with `w`, the empty one first.
///
/// Backtracking over the descents `[o, c]` (`w_o > w_c`) sorted by opener
/// then closer; a set is only extended by an arc with strictly larger opener
/// and closer.
pub fn interval_sets(w: &Word) -> IntervalSets {
    let m = w.len();
    let mut candidates = Vec::new();
    for o in 1..=m {
        for c in o + 1..=m {
            if w.letter(o) > w.letter(c) {
                candidates.push(Interval::new(o, c));
            }
        }
    }
    IntervalSets {
        candidates,
        stack: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct IntervalSets {
    candidates: Vec<Interval>,
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl IntervalSets {
    fn fits(&self, k: usize, after: Option<usize>) -> bool {
        match after {
            None => true,
            Some(last) => {
                let (a, b) = (self.candidates[last], self.candidates[k]);
                b.open > a.open && b.close > a.close
            }
        }
    }

    fn first_fit(&self, from: usize, after: Option<usize>) -> Option<usize> {
        (from..self.candidates.len()).find(|&k| self.fits(k, after))
    }

    fn current(&self) -> IntervalSet {
        IntervalSet::from_unchecked(self.stack.iter().map(|&k| self.candidates[k]).collect())
    }
}

impl Iterator for IntervalSets {
    type Item = IntervalSet;

    fn next(&mut self) -> Option<IntervalSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(IntervalSet::empty());
        }
        let last = self.stack.last().copied();
        if let Some(k) = self.first_fit(last.map_or(0, |k| k + 1), last) {
            self.stack.push(k);
            return Some(self.current());
        }
        while let Some(k) = self.stack.pop() {
            let last = self.stack.last().copied();
            if let Some(next) = self.first_fit(k + 1, last) {
                self.stack.push(next);
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// All valid pairs over `ground`: words in lexicographic order, then their
/// interval sets.
pub fn valid_pairs(ground: GroundSet) -> impl Iterator<Item = ValidPair> {
    words(ground).flat_map(|w| {
        interval_sets(&w).map(move |arcs| ValidPair::from_parts_unchecked(w.clone(), arcs))
    })
}

/// All `A`-parking functions, lexicographic by value sequence.
pub fn parking_functions(ground: GroundSet) -> ParkingFns {
    ParkingFns {
        values: None,
        ground,
        done: false,
    }
}

pub struct ParkingFns {
    ground: GroundSet,
    values: Option<Vec<u32>>,
    done: bool,
}

// The prefix extends to a parking function iff filling the rest with ones does.
fn completable(prefix: &[u32], m: usize) -> bool {
    let mut counts = vec![0usize; m + 1];
    for &v in prefix {
        counts[v as usize] += 1;
    }
    let mut total = m - prefix.len();
    (1..=m).all(|j| {
        total += counts[j];
        total >= j
    })
}

impl Iterator for ParkingFns {
    type Item = ParkingFn;

    fn next(&mut self) -> Option<ParkingFn> {
        if self.done {
            return None;
        }
        let m = self.ground.len();
        let values = match self.values.as_mut() {
            None => self.values.insert(vec![1; m]),
            Some(values) => {
                let mut advanced = false;
                'outer: for i in (0..m).rev() {
                    for v in values[i] + 1..=m as u32 {
                        values[i] = v;
                        if completable(&values[..=i], m) {
                            values[i + 1..].iter_mut().for_each(|x| *x = 1);
                            advanced = true;
                            break 'outer;
                        }
                    }
                }
                if !advanced {
                    self.done = true;
                    return None;
                }
                values
            }
        };
        Some(ParkingFn::from_parts_unchecked(
            self.ground.clone(),
            values.clone(),
        ))
    }
}

/// All central functions on `ground`: `f(a_j) ∈ [1, j]`, lexicographic.
pub fn central_functions(ground: GroundSet) -> impl Iterator<Item = ParkingFn> {
    let m = ground.len();
    let mut values = Some(vec![1u32; m]);
    core::iter::from_fn(move || {
        let current = values.as_mut()?;
        let out = ParkingFn::from_parts_unchecked(ground.clone(), current.clone());
        match (0..m).rev().find(|&i| (current[i] as usize) < i + 1) {
            Some(i) => {
                current[i] += 1;
                current[i + 1..].iter_mut().for_each(|x| *x = 1);
            }
            None => values = None,
        }
        Some(out)
    })
}

/// `(n + 1)^(n − 1)`, the number of regions of the Shi arrangement of order `n`.
pub fn region_count(n: u32) -> u64 {
    (n as u64 + 1).pow(n.saturating_sub(1))
}

/// Mixed-radix code of a function `A -> [m]`: value of `a_i` is digit `i`,
/// base `m`, most significant first. Values must lie in `[1, m]`.
pub fn encode(f: &ParkingFn) -> u64 {
    let m = f.len() as u64;
    f.values()
        .iter()
        .fold(0, |acc, &v| acc * m + (v as u64 - 1))
}

/// A fixed-size bitset over label codes with concurrent inserts.
pub struct LabelBitset {
    words: Vec<AtomicU64>,
}

impl LabelBitset {
    /// Room for every function `[m] -> [m]`.
    pub fn for_size(m: usize) -> Self {
        let bits = (m as u64).pow(m as u32).max(1);
        LabelBitset {
            words: (0..bits.div_ceil(64)).map(|_| AtomicU64::new(0)).collect(),
        }
    }

    /// Sets the bit; true when it was not set before.
    pub fn insert(&self, code: u64) -> bool {
        let mask = 1u64 << (code % 64);
        self.words[(code / 64) as usize].fetch_or(mask, Ordering::Relaxed) & mask == 0
    }

    pub fn contains(&self, code: u64) -> bool {
        self.words[(code / 64) as usize].load(Ordering::Relaxed) & (1u64 << (code % 64)) != 0
    }

    pub fn count(&self) -> u64 {
        self.words
            .iter()
            .map(|w| w.load(Ordering::Relaxed).count_ones() as u64)
            .sum()
    }
}

/// Two valid pairs sharing a label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Collision {
    pub label: Label,
    pub pair: ValidPair,
    /// The pair the inverse assigns to the label, when it succeeds.
    pub other: Option<ValidPair>,
}

/// A valid pair whose label does not invert back to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripFailure {
    pub pair: ValidPair,
    pub label: Label,
    pub recovered: Option<ValidPair>,
    pub error: Option<Error>,
}

/// The result of auditing some of the words of a ground set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialAudit {
    pub pair_count: u64,
    pub collisions: Vec<(ValidPair, Label)>,
    pub roundtrip_failures: Vec<RoundtripFailure>,
    pub peel: PeelAudit,
}

/// How the peeling procedure fared on the labels seen.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PeelAudit {
    /// Peel steps taken.
    pub steps: u64,
    /// Labels on which some peel step broke one of its checks.
    pub violations: Vec<(Label, Error)>,
    /// Labels that peeling did not invert to their pair.
    pub mismatches: Vec<Label>,
}

impl PeelAudit {
    fn merge(&mut self, other: PeelAudit) {
        self.steps += other.steps;
        self.violations.extend(other.violations);
        self.mismatches.extend(other.mismatches);
    }

    fn check(&mut self, pair: &ValidPair, f: &Label) {
        let mut current = f.clone();
        loop {
            match peel(&current) {
                Ok(step) => {
                    self.steps += 1;
                    current = step.residual;
                }
                Err(Error::AlreadyCentral) => break,
                Err(e) => {
                    self.violations.push((f.clone(), e));
                    return;
                }
            }
        }
        if invert_by_peeling(f).as_ref() != Ok(pair) {
            self.mismatches.push(f.clone());
        }
    }
}

impl PartialAudit {
    pub fn merge(mut self, other: PartialAudit) -> PartialAudit {
        self.pair_count += other.pair_count;
        self.collisions.extend(other.collisions);
        self.roundtrip_failures.extend(other.roundtrip_failures);
        self.peel.merge(other.peel);
        self
    }
}

/// Labels every valid pair on `w`, records each label in `seen` and checks
/// that inverting the label gives the pair back.
pub fn audit_word(w: &Word, seen: &LabelBitset) -> PartialAudit {
    let mut out = PartialAudit::default();
    for arcs in interval_sets(w) {
        let pair = ValidPair::from_parts_unchecked(w.clone(), arcs);
        out.pair_count += 1;
        let f = label(&pair);
        if !is_parking(f.ground(), f.values()).unwrap_or(false) {
            out.roundtrip_failures.push(RoundtripFailure {
                pair,
                label: f,
                recovered: None,
                error: Some(Error::InternalMismatch("label is not a parking function")),
            });
            continue;
        }
        if !seen.insert(encode(&f)) {
            out.collisions.push((pair.clone(), f.clone()));
        }
        out.peel.check(&pair, &f);
        match invert(&f) {
            Ok(q) if q == pair => {}
            Ok(q) => out.roundtrip_failures.push(RoundtripFailure {
                pair,
                label: f,
                recovered: Some(q),
                error: None,
            }),
            Err(e) => out.roundtrip_failures.push(RoundtripFailure {
                pair,
                label: f,
                recovered: None,
                error: Some(e),
            }),
        }
    }
    out
}

/// Outcome of the bijectivity check for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: u32,
    pub pair_count: u64,
    pub parking_count: u64,
    pub expected: u64,
    pub label_collisions: Vec<Collision>,
    pub roundtrip_failures: Vec<RoundtripFailure>,
    /// Parking functions that no valid pair is labeled with.
    pub unlabeled: Vec<ParkingFn>,
    /// Not part of [`success`](Self::success): peeling is not the inverse.
    pub peel: PeelAudit,
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.pair_count == self.expected
            && self.parking_count == self.expected
            && self.label_collisions.is_empty()
            && self.roundtrip_failures.is_empty()
            && self.unlabeled.is_empty()
    }
}

/// Counts the parking functions, checks each was labeled, and sorts the
/// collected failures.
pub fn finish_audit(n: u32, audit: PartialAudit, seen: &LabelBitset) -> VerificationReport {
    let ground = GroundSet::upto(n as usize).expect("n >= 1");
    let mut parking_count = 0;
    let mut unlabeled = Vec::new();
    for f in parking_functions(ground) {
        parking_count += 1;
        if !seen.contains(encode(&f)) {
            unlabeled.push(f);
        }
    }
    let mut label_collisions: Vec<Collision> = audit
        .collisions
        .into_iter()
        .map(|(pair, label)| {
            let other = invert(&label).ok();
            Collision { label, pair, other }
        })
        .collect();
    label_collisions.sort();
    let mut roundtrip_failures = audit.roundtrip_failures;
    roundtrip_failures.sort_by(|a, b| a.pair.cmp(&b.pair));
    let mut peel = audit.peel;
    peel.violations.sort_by(|a, b| a.0.cmp(&b.0));
    peel.mismatches.sort();
    VerificationReport {
        n,
        pair_count: audit.pair_count,
        parking_count,
        expected: region_count(n),
        label_collisions,
        roundtrip_failures,
        unlabeled,
        peel,
        elapsed: None,
    }
}

/// Single-threaded bijectivity check on `[n]`.
pub fn verify_bijection(n: u32) -> VerificationReport {
    assert!(n >= 1, "n must be positive");
    let ground = GroundSet::upto(n as usize).unwrap();
    let seen = LabelBitset::for_size(n as usize);
    let audit = words(ground)
        .map(|w| audit_word(&w, &seen))
        .fold(PartialAudit::default(), PartialAudit::merge);
    finish_audit(n, audit, &seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate_pair;

    fn word(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    // Oracle: every subset of the arcs o < c, filtered through validate_pair.
    fn interval_sets_brute(w: &Word) -> Vec<Vec<Interval>> {
        let m = w.len();
        let all: Vec<Interval> = (1..=m)
            .flat_map(|o| (o + 1..=m).map(move |c| Interval::new(o, c)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << all.len()) {
            let pick: Vec<Interval> = (0..all.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| all[k])
                .collect();
            if validate_pair(w.clone(), pick.clone()).is_ok() {
                out.push(pick);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn words_are_lexicographic_and_complete() {
        let two: Vec<_> = words(GroundSet::upto(2).unwrap())
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(two, [[1, 2], [2, 1]]);
        assert_eq!(words(GroundSet::upto(3).unwrap()).count(), 6);
        let a = GroundSet::new(vec![3, 4, 6, 7, 8, 9]).unwrap();
        let all: Vec<Word> = words(a).collect();
        assert_eq!(all.len(), 720);
        assert!(all.windows(2).all(|p| p[0].letters() < p[1].letters()));
        assert_eq!(words(GroundSet::upto(1).unwrap()).count(), 1);
    }

    #[test]
    fn interval_sets_of_321() {
        let sets: Vec<Vec<Interval>> = interval_sets(&word(&[3, 2, 1]))
            .map(|s| s.as_slice().to_vec())
            .collect();
        let iv = Interval::new;
        assert_eq!(
            sets,
            [
                vec![],
                vec![iv(1, 2)],
                vec![iv(1, 2), iv(2, 3)],
                vec![iv(1, 3)],
                vec![iv(2, 3)]
            ]
        );
        assert_eq!(interval_sets(&word(&[1, 2, 3])).count(), 1);
    }

    #[test]
    fn interval_sets_match_brute_force() {
        for m in 1..=5 {
            let mut total = 0;
            for w in words(GroundSet::upto(m).unwrap()) {
                let mut got: Vec<Vec<Interval>> =
                    interval_sets(&w).map(|s| s.as_slice().to_vec()).collect();
                got.sort();
                let expected = interval_sets_brute(&w);
                assert_eq!(got, expected, "{w}");
                total += got.len() as u64;
            }
            assert_eq!(total, region_count(m as u32));
        }
    }

    #[test]
    fn per_word_counts_for_three() {
        let counts: Vec<usize> = words(GroundSet::upto(3).unwrap())
            .map(|w| interval_sets(&w).count())
            .collect();
        // 123, 132, 213, 231, 312, 321
        assert_eq!(counts, [1, 2, 2, 3, 3, 5]);
    }

    #[test]
    fn parking_function_streams() {
        let two: Vec<Vec<u32>> = parking_functions(GroundSet::upto(2).unwrap())
            .map(|f| f.values().to_vec())
            .collect();
        assert_eq!(two, [[1, 1], [1, 2], [2, 1]]);
        assert_eq!(parking_functions(GroundSet::upto(1).unwrap()).count(), 1);
        for n in 1..=6u32 {
            let ground = GroundSet::upto(n as usize).unwrap();
            let all: Vec<ParkingFn> = parking_functions(ground.clone()).collect();
            assert_eq!(all.len() as u64, region_count(n));
            assert!(all.windows(2).all(|p| p[0].values() < p[1].values()));
            assert!(all.iter().all(|f| is_parking(&ground, f.values()).unwrap()));
        }
    }

    #[test]
    fn parking_functions_match_filtered_product() {
        let ground = GroundSet::new(vec![2, 3, 5, 8, 9]).unwrap();
        let m = ground.len() as u32;
        let mut expected = Vec::new();
        for code in 0..m.pow(m) {
            let mut c = code;
            let mut v = vec![0u32; m as usize];
            for slot in v.iter_mut().rev() {
                *slot = c % m + 1;
                c /= m;
            }
            if is_parking(&ground, &v).unwrap() {
                expected.push(v);
            }
        }
        let got: Vec<Vec<u32>> = parking_functions(ground)
            .map(|f| f.values().to_vec())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn central_function_stream() {
        for m in 1..=6 {
            let all: Vec<ParkingFn> = central_functions(GroundSet::upto(m).unwrap()).collect();
            assert_eq!(all.len(), (1..=m).product::<usize>());
            assert!(all.iter().all(crate::model::is_central));
        }
    }

    #[test]
    fn codes_are_injective_and_in_range() {
        let ground = GroundSet::upto(4).unwrap();
        let seen = LabelBitset::for_size(4);
        for f in parking_functions(ground) {
            let code = encode(&f);
            assert!(code < 4u64.pow(4));
            assert!(seen.insert(code));
        }
        assert_eq!(seen.count(), 125);
    }

    #[test]
    fn small_verifications() {
        for (n, count) in [(1, 1), (2, 3), (3, 16), (4, 125)] {
            let r = verify_bijection(n);
            assert_eq!(r.pair_count, count);
            assert_eq!(r.parking_count, count);
            assert!(r.success(), "{r:?}");
            assert!(r.peel.violations.is_empty() && r.peel.mismatches.is_empty());
        }
    }
}
