//! The Pak-Stanley labeling of valid pairs by parking functions.
//!
//! Two independent evaluations are provided: [`label_direct`] counts the
//! hyperplanes separating the region from the base region, while
//! [`label_intervals`] reads the value off the contraction of the least
//! interval covering each position. [`label`] is the production path and
//! uses the latter.

use alloc::vec::Vec;

use crate::contraction::contract;
use crate::model::{Label, ParkingFn, ValidPair};

/// `o_P(w_j)` for every position `j`, stored 1-based by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenerTable {
    openers: Vec<usize>,
}

impl OpenerTable {
    /// `o_P(w_j)`.
    pub fn at(&self, position: usize) -> usize {
        self.openers[position - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.openers
    }
}

/// The opener of the least interval covering each position, or the position
/// itself when it lies in no interval.
pub fn opener_table(p: &ValidPair) -> OpenerTable {
    let openers = (1..=p.len())
        .map(|j| p.arcs().least_covering(j).map_or(j, |iv| iv.open))
        .collect();
    OpenerTable { openers }
}

/// `f_i = 1 + |{k < j : w_k < i}| + |{k < j : w_k > i, no interval holds both j and k}|`
/// for `i = w_j`.
pub fn label_direct(p: &ValidPair) -> Label {
    let w = p.word();
    let letters = w.letters();
    let mut values = alloc::vec![0u32; w.len()];
    for (jj, &i) in letters.iter().enumerate() {
        let j = jj + 1;
        let mut f = 1;
        for (kk, &wk) in letters[..jj].iter().enumerate() {
            if wk < i || !p.arcs().covers_both(kk + 1, j) {
                f += 1;
            }
        }
        values[w.ground().rank(i).unwrap() - 1] = f;
    }
    ParkingFn::from_parts_unchecked(w.ground().clone(), values)
}

/// `f_{w_j} = j` outside every interval, otherwise
/// `f_{w_j} = o_k − 1 + contract(w_{o_k..c_k})(w_j)` for the least interval
/// `[o_k, c_k]` covering `j`.
pub fn label_intervals(p: &ValidPair) -> Label {
    let w = p.word();
    let mut values = alloc::vec![0u32; w.len()];
    let segments: Vec<ParkingFn> = p
        .arcs()
        .iter()
        .map(|iv| contract(&w.subword(iv.open, iv.close)))
        .collect();
    let mut current = 0;
    for (jj, &i) in w.letters().iter().enumerate() {
        let j = jj + 1;
        let arcs = p.arcs().as_slice();
        // least covering interval: openers and closers increase together
        while current < arcs.len() && arcs[current].close < j {
            current += 1;
        }
        let f = match arcs.get(current) {
            Some(iv) if iv.open <= j => {
                iv.open as u32 - 1 + segments[current].value(i).expect("letter in segment")
            }
            _ => j as u32,
        };
        values[w.ground().rank(i).unwrap() - 1] = f;
    }
    ParkingFn::from_parts_unchecked(w.ground().clone(), values)
}

/// λ(P), evaluated through [`label_intervals`].
pub fn label(p: &ValidPair) -> Label {
    label_intervals(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_parking, GroundSet, Interval, Word};
    use alloc::vec;

    fn pair(letters: &[u32], arcs: &[(usize, usize)]) -> ValidPair {
        let w = Word::from_letters(letters.to_vec()).unwrap();
        ValidPair::new(w, arcs.iter().map(|&a| Interval::from(a)).collect()).unwrap()
    }

    fn example() -> ValidPair {
        pair(&[8, 4, 3, 9, 6, 7, 1, 2, 5], &[(1, 6), (3, 8), (6, 9)])
    }

    #[test]
    fn worked_example_both_routes() {
        let p = example();
        assert_eq!(label_direct(&p).values(), &[3, 4, 1, 1, 8, 3, 4, 1, 4]);
        assert_eq!(label_intervals(&p).values(), &[3, 4, 1, 1, 8, 3, 4, 1, 4]);
    }

    #[test]
    fn segment_contractions_of_the_example() {
        let w = example().word().clone();
        assert_eq!(contract(&w.subword(1, 6)).values(), &[1, 1, 3, 4, 1, 4]);
        assert_eq!(contract(&w.subword(3, 8)).values(), &[1, 2, 1, 2, 3, 2]);
        assert_eq!(contract(&w.subword(6, 9)).values(), &[1, 2, 3, 1]);
    }

    #[test]
    fn base_region_is_all_ones() {
        for n in 1..=6 {
            let p = ValidPair::base_region(GroundSet::upto(n).unwrap());
            assert_eq!(label_direct(&p).values(), vec![1; n].as_slice());
            assert_eq!(label_intervals(&p).values(), vec![1; n].as_slice());
        }
    }

    #[test]
    fn figure_region_211() {
        let p = pair(&[3, 2, 1], &[(1, 2), (2, 3)]);
        assert_eq!(label_direct(&p).values(), &[2, 1, 1]);
        assert_eq!(label_intervals(&p).values(), &[2, 1, 1]);
    }

    #[test]
    fn restricted_ground_example() {
        let p = pair(&[3, 9, 6, 7, 1, 2, 5], &[(1, 6), (4, 7)]);
        let f = label_intervals(&p);
        assert_eq!(f.ground().elements(), &[1, 2, 3, 5, 6, 7, 9]);
        assert_eq!(f.values(), &[1, 2, 1, 6, 2, 3, 2]);
        assert_eq!(label_direct(&p), f);
        assert!(is_parking(f.ground(), f.values()).unwrap());
    }

    #[test]
    fn no_arcs_gives_positions() {
        let p = pair(&[4, 1, 3, 2], &[]);
        let f = label(&p);
        for (j, &a) in p.word().letters().iter().enumerate() {
            assert_eq!(f.value(a), Some(j as u32 + 1));
        }
    }

    #[test]
    fn opener_tables() {
        assert_eq!(
            opener_table(&example()).as_slice(),
            &[1, 1, 1, 1, 1, 1, 3, 3, 6]
        );
        assert_eq!(opener_table(&pair(&[3, 1, 2], &[])).as_slice(), &[1, 2, 3]);
        assert_eq!(
            opener_table(&pair(&[3, 2, 1], &[(1, 2), (2, 3)])).as_slice(),
            &[1, 1, 2]
        );
    }
}
