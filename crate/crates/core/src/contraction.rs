//! Contraction of words, its inverse (s-parking), maximal inversions and the
//! center of a parking function.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{GroundSet, Interval, IntervalSet, Letter, ParkingFn, Word};

/// The contraction `w̄(a) = w⁻¹(a) − |{b > a : w⁻¹(b) < w⁻¹(a)}|`.
///
/// The result is always central: `w̄(a)` counts the letters `≤ a` among the
/// first `w⁻¹(a)` letters of `w`.
pub fn contract(w: &Word) -> ParkingFn {
    let positions = w.positions_by_rank();
    let values = positions
        .iter()
        .enumerate()
        .map(|(r, &p)| {
            let larger_before = positions[r + 1..].iter().filter(|&&q| q < p).count();
            (p - larger_before) as u32
        })
        .collect();
    ParkingFn::from_parts_unchecked(w.ground().clone(), values)
}

/// S-parking: place `a_1, a_2, ...` in turn at slot `f(a_i)`, shifting every
/// element already at a slot `≥ f(a_i)` one step right.
///
/// Fails with [`Error::NotCentral`] when some `f(a_i) > i`, which is exactly
/// when `f` is not central.
pub fn s_park(f: &ParkingFn) -> Result<Word> {
    park(f, |_| {})
}

/// S-parking, also returning the shelf after every insertion.
pub fn s_park_trace(f: &ParkingFn) -> Result<(Word, Vec<Vec<Letter>>)> {
    let mut rows = Vec::with_capacity(f.len());
    let w = park(f, |shelf| rows.push(shelf.to_vec()))?;
    Ok((w, rows))
}

fn park(f: &ParkingFn, mut step: impl FnMut(&[Letter])) -> Result<Word> {
    let mut shelf: Vec<Letter> = Vec::with_capacity(f.len());
    for (i, (a, v)) in f.iter().enumerate() {
        let rank = i + 1;
        if v as usize > rank {
            return Err(Error::NotCentral {
                element: a,
                value: v,
                rank,
            });
        }
        shelf.insert(v as usize - 1, a);
        step(&shelf);
    }
    Ok(Word::from_parts_unchecked(f.ground().clone(), shelf))
}

/// Maximal elements, under containment of intervals, of the inversions
/// `{(i, j) : i < j, w_i > w_j}`, sorted by opener.
pub fn maxinv(w: &Word) -> IntervalSet {
    let letters = w.letters();
    let mut arcs = Vec::new();
    let mut reach = 0;
    for (i, &x) in letters.iter().enumerate() {
        // the widest inversion opening at i closes at the last smaller letter
        let Some(j) = letters.iter().rposition(|&y| y < x) else {
            continue;
        };
        if j > i && j > reach {
            arcs.push(Interval::new(i + 1, j + 1));
            reach = j;
        }
    }
    IntervalSet::from_unchecked(arcs)
}

/// The center `Z(f)` of a parking function and the restriction `f_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDecomposition {
    pub center: GroundSet,
    /// `f` restricted to the center, values unchanged; it is central.
    pub restriction: ParkingFn,
}

impl CenterDecomposition {
    /// `ζ = |Z(f)|`.
    pub fn zeta(&self) -> usize {
        self.center.len()
    }
}

/// The largest subset `Z` of the domain on which `f` restricts to a
/// `Z`-central function.
///
/// Elements are scanned in increasing order; `a` joins when `f(a)` does not
/// exceed what its rank inside the selected set would be. Later elements are
/// larger and never change the rank of earlier ones.
pub fn center(f: &ParkingFn) -> CenterDecomposition {
    let mut elements = Vec::new();
    let mut values = Vec::new();
    for (a, v) in f.iter() {
        if v as usize <= elements.len() + 1 {
            elements.push(a);
            values.push(v);
        }
    }
    // f^{-1}(1) is nonempty and always joins
    let center = GroundSet::from_sorted_unchecked(elements);
    let restriction = ParkingFn::from_parts_unchecked(center.clone(), values);
    CenterDecomposition {
        center,
        restriction,
    }
}
