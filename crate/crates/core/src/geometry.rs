//! Points of `R^n` off the Shi arrangement and their valid pairs.
//!
//! A valid pair on `[n]` describes its region as a system of difference
//! constraints on `d_j = x_{w_j}`. Strict inequalities are tightened by a
//! slack `ε = 1/(2n)` and the system is solved by shortest paths from a
//! virtual source, in exact rational arithmetic.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{GroundSet, Interval, Label, ParkingFn, ValidPair, Word};

pub type Rational = Ratio<i64>;

/// A point with exact rational coordinates `x_1, ..., x_n` lying on no
/// hyperplane `x_i = x_j` or `x_i − x_j = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyGround);
        }
        let one = Rational::one();
        for i in 0..coords.len() {
            for j in i + 1..coords.len() {
                let diff = coords[i] - coords[j];
                if diff.is_zero() {
                    return Err(Error::OnHyperplane {
                        i: i + 1,
                        j: j + 1,
                        offset: 0,
                    });
                }
                if diff == one {
                    return Err(Error::OnHyperplane {
                        i: i + 1,
                        j: j + 1,
                        offset: 1,
                    });
                }
            }
        }
        Ok(RationalPoint { coords })
    }

    pub fn from_integers(values: &[(i64, i64)]) -> Result<Self> {
        RationalPoint::new(values.iter().map(|&(p, q)| Rational::new(p, q)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `x_i` (1-based).
    pub fn coord(&self, i: usize) -> Rational {
        self.coords[i - 1]
    }
}

/// `p/q` in lowest terms, denominator always written.
pub fn format_rational(r: &Rational) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}/{}", r.numer(), r.denom());
    s
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || Error::Parse {
        what: "rational",
        input: String::from(t),
    };
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<i64>().map_err(|_| err())?,
            q.trim().parse::<i64>().map_err(|_| err())?,
        ),
        None => (t.parse::<i64>().map_err(|_| err())?, 1),
    };
    if q == 0 {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    /// `d_{j+1} − d_j ≥ ε`.
    Order,
    /// `d_k − d_j ≤ 1 − ε` for an inversion pair covered by an arc.
    Close,
    /// `d_k − d_j ≥ 1 + ε` for an inversion pair covered by no arc.
    Far,
}

/// `d_upper − d_lower ≤ bound`, positions 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferenceConstraint {
    pub kind: ConstraintKind,
    pub upper: usize,
    pub lower: usize,
    pub bound: Rational,
}

/// The region of a valid pair as difference constraints on `d_j = x_{w_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub vars: usize,
    pub epsilon: Rational,
    pub constraints: Vec<DifferenceConstraint>,
}

impl ConstraintSystem {
    pub fn for_pair(p: &ValidPair, epsilon: Rational) -> Self {
        let w = p.word();
        let m = w.len();
        let one = Rational::one();
        let mut constraints = Vec::new();
        for j in 1..m {
            constraints.push(DifferenceConstraint {
                kind: ConstraintKind::Order,
                upper: j,
                lower: j + 1,
                bound: -epsilon,
            });
        }
        for j in 1..=m {
            for k in j + 1..=m {
                if w.letter(j) < w.letter(k) {
                    continue;
                }
                constraints.push(if p.arcs().covers_both(j, k) {
                    DifferenceConstraint {
                        kind: ConstraintKind::Close,
                        upper: k,
                        lower: j,
                        bound: one - epsilon,
                    }
                } else {
                    DifferenceConstraint {
                        kind: ConstraintKind::Far,
                        upper: j,
                        lower: k,
                        bound: -one - epsilon,
                    }
                });
            }
        }
        ConstraintSystem {
            vars: m,
            epsilon,
            constraints,
        }
    }

    /// Bellman–Ford from a virtual source joined to every variable by a
    /// zero-weight edge; edge `lower → upper` has weight `bound`. The
    /// solution is translated so its least value is 0.
    pub fn solve(&self) -> Result<Vec<Rational>> {
        let mut dist = vec![Rational::zero(); self.vars];
        // the source contributes the all-zero start, leaving |V| − 1 = vars rounds
        for _ in 0..self.vars {
            let mut changed = false;
            for c in &self.constraints {
                let candidate = dist[c.lower - 1] + c.bound;
                if candidate < dist[c.upper - 1] {
                    dist[c.upper - 1] = candidate;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if self
            .constraints
            .iter()
            .any(|c| dist[c.lower - 1] + c.bound < dist[c.upper - 1])
        {
            return Err(Error::Infeasible);
        }
        let min = dist.iter().copied().min().unwrap_or_else(Rational::zero);
        Ok(dist.into_iter().map(|d| d - min).collect())
    }

    pub fn is_satisfied_by(&self, d: &[Rational]) -> bool {
        self.constraints
            .iter()
            .all(|c| d[c.upper - 1] - d[c.lower - 1] <= c.bound)
    }
}

/// The default slack `1/(2m)`.
pub fn default_epsilon(m: usize) -> Rational {
    Rational::new(1, 2 * m as i64)
}

/// The valid pair of the region containing `x`.
pub fn pair_of_point(x: &RationalPoint) -> Result<ValidPair> {
    let x = RationalPoint::new(x.coords.clone())?;
    let n = x.dim();
    let mut letters: Vec<u32> = (1..=n as u32).collect();
    letters.sort_by_key(|&a| x.coord(a as usize));
    let ground = GroundSet::upto(n)?;
    let word = Word::new(ground, letters)?;
    let d: Vec<Rational> = word
        .letters()
        .iter()
        .map(|&a| x.coord(a as usize))
        .collect();
    let one = Rational::one();
    let inversion = |j: usize, k: usize| word.letter(j) > word.letter(k);
    let close = |j: usize, k: usize| d[k - 1] - d[j - 1] < one;

    let mut arcs = Vec::new();
    let mut reach = 0;
    for o in 1..=n {
        // every inversion pair nested in a close one is close, so the widest
        // good interval from o closes at the last close inversion
        let Some(c) = (o + 1..=n).rev().find(|&c| inversion(o, c) && close(o, c)) else {
            continue;
        };
        for j in o..=c {
            for k in j + 1..=c {
                if inversion(j, k) && !close(j, k) {
                    return Err(Error::InternalMismatch(
                        "close inversion contains a far one",
                    ));
                }
            }
        }
        if c > reach {
            arcs.push(Interval::new(o, c));
            reach = c;
        }
    }
    ValidPair::new(word, arcs)
}

/// A point of the region of `p`, which must be over the full ground set
/// `[ambient_n]`.
pub fn representative_point(p: &ValidPair, ambient_n: usize) -> Result<RationalPoint> {
    if p.len() != ambient_n || !p.word().ground().is_initial() {
        return Err(Error::NotFullGround(ambient_n));
    }
    let system = ConstraintSystem::for_pair(p, default_epsilon(ambient_n));
    let d = system.solve()?;
    let mut coords = vec![Rational::zero(); ambient_n];
    for (j, &a) in p.word().letters().iter().enumerate() {
        coords[a as usize - 1] = d[j];
    }
    RationalPoint::new(coords)
}

/// The label read off a representative point:
/// `f_i = 1 + |{a < i : x_a < x_i}| + |{b > i : x_i − x_b > 1}|`.
pub fn label_geometric(p: &ValidPair, ambient_n: usize) -> Result<Label> {
    let x = representative_point(p, ambient_n)?;
    let one = Rational::one();
    let values = (1..=ambient_n)
        .map(|i| {
            let xi = x.coord(i);
            let below = (1..i).filter(|&a| x.coord(a) < xi).count();
            let far = (i + 1..=ambient_n)
                .filter(|&b| xi - x.coord(b) > one)
                .count();
            (1 + below + far) as u32
        })
        .collect();
    Ok(ParkingFn::from_parts_unchecked(
        p.word().ground().clone(),
        values,
    ))
}
