//! Pak-Stanley labeling of the regions of the Shi arrangement by parking
//! functions, together with its explicit inverse.
//!
//! A region of the Shi arrangement of order `n` (the hyperplanes
//! `x_i - x_j = 0` and `x_i - x_j = 1`, `i < j`) is encoded by a
//! [`ValidPair`]: the word listing the coordinates in increasing order plus a
//! family of position intervals. [`labeling`] turns a valid pair into a
//! [`ParkingFn`]; [`inverse`] recovers the pair from the function by peeling
//! centers and s-parking them. [`enumeration`] checks the correspondence
//! exhaustively and [`geometry`] relates valid pairs to actual points of
//! `R^n`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod contraction;
pub mod enumeration;
mod error;
pub mod geometry;
pub mod inverse;
pub mod labeling;
pub mod model;
mod text;

#[cfg(feature = "serde")]
mod serde_impl;

pub use contraction::{center, contract, maxinv, s_park, s_park_trace, CenterDecomposition};
pub use error::{Error, Result};
pub use inverse::{invert, invert_by_peeling, peel, peel_trace, PeelStep, PeelTraceRow};
pub use labeling::{label, label_direct, label_intervals, opener_table, OpenerTable};
pub use model::{
    is_central, is_parking, validate_pair, validate_word, GroundSet, Interval, IntervalSet, Label,
    Letter, ParkingFn, ValidPair, Word,
};
pub use text::{format_compact, parse_compact_fn, parse_compact_intervals, parse_compact_word};
