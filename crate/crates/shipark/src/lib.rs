//! File formats, traces, drawings and the parallel verifier behind the
//! `shipark` command.

pub mod io;
pub mod render;
pub mod trace;
pub mod verify;
