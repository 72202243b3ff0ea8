//! Tab-separated traces of s-parking and of the peeling procedure.

use std::fmt::Write;

use shipark_core::{s_park_trace, ParkingFn, PeelTraceRow, Result};

use crate::io::fn_text;

/// One row per insertion: the element, the slot it goes to, and the word so
/// far.
pub fn spark_table(f: &ParkingFn) -> Result<String> {
    let (_, rows) = s_park_trace(f)?;
    let mut out = String::from("a\tf(a)\tword\n");
    for ((a, v), row) in f.iter().zip(&rows) {
        let _ = writeln!(out, "{a}\t{v}\t{}", shipark_core::format_compact(row));
    }
    Ok(out)
}

/// The peeling table: `f`, then `a`, `b`, `c` (`-` on the last level),
/// `f_Z` and its s-parking.
pub fn peel_table(rows: &[PeelTraceRow]) -> String {
    let mut out = String::from("f\ta\tb\tc\tf_Z\tprefix\n");
    let dash = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            fn_text(&r.function),
            dash(r.a.map(|x| x.to_string())),
            dash(r.b.map(|x| x.to_string())),
            dash(r.c.map(|x| x.to_string())),
            fn_text(&r.restriction),
            r.prefix,
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_fn;

    #[test]
    fn worked_example_table() {
        let (_, rows) = shipark_core::peel_trace(&parse_fn("341183414").unwrap());
        assert_eq!(
            peel_table(&rows),
            "f\ta\tb\tc\tf_Z\tprefix\n\
             341183414\t1\t3\t3\t113414 346789\t843967\n\
             1216232 1235679\t5\t6\t4\t121232 123679\t396712\n\
             1231 1257\t-\t-\t-\t1231 1257\t7125\n"
        );
    }

    #[test]
    fn spark_rows() {
        let t = spark_table(&parse_fn("113414 346789").unwrap()).unwrap();
        assert_eq!(t.lines().last(), Some("9\t4\t843967"));
        assert_eq!(t.lines().count(), 7);
    }
}
