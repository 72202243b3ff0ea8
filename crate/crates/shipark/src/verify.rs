//! Parallel bijectivity check and its report.

use std::fmt::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use shipark_core::enumeration::{
    audit_word, finish_audit, words, LabelBitset, PartialAudit, VerificationReport,
};
use shipark_core::{GroundSet, ParkingFn, ValidPair, Word};

use crate::io::{fn_text, CliError, Result};

/// Largest `n` accepted; the label bitset has `n^n` bits.
pub const MAX_N: u32 = 9;

/// Audits every word of `[n]` on a pool of `jobs` threads (all cores when
/// `None`).
pub fn verify_parallel(n: u32, jobs: Option<usize>) -> Result<VerificationReport> {
    if n == 0 || n > MAX_N {
        return Err(CliError::Usage(format!(
            "n must be in 1..={MAX_N}, got {n}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let start = Instant::now();
    let mut report = pool.install(|| {
        let ground = GroundSet::upto(n as usize).expect("n >= 1");
        let all: Vec<Word> = words(ground).collect();
        let seen = LabelBitset::for_size(n as usize);
        let audit = all
            .par_iter()
            .map(|w| audit_word(w, &seen))
            .reduce(PartialAudit::default, PartialAudit::merge);
        finish_audit(n, audit, &seen)
    });
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

#[derive(Serialize)]
struct CollisionJson<'a> {
    label: &'a ParkingFn,
    pair: &'a ValidPair,
    other: Option<&'a ValidPair>,
}

#[derive(Serialize)]
struct RoundtripJson<'a> {
    pair: &'a ValidPair,
    label: &'a ParkingFn,
    recovered: Option<&'a ValidPair>,
    error: Option<String>,
}

#[derive(Serialize)]
struct PeelJson<'a> {
    steps: u64,
    violations: Vec<serde_json::Value>,
    mismatches: usize,
    /// At most ten, least first.
    mismatch_examples: &'a [ParkingFn],
}

#[derive(Serialize)]
struct ReportJson<'a> {
    n: u32,
    success: bool,
    pair_count: u64,
    parking_count: u64,
    expected: u64,
    label_collisions: Vec<CollisionJson<'a>>,
    roundtrip_failures: Vec<RoundtripJson<'a>>,
    unlabeled: &'a [ParkingFn],
    peel: PeelJson<'a>,
    elapsed_ms: Option<f64>,
}

/// The report as JSON, one line or indented.
pub fn report_json(r: &VerificationReport, pretty: bool) -> String {
    let out = ReportJson {
        n: r.n,
        success: r.success(),
        pair_count: r.pair_count,
        parking_count: r.parking_count,
        expected: r.expected,
        label_collisions: r
            .label_collisions
            .iter()
            .map(|c| CollisionJson { label: &c.label, pair: &c.pair, other: c.other.as_ref() })
            .collect(),
        roundtrip_failures: r
            .roundtrip_failures
            .iter()
            .map(|f| RoundtripJson {
                pair: &f.pair,
                label: &f.label,
                recovered: f.recovered.as_ref(),
                error: f.error.as_ref().map(ToString::to_string),
            })
            .collect(),
        unlabeled: &r.unlabeled,
        peel: PeelJson {
            steps: r.peel.steps,
            violations: r
                .peel
                .violations
                .iter()
                .map(|(f, e)| serde_json::json!({ "label": f, "error": e.kind(), "message": e.to_string() }))
                .collect(),
            mismatches: r.peel.mismatches.len(),
            mismatch_examples: &r.peel.mismatches[..r.peel.mismatches.len().min(10)],
        },
        elapsed_ms: r.elapsed.map(|d| d.as_secs_f64() * 1e3),
    };
    crate::io::to_json(&out, pretty)
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n                   {}", r.n);
    let _ = writeln!(s, "valid pairs         {}", r.pair_count);
    let _ = writeln!(s, "parking functions   {}", r.parking_count);
    let _ = writeln!(s, "(n+1)^(n-1)         {}", r.expected);
    let _ = writeln!(s, "label collisions    {}", r.label_collisions.len());
    let _ = writeln!(s, "round-trip failures {}", r.roundtrip_failures.len());
    let _ = writeln!(s, "unlabeled           {}", r.unlabeled.len());
    let _ = writeln!(s, "peel steps          {}", r.peel.steps);
    let _ = writeln!(s, "peel violations     {}", r.peel.violations.len());
    let _ = writeln!(s, "peel mismatches     {}", r.peel.mismatches.len());
    if let Some(f) = r.peel.mismatches.first() {
        let _ = writeln!(s, "  first mismatch    {}", fn_text(f));
    }
    if let Some(d) = r.elapsed {
        let _ = writeln!(s, "elapsed             {:.3} s", d.as_secs_f64());
    }
    let _ = writeln!(
        s,
        "result              {}",
        if r.success() { "success" } else { "FAILURE" }
    );
    s
}
