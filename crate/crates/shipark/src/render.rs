//! Static drawings. A pair is its word in a row with one arc per interval
//! above it; a parking function is a row of columns, column `i` stacking
//! `f⁻¹(i)` with the least element at the bottom, over a rule and the
//! column numbers.
//!
//! Output is byte-stable: no timestamps, fixed coordinates, `\n` endings.

use std::fmt::Write;

use shipark_core::{ParkingFn, ValidPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    Ascii,
    Svg,
}

fn cell_width(values: impl Iterator<Item = u32>) -> usize {
    values.map(|v| v.to_string().len()).max().unwrap_or(1) + 1
}

/// Bottom-to-top stacks of `f⁻¹(i)` for `i` in `1..=m`.
fn columns(f: &ParkingFn) -> Vec<Vec<u32>> {
    let mut cols = vec![Vec::new(); f.len()];
    for (a, v) in f.iter() {
        cols[v as usize - 1].push(a);
    }
    cols
}

pub fn pair_ascii(p: &ValidPair) -> String {
    let letters = p.word().letters();
    let w = cell_width(letters.iter().copied());
    let col = |pos: usize| (pos - 1) * w;
    let total = col(letters.len()) + 1;
    let mut out = String::new();
    for iv in p.arcs().iter() {
        let mut row = vec![' '; total];
        for c in row.iter_mut().take(col(iv.close)).skip(col(iv.open)) {
            *c = '-';
        }
        row[col(iv.open)] = '+';
        row[col(iv.close)] = '+';
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let word: String = letters.iter().map(|a| format!("{a:<w$}")).collect();
    out.push_str(word.trim_end());
    out.push('\n');
    out
}

pub fn fn_ascii(f: &ParkingFn) -> String {
    let cols = columns(f);
    let w = cell_width(
        f.ground()
            .elements()
            .iter()
            .copied()
            .chain(1..=f.len() as u32),
    );
    let height = cols.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for level in (0..height).rev() {
        let row: String = cols
            .iter()
            .map(|c| {
                c.get(level)
                    .map_or_else(|| " ".repeat(w), |a| format!("{a:<w$}"))
            })
            .collect();
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out.push_str(&"-".repeat(w * cols.len() - 1));
    out.push('\n');
    let index: String = (1..=cols.len()).map(|i| format!("{i:<w$}")).collect();
    out.push_str(index.trim_end());
    out.push('\n');
    out
}

const STEP: usize = 40;
const MARGIN: usize = 20;

fn svg_open(out: &mut String, width: usize, height: usize) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
}

pub fn pair_svg(p: &ValidPair) -> String {
    let letters = p.word().letters();
    let m = letters.len();
    let x = |pos: usize| MARGIN + STEP / 2 + (pos - 1) * STEP;
    let widest = p
        .arcs()
        .iter()
        .map(|iv| iv.close - iv.open)
        .max()
        .unwrap_or(0);
    let rise = widest * STEP / 2;
    let base = MARGIN + rise + 10;
    let width = 2 * MARGIN + m * STEP;
    let height = base + MARGIN + 20;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for iv in p.arcs().iter() {
        let (x1, x2) = (x(iv.open), x(iv.close));
        let r = (x2 - x1) / 2;
        let _ = writeln!(
            out,
            r#"<path d="M {x1} {base} A {r} {r} 0 0 1 {x2} {base}" fill="none" stroke="red" stroke-width="2"/>"#
        );
    }
    for (j, a) in letters.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="20" text-anchor="middle">{a}</text>"#,
            x(j + 1),
            base + 22
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn fn_svg(f: &ParkingFn) -> String {
    let cols = columns(f);
    let m = cols.len();
    let height_cells = cols.iter().map(Vec::len).max().unwrap_or(0);
    let rule = MARGIN + height_cells * 24 + 6;
    let width = 2 * MARGIN + m * STEP;
    let height = rule + 24 + MARGIN;
    let x = |i: usize| MARGIN + STEP / 2 + i * STEP;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (i, col) in cols.iter().enumerate() {
        for (level, a) in col.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="monospace" font-size="18" text-anchor="middle">{a}</text>"#,
                x(i),
                rule - 8 - level * 24
            );
        }
    }
    let _ = writeln!(
        out,
        r#"<line x1="{MARGIN}" y1="{rule}" x2="{}" y2="{rule}" stroke="black" stroke-width="2"/>"#,
        width - MARGIN
    );
    for i in 0..m {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="14" fill="gray" text-anchor="middle">{}</text>"#,
            x(i),
            rule + 20,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}
