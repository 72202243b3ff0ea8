use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use shipark::io::{
    fn_from_parts, fn_text, parse_domain, parse_fn, parse_pair, parse_point, parse_word,
    point_text, read_source, to_json, two_line, CliError, Format, Result,
};
use shipark::render::{fn_ascii, fn_svg, pair_ascii, pair_svg, Style};
use shipark::trace::{peel_table, spark_table};
use shipark::verify::{report_json, report_text, verify_parallel, MAX_N};
use shipark_core::enumeration::{central_functions, parking_functions, valid_pairs, words};
use shipark_core::geometry::{pair_of_point, representative_point, RationalPoint};
use shipark_core::{
    center, contract, invert, label, maxinv, parse_compact_fn, parse_compact_intervals,
    parse_compact_word, peel_trace, s_park, GroundSet, ParkingFn, ValidPair, Word,
};

/// Pak-Stanley labels of Shi arrangement regions.
#[derive(Parser)]
#[command(name = "shipark", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label a valid pair with its parking function.
    Label(Io),
    /// Recover the valid pair labeled by a parking function.
    Invert {
        #[command(flatten)]
        io: Io,
        /// Print the peeling table to stderr.
        #[arg(long)]
        trace_peel: bool,
    },
    /// Contract a word into a central function.
    Contract(Io),
    /// S-park a central function into a word.
    Spark {
        #[command(flatten)]
        io: Io,
        /// Print each insertion to stderr.
        #[arg(long)]
        trace_spark: bool,
    },
    /// Maximal inversion intervals of a word.
    Maxinv(Io),
    /// Center of a parking function and the restriction to it.
    Center(Io),
    /// List words, valid pairs, parking functions or central functions.
    Enumerate {
        what: Kind,
        #[arg(long)]
        n: u32,
        /// Prefix each pair with its label.
        #[arg(long)]
        with_labels: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Check that labeling is a bijection on [n].
    Verify {
        #[arg(long)]
        n: u32,
        /// Worker threads; all cores by default.
        #[arg(long, env = "SHIPARK_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// The valid pair of the region containing a point.
    PointToPair {
        /// Coordinates as `p/q` separated by commas.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// An exact point of the region of a valid pair.
    PairToPoint(Io),
    /// Draw a valid pair (arcs over the word) or a parking function (columns).
    Render {
        #[command(flatten)]
        input: Input,
        /// How to read a file or stdin whose text could be either.
        #[arg(long, value_enum)]
        kind: Option<Object>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Style,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Words,
    Pairs,
    Parking,
    Central,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Pair,
    Fn,
}

#[derive(Args)]
struct Input {
    /// Word as digits, e.g. 843967125.
    #[arg(long)]
    word: Option<String>,
    /// Intervals as o-c pairs, e.g. 1-6,3-8,6-9.
    #[arg(long)]
    intervals: Option<String>,
    /// Function values as digits, e.g. 341183414.
    #[arg(long = "fn")]
    function: Option<String>,
    /// Domain of --fn as digits or a comma list; [m] by default.
    #[arg(long)]
    domain: Option<String>,
    /// Input file in JSON or compact text; `-` for stdin.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Out {
    /// Output format; follows the input by default.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Indented JSON or a human-readable table.
    #[arg(long)]
    pretty: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Io {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    out: Out,
}

/// Input text and the form it came in.
struct Source {
    text: String,
    format: Format,
}

impl Input {
    fn source(&self) -> Result<Source> {
        let path = self.file.clone().unwrap_or_else(|| PathBuf::from("-"));
        let text = read_source(&path)?;
        let format = Format::detect(&text);
        Ok(Source { text, format })
    }

    fn has_flags(&self) -> bool {
        self.word.is_some()
            || self.intervals.is_some()
            || self.function.is_some()
            || self.domain.is_some()
    }

    fn reject(&self, flags: &[(&str, bool)]) -> Result<()> {
        for &(name, set) in flags {
            if set {
                return Err(CliError::Usage(format!("--{name} does not apply here")));
            }
        }
        if self.has_flags() && self.file.is_some() {
            return Err(CliError::Usage("give either flags or an input file".into()));
        }
        Ok(())
    }

    fn pair(&self) -> Result<(ValidPair, Format)> {
        self.reject(&[
            ("fn", self.function.is_some()),
            ("domain", self.domain.is_some()),
        ])?;
        match &self.word {
            Some(w) => {
                let word = Word::from_letters(parse_compact_word(w)?)?;
                let arcs = parse_compact_intervals(self.intervals.as_deref().unwrap_or(""))?;
                Ok((ValidPair::new(word, arcs)?, Format::Text))
            }
            None if self.intervals.is_some() => {
                Err(CliError::Usage("--intervals needs --word".into()))
            }
            None => {
                let s = self.source()?;
                Ok((parse_pair(&s.text)?, s.format))
            }
        }
    }

    fn word(&self) -> Result<(Word, Format)> {
        self.reject(&[
            ("fn", self.function.is_some()),
            ("domain", self.domain.is_some()),
            ("intervals", self.intervals.is_some()),
        ])?;
        match &self.word {
            Some(w) => Ok((Word::from_letters(parse_compact_word(w)?)?, Format::Text)),
            None => {
                let s = self.source()?;
                Ok((parse_word(&s.text)?, s.format))
            }
        }
    }

    fn function(&self) -> Result<(ParkingFn, Format)> {
        self.reject(&[
            ("word", self.word.is_some()),
            ("intervals", self.intervals.is_some()),
        ])?;
        match &self.function {
            Some(v) => {
                let domain = self.domain.as_deref().map(parse_domain).transpose()?;
                Ok((fn_from_parts(domain, parse_compact_fn(v)?)?, Format::Text))
            }
            None if self.domain.is_some() => Err(CliError::Usage("--domain needs --fn".into())),
            None => {
                let s = self.source()?;
                Ok((parse_fn(&s.text)?, s.format))
            }
        }
    }
}

impl Out {
    fn format(&self, input: Format) -> Format {
        self.format.unwrap_or(input)
    }

    fn emit(&self, body: &str) -> Result<()> {
        let mut body = body.to_string();
        if !body.ends_with('\n') {
            body.push('\n');
        }
        emit_to(self.output.as_ref(), &body)
    }
}

fn emit_to(path: Option<&PathBuf>, body: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn function_out(f: &ParkingFn, out: &Out, input: Format) -> String {
    match (out.format(input), out.pretty) {
        (Format::Json, pretty) => to_json(f, pretty),
        (Format::Text, true) => two_line(f),
        (Format::Text, false) => fn_text(f),
    }
}

fn pair_out(p: &ValidPair, out: &Out, input: Format) -> String {
    match (out.format(input), out.pretty) {
        (Format::Json, pretty) => to_json(p, pretty),
        (Format::Text, true) => pair_ascii(p),
        (Format::Text, false) => p.to_string(),
    }
}

fn point_out(x: &RationalPoint, out: &Out, input: Format) -> String {
    match out.format(input) {
        Format::Json => to_json(x, out.pretty),
        Format::Text => point_text(x),
    }
}

fn check_n(n: u32) -> Result<usize> {
    if n == 0 || n > MAX_N {
        return Err(CliError::Usage(format!(
            "--n must be in 1..={MAX_N}, got {n}"
        )));
    }
    Ok(n as usize)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Label(io) => {
            let (p, form) = io.input.pair()?;
            io.out.emit(&function_out(&label(&p), &io.out, form))?;
        }
        Command::Invert { io, trace_peel } => {
            let (f, form) = io.input.function()?;
            if trace_peel {
                let (_, rows) = peel_trace(&f);
                eprint!("{}", peel_table(&rows));
            }
            io.out.emit(&pair_out(&invert(&f)?, &io.out, form))?;
        }
        Command::Contract(io) => {
            let (w, form) = io.input.word()?;
            io.out.emit(&function_out(&contract(&w), &io.out, form))?;
        }
        Command::Spark { io, trace_spark } => {
            let (f, form) = io.input.function()?;
            let w = s_park(&f)?;
            if trace_spark {
                eprint!("{}", spark_table(&f)?);
            }
            let body = match io.out.format(form) {
                Format::Json => to_json(&w, io.out.pretty),
                Format::Text => w.to_string(),
            };
            io.out.emit(&body)?;
        }
        Command::Maxinv(io) => {
            let (w, form) = io.input.word()?;
            let arcs = maxinv(&w);
            let body = match (io.out.format(form), io.out.pretty) {
                (Format::Json, pretty) => to_json(&arcs, pretty),
                (Format::Text, true) => pair_ascii(
                    &ValidPair::new(w, arcs.as_slice().to_vec())
                        .expect("maximal inversions are valid"),
                ),
                (Format::Text, false) => arcs.to_string(),
            };
            io.out.emit(&body)?;
        }
        Command::Center(io) => {
            let (f, form) = io.input.function()?;
            let dec = center(&f);
            let body = match (io.out.format(form), io.out.pretty) {
                (Format::Json, pretty) => to_json(
                    &json!({ "center": dec.center, "restriction": dec.restriction }),
                    pretty,
                ),
                (Format::Text, true) => {
                    format!("zeta = {}\n{}", dec.zeta(), two_line(&dec.restriction))
                }
                (Format::Text, false) => fn_text(&dec.restriction),
            };
            io.out.emit(&body)?;
        }
        Command::Enumerate {
            what,
            n,
            with_labels,
            out,
        } => {
            let ground = GroundSet::upto(check_n(n)?).expect("n >= 1");
            let json = out.format(Format::Text) == Format::Json;
            let mut body = String::new();
            let mut line = |s: String| {
                body.push_str(&s);
                body.push('\n');
            };
            match what {
                Kind::Words => words(ground).for_each(|w| {
                    line(if json {
                        to_json(&w, false)
                    } else {
                        w.to_string()
                    })
                }),
                Kind::Parking => parking_functions(ground).for_each(|f| {
                    line(if json {
                        to_json(&f, false)
                    } else {
                        fn_text(&f)
                    })
                }),
                Kind::Central => central_functions(ground).for_each(|f| {
                    line(if json {
                        to_json(&f, false)
                    } else {
                        fn_text(&f)
                    })
                }),
                Kind::Pairs => valid_pairs(ground).for_each(|p| {
                    line(match (json, with_labels) {
                        (true, true) => to_json(&json!({ "label": label(&p), "pair": p }), false),
                        (true, false) => to_json(&p, false),
                        (false, true) => format!("{}\t{}", label(&p), p),
                        (false, false) => p.to_string(),
                    })
                }),
            }
            emit_to(out.output.as_ref(), &body)?;
        }
        Command::Verify { n, jobs, out } => {
            if jobs == Some(0) {
                return Err(CliError::Usage("--jobs must be positive".into()));
            }
            let report = verify_parallel(n, jobs)?;
            let body = match (out.format(Format::Json), out.pretty) {
                (Format::Json, pretty) => report_json(&report, pretty),
                (Format::Text, _) => report_text(&report),
            };
            out.emit(&body)?;
            return Ok(report.success());
        }
        Command::PointToPair { point, io } => {
            if io.input.has_flags() {
                return Err(CliError::Usage(
                    "point-to-pair takes --point or an input file".into(),
                ));
            }
            let (x, form) = match point {
                Some(s) if io.input.file.is_none() => (parse_point(&s)?, Format::Text),
                Some(_) => {
                    return Err(CliError::Usage(
                        "give either --point or an input file".into(),
                    ))
                }
                None => {
                    let s = io.input.source()?;
                    (parse_point(&s.text)?, s.format)
                }
            };
            io.out.emit(&pair_out(&pair_of_point(&x)?, &io.out, form))?;
        }
        Command::PairToPoint(io) => {
            let (p, form) = io.input.pair()?;
            let n = p.len();
            io.out
                .emit(&point_out(&representative_point(&p, n)?, &io.out, form))?;
        }
        Command::Render {
            input,
            kind,
            format,
            output,
        } => {
            let shown = if input.has_flags() {
                match (kind, input.function.is_some()) {
                    (Some(Object::Fn), _) | (None, true) => Shown::Fn(input.function()?.0),
                    _ => Shown::Pair(input.pair()?.0),
                }
            } else {
                let s = input.source()?;
                match kind.map_or_else(|| guess_kind(&s), Ok)? {
                    Object::Pair => Shown::Pair(parse_pair(&s.text)?),
                    Object::Fn => Shown::Fn(parse_fn(&s.text)?),
                }
            };
            let body = match (shown, format) {
                (Shown::Pair(p), Style::Ascii) => pair_ascii(&p),
                (Shown::Pair(p), Style::Svg) => pair_svg(&p),
                (Shown::Fn(f), Style::Ascii) => fn_ascii(&f),
                (Shown::Fn(f), Style::Svg) => fn_svg(&f),
            };
            emit_to(output.as_ref(), &body)?;
        }
    }
    Ok(true)
}

/// JSON with a `word` key or text with an arc list is a pair; a bare digit
/// string is ambiguous.
fn guess_kind(s: &Source) -> Result<Object> {
    match s.format {
        Format::Json if s.text.contains("\"word\"") => Ok(Object::Pair),
        Format::Json => Ok(Object::Fn),
        Format::Text if s.text.contains('-') => Ok(Object::Pair),
        Format::Text => Err(CliError::Usage(
            "cannot tell a word from a function; pass --kind".into(),
        )),
    }
}

enum Shown {
    Pair(ValidPair),
    Fn(ParkingFn),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
        Err(e) => {
            println!("{}", e.to_json());
            ExitCode::from(e.status())
        }
    }
}
