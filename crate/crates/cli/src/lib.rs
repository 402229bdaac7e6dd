//! The `clusterfib` command line, as a library so it can be driven in tests.

use std::fmt;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use clusterfib_core::bijection::{self, enumerate_triples};
use clusterfib_core::clusterseed::{coefficient_free_variable, principal_variable};
use clusterfib_core::maxdyck::{enumerate_compatible, greedy_element};
use clusterfib_core::nondecdyck::enumerate;
use clusterfib_core::snake::cluster_variable_via_snake;
use clusterfib_core::verify::{self, Suite};
use clusterfib_core::{
    fibonacci, render, CompatibleSelection, LaurentPolynomial, NonDecreasingPath, PerfectMatching, SnakeGraph,
    Var,
};

/// Largest `n` accepted where a command has to list every object.
const PAIRS_MAX_N: usize = 12;
const NONDEC_MAX_N: usize = 14;
const MATCHINGS_LIST_MAX_N: usize = 26;
const SNAKE_MAX_K: usize = 14;
const MUTATION_MAX_K: usize = 60;
const VERIFY_MAX_N: usize = 10;
/// `count --model matchings` uses a transfer count and only stops at `u128` overflow.
const MATCHINGS_COUNT_MAX_N: usize = 183;

#[derive(Debug, Parser)]
#[command(name = "clusterfib", version, about = "Cluster variables of A(2,2) and their Fibonacci-counted models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the objects of one model.
    Count {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Also print the Fibonacci number the count should equal; exit 1 on mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Expand the cluster variable x_k.
    Expand {
        #[arg(long, value_enum)]
        via: Via,
        #[arg(long)]
        k: usize,
        /// Set y1 = y2 = 1.
        #[arg(long)]
        coefficient_free: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Expand the greedy element x[a1, a2] of A(b, c).
    #[command(allow_negative_numbers = true)]
    Greedy {
        #[arg(long)]
        a1: i64,
        #[arg(long)]
        a2: i64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        c: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// List every object of a model as JSON lines.
    Enumerate {
        #[arg(long, value_enum)]
        model: EnumModel,
        #[arg(long)]
        n: usize,
    },
    /// Apply a bijection to each JSON object read from standard input.
    Map {
        /// Kind of the input objects; inferred from --apply when omitted.
        #[arg(long, value_enum)]
        from: Option<Kind>,
        #[arg(long, value_enum)]
        apply: MapName,
    },
    /// Run self-checks up to a size bound.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Draw each pair or path read from standard input.
    Render {
        #[arg(long, value_enum)]
        model: RenderModel,
        #[arg(long, value_enum, default_value_t = DrawFormat::Ascii)]
        format: DrawFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Matchings,
    Pairs,
    Nondec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumModel {
    Matchings,
    Pairs,
    Nondec,
    Triples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Snake,
    Mutation,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Matching,
    Pair,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Phi,
    PhiInv,
    Theta,
    ThetaInv,
    Psi,
}

impl MapName {
    fn domain(self) -> Kind {
        match self {
            MapName::Phi | MapName::Psi => Kind::Matching,
            MapName::PhiInv | MapName::Theta => Kind::Pair,
            MapName::ThetaInv => Kind::Path,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Counts,
    Oracles,
    Bijections,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderModel {
    Pair,
    Nondec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawFormat {
    Ascii,
    Svg,
}

/// Why a command stopped early. The exit code follows from the variant.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Check,
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Check => 1,
            Failure::Usage(_) | Failure::Data(_) | Failure::Io(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Data(m) => write!(f, "data error: {m}"),
            Failure::Check => f.write_str("verification failed"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

/// Runs one command line. Returns the process exit code: 0 on success,
/// 1 when a check fails, 2 on bad usage or bad input.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "clusterfib: {f}");
            f.exit_code()
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Count { model, n, check } => count(model, n, check, out),
        Command::Expand {
            via,
            k,
            coefficient_free,
            format,
        } => expand(via, k, coefficient_free, format, out),
        Command::Greedy { a1, a2, b, c, format } => {
            let p = greedy_element(a1, a2, b, c).map_err(|e| Failure::Usage(e.to_string()))?;
            write_poly(&p, format, out)
        }
        Command::Enumerate { model, n } => enumerate_model(model, n, out),
        Command::Map { from, apply } => map(from, apply, stdin, out),
        Command::Verify { suite, max_n } => run_verify(suite, max_n, out),
        Command::Render { model, format } => draw(model, format, stdin, out),
    }
}

fn limit(what: &str, n: usize, min: usize, max: usize) -> CmdResult {
    if n < min || n > max {
        return Err(Failure::Usage(format!("{what} must be between {min} and {max}, got {n}")));
    }
    Ok(())
}

fn count(model: Model, n: usize, check: bool, out: &mut dyn Write) -> CmdResult {
    let (value, index) = match model {
        Model::Matchings => {
            limit("--n for matchings", n, 1, MATCHINGS_COUNT_MAX_N)?;
            (SnakeGraph::new(n).expect("n >= 1").count_matchings(), n + 2)
        }
        Model::Pairs => {
            limit("--n for pairs", n, 0, PAIRS_MAX_N)?;
            (enumerate_compatible(n).len() as u128, 2 * n + 3)
        }
        Model::Nondec => {
            limit("--n for nondec", n, 1, NONDEC_MAX_N)?;
            (enumerate(n).len() as u128, 2 * n - 1)
        }
    };
    writeln!(out, "{value}")?;
    if check {
        let want = fibonacci(index as u32);
        let verdict = if want == value { "ok" } else { "MISMATCH" };
        writeln!(out, "expected F_{index} = {want}: {verdict}")?;
        if want != value {
            return Err(Failure::Check);
        }
    }
    Ok(())
}

fn expand(via: Via, k: usize, coefficient_free: bool, format: PolyFormat, out: &mut dyn Write) -> CmdResult {
    let p = match via {
        Via::Snake => {
            limit("--k for snake", k, 3, SNAKE_MAX_K)?;
            cluster_variable_via_snake(k).map_err(|e| Failure::Usage(e.to_string()))?
        }
        Via::Mutation if coefficient_free => {
            limit("--k for coefficient-free mutation", k, 1, MUTATION_MAX_K)?;
            coefficient_free_variable(k).map_err(|e| Failure::Usage(e.to_string()))?
        }
        Via::Mutation => {
            limit("--k for mutation", k, 3, MUTATION_MAX_K)?;
            principal_variable(k).map_err(|e| Failure::Usage(e.to_string()))?
        }
        Via::Greedy => {
            limit("--k for greedy", k, 3, usize::MAX)?;
            greedy_element(k as i64 - 2, k as i64 - 3, 2, 2).map_err(|e| Failure::Usage(e.to_string()))?
        }
    };
    let p = if coefficient_free {
        p.specialize_ones(&[Var::Y1, Var::Y2])
    } else {
        p
    };
    write_poly(&p, format, out)
}

fn write_poly(p: &LaurentPolynomial, format: PolyFormat, out: &mut dyn Write) -> CmdResult {
    match format {
        PolyFormat::Json => write_json(p, out),
        PolyFormat::Text => Ok(writeln!(out, "{}", p.to_fraction_string())?),
    }
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> CmdResult {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn enumerate_model(model: EnumModel, n: usize, out: &mut dyn Write) -> CmdResult {
    let mut out = io::BufWriter::new(out);
    match model {
        EnumModel::Matchings => {
            limit("--n for matchings", n, 1, MATCHINGS_LIST_MAX_N)?;
            for p in SnakeGraph::new(n).expect("n >= 1").enumerate_matchings() {
                write_json(&p, &mut out)?;
            }
        }
        EnumModel::Pairs => {
            limit("--n for pairs", n, 0, PAIRS_MAX_N)?;
            for s in enumerate_compatible(n) {
                write_json(&s, &mut out)?;
            }
        }
        EnumModel::Nondec => {
            limit("--n for nondec", n, 1, NONDEC_MAX_N)?;
            for p in enumerate(n) {
                write_json(&p, &mut out)?;
            }
        }
        EnumModel::Triples => {
            limit("--n for triples", n, 0, PAIRS_MAX_N)?;
            for t in enumerate_triples(n) {
                write_json(&t, &mut out)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Every JSON value on standard input, with the line it starts on.
fn read_values(stdin: &mut dyn Read) -> Result<Vec<(usize, Value)>, Failure> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Failure::Data(format!("standard input is not UTF-8 text: {e}")))?;
    let line_of = |offset: usize| 1 + text[..offset].bytes().filter(|&b| b == b'\n').count();
    let mut stream = serde_json::Deserializer::from_str(&text).into_iter::<Value>();
    let mut values = Vec::new();
    loop {
        // skip whitespace so the recorded line is where the value begins
        let start = stream.byte_offset();
        let skipped = text[start..].len() - text[start..].trim_start().len();
        match stream.next() {
            None => break,
            Some(Ok(v)) => values.push((line_of(start + skipped), v)),
            Some(Err(e)) => {
                let line = line_of(start + skipped);
                return Err(Failure::Data(format!("line {line}: malformed JSON: {e}")));
            }
        }
    }
    if values.is_empty() {
        return Err(Failure::Data("no JSON input on standard input".into()));
    }
    Ok(values)
}

fn decode<T: DeserializeOwned>(line: usize, what: &str, v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Data(format!("line {line}: not a valid {what}: {e}")))
}

fn map(from: Option<Kind>, apply: MapName, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    let domain = apply.domain();
    if let Some(from) = from.filter(|&f| f != domain) {
        return Err(Failure::Usage(format!(
            "--apply {} takes a {} as input, not a {}",
            apply.to_possible_value().expect("no skipped variants").get_name(),
            kind_name(domain),
            kind_name(from)
        )));
    }
    let values = read_values(stdin)?;
    let mut out = io::BufWriter::new(out);
    for (line, v) in values {
        let fail = |e: bijection::BijectionError| Failure::Data(format!("line {line}: {e}"));
        match apply {
            MapName::Phi => {
                let p: PerfectMatching = decode(line, "matching", v)?;
                write_json(&bijection::phi(&p).map_err(fail)?, &mut out)?;
            }
            MapName::Psi => {
                let p: PerfectMatching = decode(line, "matching", v)?;
                write_json(&bijection::psi(&p).map_err(fail)?, &mut out)?;
            }
            MapName::PhiInv => {
                let s: CompatibleSelection = decode(line, "pair", v)?;
                write_json(&bijection::phi_inv(&s).map_err(fail)?, &mut out)?;
            }
            MapName::Theta => {
                let s: CompatibleSelection = decode(line, "pair", v)?;
                write_json(&bijection::theta(&s).map_err(fail)?, &mut out)?;
            }
            MapName::ThetaInv => {
                let q: NonDecreasingPath = decode(line, "path", v)?;
                write_json(&bijection::theta_inv(&q).map_err(fail)?, &mut out)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Matching => "matching",
        Kind::Pair => "pair",
        Kind::Path => "path",
    }
}

fn run_verify(suite: SuiteArg, max_n: usize, out: &mut dyn Write) -> CmdResult {
    limit("--max-n", max_n, 0, VERIFY_MAX_N)?;
    let suite = match suite {
        SuiteArg::Counts => Suite::Counts,
        SuiteArg::Oracles => Suite::Oracles,
        SuiteArg::Bijections => Suite::Bijections,
        SuiteArg::All => Suite::All,
    };
    let report = verify::run(suite, max_n);
    writeln!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn draw(model: RenderModel, format: DrawFormat, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    let values = read_values(stdin)?;
    for (i, (line, v)) in values.into_iter().enumerate() {
        if i > 0 && format == DrawFormat::Ascii {
            writeln!(out)?;
        }
        let text = match (model, format) {
            (RenderModel::Pair, DrawFormat::Ascii) => render::pair_ascii(&decode(line, "pair", v)?),
            (RenderModel::Pair, DrawFormat::Svg) => render::pair_svg(&decode(line, "pair", v)?),
            (RenderModel::Nondec, DrawFormat::Ascii) => render::nondec_ascii(&decode(line, "path", v)?),
            (RenderModel::Nondec, DrawFormat::Svg) => render::nondec_svg(&decode(line, "path", v)?),
        };
        write!(out, "{text}")?;
    }
    Ok(())
}
