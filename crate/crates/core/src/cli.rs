//! Command-line front end. [`run`] parses arguments, writes to the supplied
//! streams and returns the process exit code, so it is testable in-process.
//!
//! Exit codes: 0 success, 1 violations found, 2 usage error, 3 internal or
//! I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumeration::{enumerate_connected, enumerate_connected_upto, ENUMERATION_MAX_VERTICES};
use crate::error::Error;
use crate::graph::{Gadget, Graph};
use crate::report::ReportDocument;
use crate::spectra::{cycle_spectrum, multipartite_spectrum, numeric_spectrum, path_spectrum, ClosedFormSpectrum, LaplacianCounter};
use crate::theorems::scan_corpus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable consulted when `--jobs` is absent.
pub const JOBS_ENV: &str = "LAPGIRTH_JOBS";

#[derive(Debug, Parser)]
#[command(name = "lapgirth", version, about = "Laplacian eigenvalue distribution versus girth for small graphs")]
struct Cli {
    /// Worker threads for corpus scans (default: all cores).
    #[arg(long, global = true, env = JOBS_ENV)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the characteristic polynomial and the exact and numeric Laplacian spectrum.
    Spectrum(GraphInput),
    /// Count Laplacian eigenvalues in a half-open interval (a, b] exactly.
    Count {
        #[command(flatten)]
        input: GraphInput,
        /// Interval endpoints; integers, fractions like 7/2, or decimals.
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true, allow_negative_numbers = true)]
        interval: Vec<String>,
    },
    /// Check the girth bound and its equality cases over a corpus.
    Verify {
        /// Scan every connected graph on 1..=NMAX vertices.
        #[arg(long, conflicts_with = "g6_file", required_unless_present = "g6_file")]
        nmax: Option<usize>,
        /// Scan the graphs in a graph6 file, one per line.
        #[arg(long)]
        g6_file: Option<PathBuf>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write a per-record CSV export.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print one graph6 line per connected graph on N vertices, up to isomorphism.
    Enumerate {
        /// Vertex count, 1..=9.
        n: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Named family: `cycle N`, `path N`, `k R1,R2,...`, `ut G,T`, `gadget G1..G4`.
    #[arg(long, num_args = 2, value_names = ["KIND", "PARAMS"])]
    family: Option<Vec<String>>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::NoConvergence(_) | Error::ZeroPolynomial => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: EXIT_INTERNAL, message: format!("I/O: {e}") }
}

type CliResult<T = i32> = std::result::Result<T, Failure>;

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let command_line = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let pool = match cli.jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map(Some)
            .map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() }),
        None => Ok(None),
    };
    let result = pool.and_then(|pool| dispatch(cli.command, pool.as_ref(), &command_line, out, err));
    result.unwrap_or_else(|f| {
        let _ = writeln!(err, "error: {}", f.message);
        f.code
    })
}

fn dispatch(
    command: Command,
    pool: Option<&rayon::ThreadPool>,
    command_line: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    match command {
        Command::Spectrum(input) => cmd_spectrum(&input, out),
        Command::Count { input, interval } => cmd_count(&input, &interval[0], &interval[1], out),
        Command::Verify { nmax, g6_file, json, csv } => {
            let graphs = verify_corpus(nmax, g6_file, pool)?;
            cmd_verify(graphs, json, csv, pool, command_line, out, err)
        }
        Command::Enumerate { n } => cmd_enumerate(n, pool, out),
    }
}

/// Runs `f` on the configured pool, or on rayon's global pool.
fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Graph plus its closed-form spectrum when the family has one.
fn resolve(input: &GraphInput) -> CliResult<(Graph, Option<ClosedFormSpectrum>)> {
    if let Some(g6) = &input.g6 {
        return Ok((Graph::from_graph6(g6).map_err(Error::from)?, None));
    }
    let family = input.family.as_ref().expect("clap enforces one input");
    parse_family(&family[0], &family[1])
}

fn parse_list(params: &str) -> CliResult<Vec<usize>> {
    params
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| usage(format!("expected a non-negative integer, got {p:?}"))))
        .collect()
}

fn parse_family(kind: &str, params: &str) -> CliResult<(Graph, Option<ClosedFormSpectrum>)> {
    let single = |params: &str| -> CliResult<usize> {
        match parse_list(params)?.as_slice() {
            [n] => Ok(*n),
            _ => Err(usage(format!("family {kind} takes one integer"))),
        }
    };
    Ok(match kind.to_ascii_lowercase().as_str() {
        "cycle" => {
            let n = single(params)?;
            (Graph::cycle(n)?, Some(cycle_spectrum(n)?))
        }
        "path" => {
            let n = single(params)?;
            (Graph::path(n)?, Some(path_spectrum(n)?))
        }
        "k" => {
            let parts = parse_list(params)?;
            (Graph::complete_multipartite(&parts)?, multipartite_spectrum(&parts).ok())
        }
        "ut" => match parse_list(params)?.as_slice() {
            [g, t] => (Graph::u_t(*g, *t)?, None),
            _ => return Err(usage("family ut takes G,T")),
        },
        "gadget" => {
            let which: Gadget = params.parse().map_err(|e: crate::graph::ParseGadgetError| usage(e.0))?;
            (Graph::gadget(which), None)
        }
        other => return Err(usage(format!("unknown family {other:?}; expected cycle, path, k, ut or gadget"))),
    })
}

/// Integers, fractions `p/q`, and finite decimals such as `-2.75`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = (0..frac.len()).fold(BigInt::one(), |acc, _| acc * 10);
    let value = BigRational::new(digits, scale);
    Some(if negative { -value } else { value })
}

fn format_numeric(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format!("{:.12}", if v.abs() < 5e-13 { 0.0 } else { v }))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_spectrum(input: &GraphInput, out: &mut dyn Write) -> CliResult {
    let (g, closed) = resolve(input)?;
    let counter = LaplacianCounter::new(&g)?;
    let integers = counter.integer_eigenvalues();
    let integral: usize = integers.iter().map(|&(_, m)| m).sum();
    let exact = match closed {
        Some(spectrum) => spectrum.to_string(),
        None if integral == g.n() => ClosedFormSpectrum::from_integers(&integers).to_string(),
        None => format!(
            "{} (plus {} irrational eigenvalues)",
            ClosedFormSpectrum::from_integers(&integers),
            g.n() - integral
        ),
    };
    let numeric = numeric_spectrum(&g)?;
    (|| -> std::io::Result<()> {
        writeln!(out, "graph6: {}", g.to_graph6())?;
        writeln!(out, "n: {}, edges: {}, girth: {}", g.n(), g.edge_count(), g.girth())?;
        writeln!(out, "characteristic polynomial: {}", counter.polynomial())?;
        writeln!(out, "exact spectrum: {exact}")?;
        writeln!(out, "numeric spectrum: {}", format_numeric(&numeric))
    })()
    .map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_count(input: &GraphInput, a: &str, b: &str, out: &mut dyn Write) -> CliResult {
    let (g, _) = resolve(input)?;
    let parse = |s: &str| parse_rational(s).ok_or_else(|| usage(format!("cannot parse {s:?} as a rational number")));
    let (a, b) = (parse(a)?, parse(b)?);
    if a >= b {
        return Err(Error::DegenerateInterval { a: a.to_string(), b: b.to_string() }.into());
    }
    let cert = LaplacianCounter::new(&g)?.certificate(&a, &b)?;
    let endpoint = |x: &BigRational, m: usize| match m {
        0 => format!("{x} is not an eigenvalue"),
        m => format!("{x} is an eigenvalue of multiplicity {m}"),
    };
    (|| -> std::io::Result<()> {
        writeln!(out, "m({a}, {b}] = {}", cert.count())?;
        writeln!(out, "{}", endpoint(&a, cert.result.a_multiplicity))?;
        writeln!(out, "{}", endpoint(&b, cert.result.b_multiplicity))?;
        writeln!(out, "characteristic polynomial: {}", cert.polynomial)?;
        for ((q, m), k) in cert.decomposition.factors.iter().zip(&cert.result.factor_counts) {
            writeln!(out, "factor ({q})^{m}: {k} distinct roots in interval")?;
        }
        Ok(())
    })()
    .map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn read_graph6_file(path: &PathBuf) -> CliResult<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure { code: EXIT_INTERNAL, message: format!("{}: {e}", path.display()) })?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| Graph::from_graph6(line).map_err(|e| usage(format!("{}:{}: {e}", path.display(), i + 1))))
        .collect()
}

fn verify_corpus(nmax: Option<usize>, g6_file: Option<PathBuf>, pool: Option<&rayon::ThreadPool>) -> CliResult<Vec<Graph>> {
    Ok(match (nmax, g6_file) {
        (Some(nmax), _) => in_pool(pool, || enumerate_connected_upto(nmax))?.into_iter().flatten().collect(),
        (None, Some(path)) => read_graph6_file(&path)?,
        (None, None) => unreachable!("clap requires a source"),
    })
}

fn cmd_verify(
    graphs: Vec<Graph>,
    json: Option<PathBuf>,
    csv: Option<PathBuf>,
    pool: Option<&rayon::ThreadPool>,
    command_line: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let scan = in_pool(pool, || scan_corpus(graphs));
    let doc = ReportDocument::new(&scan, command_line, ReportDocument::now());
    match json {
        Some(path) => std::fs::write(&path, doc.to_json()).map_err(io_failure)?,
        None => out.write_all(doc.to_json().as_bytes()).map_err(io_failure)?,
    }
    if let Some(path) = csv {
        let file = std::fs::File::create(&path).map_err(io_failure)?;
        doc.write_csv(file)?;
    }
    let s = &doc.summary;
    let ut = match &s.u_t_3_1 {
        Some(o) => format!("count {} bound {} equality {} ({})", o.count, o.bound, o.equality, o.graph6),
        None => "not in corpus".to_string(),
    };
    let _ = writeln!(
        err,
        "graphs: {}  violations: {}  equality: C3 {} K32 {} U1 {} Other {}  lemma failures: {}  errors: {}\ntriangle with pendant: {ut}",
        s.total,
        s.violations.len(),
        s.equality_cases.c3.len(),
        s.equality_cases.k32.len(),
        s.equality_cases.u1.len(),
        s.equality_cases.other.len(),
        s.lemma_failures.len(),
        s.errors.len(),
    );
    Ok(if s.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn cmd_enumerate(n: usize, pool: Option<&rayon::ThreadPool>, out: &mut dyn Write) -> CliResult {
    if n == 0 || n > ENUMERATION_MAX_VERTICES {
        return Err(usage(format!("n must be in 1..={ENUMERATION_MAX_VERTICES}")));
    }
    let mut text = String::new();
    for g in in_pool(pool, || enumerate_connected(n))? {
        text.push_str(&g.to_graph6());
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("lapgirth").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rationals() {
        let q = |p: i64, d: i64| BigRational::new(p.into(), d.into());
        assert_eq!(parse_rational("4"), Some(q(4, 1)));
        assert_eq!(parse_rational("-7/2"), Some(q(-7, 2)));
        assert_eq!(parse_rational("2.75"), Some(q(11, 4)));
        assert_eq!(parse_rational("-.5"), Some(q(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn spectrum_of_k32() {
        let (code, out, _) = run_capture(&["spectrum", "--family", "k", "3,2"]);
        assert_eq!(code, 0);
        assert!(out.contains("exact spectrum: 0, 2×2, 3, 5\n"), "{out}");
    }

    #[test]
    fn spectrum_of_single_vertex() {
        let (code, out, _) = run_capture(&["spectrum", "--g6", "@"]);
        assert_eq!(code, 0);
        assert!(out.contains("exact spectrum: 0\n"), "{out}");
    }

    #[test]
    fn count_k32() {
        let (code, out, _) = run_capture(&["count", "--family", "k", "3,2", "--interval", "4", "5"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("m(4, 5] = 1\n"), "{out}");
        assert!(out.contains("5 is an eigenvalue of multiplicity 1"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["count", "--g6", "Bw", "--interval", "3", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["spectrum", "--g6", "B!"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["spectrum", "--family", "wheel", "5"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["enumerate", "10"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--nmax", "3", "--jobs", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn enumerate_four() {
        let (code, out, _) = run_capture(&["enumerate", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
    }
}
