//! Command-line front end. Every command prints either plain text or a JSON
//! envelope and maps outcomes onto exit codes: 0 success, 1 disagreement or
//! consistency failure, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blasiak::{decompose_hook_rect, dimension_identity, hook_kronecker, CoefficientQuery};
use crate::conversion::{to_natural, to_small_bar, ConversionTrace};
use crate::error::Error;
use crate::fixtures;
use crate::oracle::{kronecker_oracle, CharacterCache};
use crate::partitions::{make_hook, make_rectangle, partitions_of, Partition};
use crate::stability::{probe_w1, verify_stability, StabilityReport, Verdict};
use crate::tableaux::{ColoredTableau, Order};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hookkron", version, about = "Kronecker coefficients of a hook and a rectangle")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Directory holding fixture files; the bundled copies are used otherwise.
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,

    /// Character cache file, read at startup and rewritten on exit.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Report wall-clock time in `elapsed_ms` (otherwise 0, so output is
    /// reproducible).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// g(λ, (n-d,1^d), ν) from the colored tableau count.
    Coeff(CoeffArgs),
    /// Full expansion of s_(mt-d,1^d) * s_(m^t).
    Decompose(DecomposeArgs),
    /// Compare the expansions at t and t + 1 over a range of t.
    Verify(VerifyArgs),
    /// Convert a colored tableau between the two orders.
    Convert(ConvertArgs),
    /// Compare tableau counts with the character oracle for every rectangle up to a size.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub nu: Partition,
    /// Also evaluate the character formula and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub t_min: usize,
    #[arg(long)]
    pub t_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Natural,
    SmallBar,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Tableau file in the text format.
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub input: Option<PathBuf>,
    /// Name of a fixture, e.g. fig5-left.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Target order; the input is read in the other one.
    #[arg(long, value_enum)]
    pub direction: Direction,
    /// Print every intermediate snapshot.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
}

#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub elapsed_ms: u64,
}

/// What a command produced, before formatting.
struct Outcome {
    inputs: Value,
    result: Value,
    text: String,
    code: i32,
}

/// A failure that stops a command: the exit code and a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Consistency(_) | Error::Conversion { .. } => EXIT_DISAGREEMENT,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cache = match &cli.cache {
        Some(path) => match CharacterCache::load(path) {
            Ok(cache) => cache,
            Err(e) => {
                let _ = writeln!(err, "error: cache {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => CharacterCache::new(),
    };

    let start = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Coeff(a) => ("coeff", coeff(a, &cache)),
        Command::Decompose(a) => ("decompose", decompose(a, &cache)),
        Command::Verify(a) => ("verify", verify(a)),
        Command::Convert(a) => ("convert", convert(a, cli.fixtures.as_deref())),
        Command::Sweep(a) => ("sweep", sweep(a, &cache)),
    };
    let elapsed_ms = if cli.timing { start.elapsed().as_millis() as u64 } else { 0 };

    let code = match outcome {
        Ok(o) => {
            let written = match cli.format {
                Format::Text => out.write_all(o.text.as_bytes()),
                Format::Json => {
                    let envelope = OutputEnvelope {
                        command: name,
                        inputs: o.inputs,
                        result: o.result,
                        elapsed_ms,
                    };
                    let json = serde_json::to_string_pretty(&envelope).expect("serializable");
                    writeln!(out, "{json}")
                }
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };

    if let Some(path) = &cli.cache {
        if let Err(e) = cache.save(path) {
            let _ = writeln!(err, "error: writing cache {}: {e}", path.display());
            return code.max(EXIT_USAGE);
        }
    }
    code
}

fn coeff(a: &CoeffArgs, cache: &CharacterCache) -> Result<Outcome, Failure> {
    let q = CoefficientQuery::new(a.lambda.clone(), a.d, a.nu.clone())?;
    let g = hook_kronecker(&q)?;
    let inputs = json!({
        "lambda": q.lambda, "d": q.d, "nu": q.nu, "hook": q.hook(), "oracle": a.oracle,
    });
    if !a.oracle {
        return Ok(Outcome { inputs, result: json!({ "g": g }), text: format!("{g}\n"), code: EXIT_OK });
    }
    let oracle = kronecker_oracle(&q.lambda, &q.hook(), &q.nu, cache)?;
    let agree = g == oracle;
    let text = format!(
        "tableaux {g}\noracle {oracle}\n{}\n",
        if agree { "agree" } else { "DISAGREE" }
    );
    Ok(Outcome {
        inputs,
        result: json!({ "g": g, "oracle": oracle, "agree": agree }),
        text,
        code: if agree { EXIT_OK } else { EXIT_DISAGREEMENT },
    })
}

fn decompose(a: &DecomposeArgs, cache: &CharacterCache) -> Result<Outcome, Failure> {
    let rect = make_rectangle(a.m, a.t).map_err(|e| usage(e.to_string()))?;
    let expansion = decompose_hook_rect(a.m, a.t, a.d)?;
    let (total, expected) = dimension_identity(&rect, a.d, &expansion, cache);
    let ok = total == expected;
    let mut text = expansion.to_text();
    text.push_str(&format!(
        "# dimension check: {total} = {expected} {}\n",
        if ok { "ok" } else { "FAILED" }
    ));
    Ok(Outcome {
        inputs: json!({
            "m": a.m, "t": a.t, "d": a.d, "lambda": rect, "hook": make_hook(a.m * a.t, a.d)?,
        }),
        result: json!({
            "expansion": expansion,
            "dimension_check": { "total": total, "expected": expected, "ok": ok },
        }),
        text,
        code: if ok { EXIT_OK } else { EXIT_DISAGREEMENT },
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    if a.m == 0 || a.t_min == 0 || a.t_min > a.t_max {
        return Err(usage("need m >= 1 and 1 <= t-min <= t-max"));
    }
    let reports: Vec<StabilityReport> = (a.t_min..=a.t_max)
        .map(|t| if t == a.d + 1 { probe_w1(a.m, a.d) } else { verify_stability(a.m, a.d, t) })
        .collect::<Result<_, _>>()?;
    let all_stable = reports
        .iter()
        .filter(|r| r.bound_satisfied)
        .all(|r| r.verdict == Verdict::Stable);
    let text = reports.iter().map(StabilityReport::to_text).collect::<Vec<_>>().join("\n");
    Ok(Outcome {
        inputs: json!({ "m": a.m, "d": a.d, "t_min": a.t_min, "t_max": a.t_max }),
        result: serde_json::to_value(&reports).expect("serializable"),
        text,
        code: if all_stable { EXIT_OK } else { EXIT_DISAGREEMENT },
    })
}

fn trace_json(trace: &ConversionTrace) -> Value {
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .enumerate()
        .map(|(k, step)| {
            let moved = k.checked_sub(1).map(|i| trace.moved_letters[i].to_string());
            json!({ "step": k, "moved": moved, "tableau": step.to_text() })
        })
        .collect();
    Value::Array(steps)
}

fn convert(a: &ConvertArgs, fixture_dir: Option<&Path>) -> Result<Outcome, Failure> {
    let (source, text) = match (&a.input, &a.fixture) {
        (Some(path), _) => (
            path.display().to_string(),
            std::fs::read_to_string(path)
                .map_err(|e| usage(format!("reading {}: {e}", path.display())))?,
        ),
        (None, Some(name)) => (name.clone(), fixtures::load(name, fixture_dir)?),
        (None, None) => return Err(usage("give --input or --fixture")),
    };
    let from = match a.direction {
        Direction::Natural => Order::SmallBar,
        Direction::SmallBar => Order::Natural,
    };
    let tableau = ColoredTableau::parse(&text, from)?;
    let (result, trace) = match a.direction {
        Direction::Natural => to_natural(&tableau),
        Direction::SmallBar => to_small_bar(&tableau),
    }?;
    let out_text = if a.trace { trace.to_text() } else { result.to_text() };
    let mut payload = json!({ "tableau": result.to_text(), "moves": trace.len() });
    if a.trace {
        payload["trace"] = trace_json(&trace);
    }
    Ok(Outcome {
        inputs: json!({
            "source": source,
            "direction": Order::from(a.direction).name(),
            "trace": a.trace,
        }),
        result: payload,
        text: out_text,
        code: EXIT_OK,
    })
}

impl From<Direction> for Order {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Natural => Order::Natural,
            Direction::SmallBar => Order::SmallBar,
        }
    }
}

#[derive(Debug, Serialize)]
struct Disagreement {
    m: usize,
    t: usize,
    d: usize,
    nu: Partition,
    tableaux: u64,
    oracle: u64,
}

fn sweep(a: &SweepArgs, cache: &CharacterCache) -> Result<Outcome, Failure> {
    let mut rectangles = Vec::new();
    for m in 1..=a.n_max {
        for t in 1..=a.n_max / m {
            rectangles.push((m, t));
        }
    }
    let jobs: Vec<(usize, usize, usize)> = rectangles
        .iter()
        .flat_map(|&(m, t)| (0..m * t).map(move |d| (m, t, d)))
        .collect();

    let per_job: Vec<Result<(usize, Vec<Disagreement>), Error>> = jobs
        .par_iter()
        .map(|&(m, t, d)| {
            let rect = make_rectangle(m, t)?;
            let hook = make_hook(m * t, d)?;
            let expansion = decompose_hook_rect(m, t, d)?;
            let mut cases = 0;
            let mut bad = Vec::new();
            for nu in partitions_of(m * t, None, None) {
                cases += 1;
                let tableaux = expansion.coefficient(&nu);
                let oracle = kronecker_oracle(&rect, &hook, &nu, cache)?;
                if tableaux != oracle {
                    bad.push(Disagreement { m, t, d, nu, tableaux, oracle });
                }
            }
            Ok((cases, bad))
        })
        .collect();

    let mut cases = 0;
    let mut disagreements = Vec::new();
    for job in per_job {
        let (n, bad) = job?;
        cases += n;
        disagreements.extend(bad);
    }

    let mut text = format!(
        "rectangles {}\ncolorings {}\ncases {cases}\ndisagreements {}\n",
        rectangles.len(),
        jobs.len(),
        disagreements.len()
    );
    for x in &disagreements {
        text.push_str(&format!(
            "DISAGREE m={} t={} d={} nu={} tableaux={} oracle={}\n",
            x.m, x.t, x.d, x.nu, x.tableaux, x.oracle
        ));
    }
    let code = if disagreements.is_empty() { EXIT_OK } else { EXIT_DISAGREEMENT };
    Ok(Outcome {
        inputs: json!({ "n_max": a.n_max }),
        result: json!({
            "rectangles": rectangles.len(),
            "colorings": jobs.len(),
            "cases": cases,
            "disagreements": disagreements,
        }),
        text,
        code,
    })
}
