//! Command-line front end.
//!
//! ```text
//! vintv merge --a 1,4,6 --b 2,4,5,8,9      # [1,2,4,4,5,6,8,9]
//! vintv trace --low -1 --high 1            # decomposition chain
//! vintv trace --algorithm insort-buggy --a 10,3,7,17,11 --machine
//! ```
//!
//! Exit status: 0 success, 1 failed selftest, 2 usage or parse error,
//! 3 domain error, 4 out-of-bounds diagnostic.

use std::fmt;
use std::fs;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::algorithms::{Algorithm, Outcome, RunInputs};
use crate::error::{Error, ErrorKind};
use crate::golden::run_reference_checks;
use crate::interval::Direction;
use crate::trace::{trace_algorithm, trace_interval, TraceEvent};
use crate::vector::VectorData;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_OUT_OF_BOUNDS: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    SumInterval,
    Avg,
    Dot,
    Merge,
    Insort,
    InsortBuggy,
    Trace,
    Selftest,
}

impl Subcommand {
    pub fn name(self) -> &'static str {
        match self {
            Subcommand::SumInterval => "sum-interval",
            Subcommand::Avg => "avg",
            Subcommand::Dot => "dot",
            Subcommand::Merge => "merge",
            Subcommand::Insort => "insort",
            Subcommand::InsortBuggy => "insort-buggy",
            Subcommand::Trace => "trace",
            Subcommand::Selftest => "selftest",
        }
    }

    fn algorithm(self) -> Option<Algorithm> {
        match self {
            Subcommand::SumInterval => Some(Algorithm::Sum),
            Subcommand::Avg => Some(Algorithm::Avg),
            Subcommand::Dot => Some(Algorithm::Dot),
            Subcommand::Merge => Some(Algorithm::Merge),
            Subcommand::Insort => Some(Algorithm::Insort),
            Subcommand::InsortBuggy => Some(Algorithm::InsortBuggy),
            Subcommand::Trace | Subcommand::Selftest => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Rl,
    Lr,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Rl => Direction::RightToLeft,
            DirectionArg::Lr => Direction::LeftToRight,
        }
    }
}

/// Raw command line.
#[derive(Debug, Parser)]
#[command(name = "vintv", version, about = "Bounds-safe vector-interval algorithms")]
pub struct Args {
    pub command: Subcommand,

    /// First vector: `1,2,3`, `[1,2,3]`, `[]`, or `@file` (one vector per line)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Second vector, same forms as --a
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub low: Option<i64>,

    #[arg(long, allow_hyphen_values = true)]
    pub high: Option<i64>,

    /// One JSON record per line instead of plain text
    #[arg(long)]
    pub machine: bool,

    /// Processing direction (sum-interval and trace only)
    #[arg(long, value_enum)]
    pub direction: Option<DirectionArg>,

    /// Algorithm to trace: sum, avg, dot, merge, insort, insort_buggy
    #[arg(long)]
    pub algorithm: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Plain,
    Machine,
}

/// A validated request: arity and flag combinations already checked.
#[derive(Debug, Clone, PartialEq)]
pub struct CliRequest {
    pub subcommand: Subcommand,
    pub vectors: Vec<VectorData>,
    pub interval_bounds: Option<(i64, i64)>,
    pub output_mode: OutputMode,
    pub direction: Direction,
    /// Only for `trace`; `None` traces the plain interval decomposition.
    pub algorithm: Option<Algorithm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based position of the offending comma-separated token.
    pub token: usize,
    /// Byte offset of that token in the input.
    pub offset: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at token {} (byte {}): {}",
            self.token, self.offset, self.reason
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parses comma-separated decimal numbers, optionally wrapped in `[ ]`.
/// An empty (or all-blank) string and `[]` both give the empty vector.
pub fn parse_vector_literal(text: &str) -> Result<VectorData, ParseError> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, base) = match (trimmed.strip_prefix('['), trimmed.ends_with(']')) {
        (Some(rest), true) => (&rest[..rest.len() - 1], lead + 1),
        (None, false) => (trimmed, lead),
        _ => {
            return Err(ParseError {
                token: 1,
                offset: lead,
                reason: "unbalanced brackets".into(),
            })
        }
    };
    if body.trim().is_empty() {
        return Ok(VectorData::default());
    }

    let mut out = Vec::new();
    let mut offset = base;
    for (k, raw) in body.split(',').enumerate() {
        let token = raw.trim();
        let err = |reason: String| ParseError {
            token: k + 1,
            offset,
            reason,
        };
        if token.is_empty() {
            return Err(err("empty element".into()));
        }
        let x: f64 = token
            .parse()
            .map_err(|_| err(format!("`{token}` is not a decimal number")))?;
        if !x.is_finite() {
            return Err(err(format!("`{token}` is not finite")));
        }
        out.push(x);
        offset += raw.len() + 1;
    }
    Ok(VectorData::new(out))
}

/// Expands `@file` to every non-blank line of the file; anything else is a
/// single literal.
fn expand_vector_arg(flag: &str, arg: &str) -> Result<Vec<VectorData>, UsageError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("--{flag}: cannot read {path}: {e}")))?;
            text.lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty())
                .map(|(n, line)| {
                    parse_vector_literal(line)
                        .map_err(|e| UsageError(format!("--{flag}: {path}:{}: {e}", n + 1)))
                })
                .collect()
        }
        None => parse_vector_literal(arg)
            .map(|v| vec![v])
            .map_err(|e| UsageError(format!("--{flag}: {e}"))),
    }
}

impl CliRequest {
    pub fn from_args(args: Args) -> Result<Self, UsageError> {
        let mut vectors = Vec::new();
        if let Some(a) = &args.a {
            vectors.extend(expand_vector_arg("a", a)?);
        }
        if let Some(b) = &args.b {
            vectors.extend(expand_vector_arg("b", b)?);
        }
        let interval_bounds = match (args.low, args.high) {
            (Some(l), Some(h)) => Some((l, h)),
            (None, None) => None,
            _ => return Err(UsageError("--low and --high must be given together".into())),
        };

        let cmd = args.command;
        if args.direction.is_some() && !matches!(cmd, Subcommand::SumInterval | Subcommand::Trace) {
            return Err(UsageError(format!(
                "--direction is not accepted by {}",
                cmd.name()
            )));
        }
        let direction = args.direction.map_or(Direction::RightToLeft, Direction::from);

        let algorithm = match (cmd, &args.algorithm) {
            (Subcommand::Trace, Some(name)) => {
                Some(name.parse::<Algorithm>().map_err(|e| UsageError(e.to_string()))?)
            }
            (Subcommand::Trace, None) => None,
            (_, Some(_)) => {
                return Err(UsageError(format!(
                    "--algorithm is not accepted by {}",
                    cmd.name()
                )))
            }
            (_, None) => cmd.algorithm(),
        };

        let (want_vectors, want_bounds) = match (cmd, algorithm) {
            (Subcommand::Selftest, _) => (0, false),
            (_, None) | (_, Some(Algorithm::Sum)) => (0, true),
            (_, Some(Algorithm::Dot | Algorithm::Merge)) => (2, false),
            (_, Some(_)) => (1, false),
        };
        if vectors.len() != want_vectors {
            return Err(UsageError(format!(
                "{} expects {want_vectors} vector(s), got {}",
                cmd.name(),
                vectors.len()
            )));
        }
        if want_bounds != interval_bounds.is_some() {
            return Err(UsageError(if want_bounds {
                format!("{} requires --low and --high", cmd.name())
            } else {
                format!("{} does not take --low/--high", cmd.name())
            }));
        }

        Ok(CliRequest {
            subcommand: cmd,
            vectors,
            interval_bounds,
            output_mode: if args.machine {
                OutputMode::Machine
            } else {
                OutputMode::Plain
            },
            direction,
            algorithm,
        })
    }

    fn inputs(&self) -> RunInputs {
        RunInputs {
            vectors: self.vectors.clone(),
            bounds: self.interval_bounds,
            direction: self.direction,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code_for(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Usage => EXIT_USAGE,
        ErrorKind::Domain => EXIT_DOMAIN,
        ErrorKind::OutOfBounds => EXIT_OUT_OF_BOUNDS,
    }
}

/// Shortest round-trip decimal.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

pub fn format_vector<T: fmt::Display>(v: &VectorData<T>) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

pub fn format_outcome(o: &Outcome) -> String {
    match o {
        Outcome::Integer(n) => n.to_string(),
        Outcome::Number(x) => format_number(*x),
        Outcome::Vector(v) => format_vector(v),
    }
}

fn outcome_json(o: &Outcome) -> Value {
    match o {
        Outcome::Integer(n) => json!(n),
        Outcome::Number(x) => json!(x),
        Outcome::Vector(v) => json!(v.as_slice()),
    }
}

fn error_name(e: &Error) -> &'static str {
    match e {
        Error::OutOfBounds(_) => "out_of_bounds",
        Error::InvalidInterval(_) => "invalid_interval",
        Error::IntervalVectorMismatch { .. } => "interval_vector_mismatch",
        Error::EmptyVector { .. } => "empty_vector",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::MissingInput { .. } => "missing_input",
    }
}

fn error_json(e: &Error) -> Value {
    let mut rec = json!({
        "record": "error",
        "error": error_name(e),
        "exit_code": exit_code_for(e.kind()),
        "message": e.to_string(),
    });
    if let Some(d) = e.oob() {
        rec["attempted_index"] = json!(d.attempted_index);
        rec["vector_length"] = json!(d.vector_length);
        rec["operation"] = json!(d.operation);
    }
    rec
}

#[derive(Default)]
struct Sink {
    stdout: String,
    stderr: String,
}

impl Sink {
    fn out(&mut self, line: impl AsRef<str>) {
        self.stdout.push_str(line.as_ref());
        self.stdout.push('\n');
    }

    fn err(&mut self, line: impl AsRef<str>) {
        self.stderr.push_str(line.as_ref());
        self.stderr.push('\n');
    }

    fn finish(self, exit_code: i32) -> CliOutput {
        CliOutput {
            exit_code,
            stdout: self.stdout,
            stderr: self.stderr,
        }
    }
}

pub fn run(req: &CliRequest) -> CliOutput {
    let machine = req.output_mode == OutputMode::Machine;
    let mut sink = Sink::default();
    let command = req.subcommand.name();

    let emit_events = |sink: &mut Sink, events: &[TraceEvent]| {
        for e in events {
            if machine {
                sink.out(e.to_json().to_string());
            } else {
                sink.out(e.to_string());
            }
        }
    };

    let outcome = match req.subcommand {
        Subcommand::Selftest => return selftest(machine),
        Subcommand::Trace => match req.algorithm {
            None => {
                let (low, high) = req.interval_bounds.expect("validated by from_args");
                emit_events(&mut sink, &trace_interval(low, high, req.direction));
                Algorithm::Sum.run(&req.inputs())
            }
            Some(alg) => {
                let run = trace_algorithm(alg, &req.inputs());
                emit_events(&mut sink, &run.events);
                run.outcome
            }
        },
        other => other
            .algorithm()
            .expect("every remaining subcommand names an algorithm")
            .run(&req.inputs()),
    };

    match outcome {
        Ok(o) => {
            if machine {
                sink.out(
                    json!({"record": "result", "command": command, "value": outcome_json(&o)}).to_string(),
                );
            } else if req.subcommand == Subcommand::Trace {
                sink.out(format!("result: {}", format_outcome(&o)));
            } else {
                sink.out(format_outcome(&o));
            }
            sink.finish(EXIT_OK)
        }
        Err(e) => {
            let code = exit_code_for(e.kind());
            if machine {
                sink.out(error_json(&e).to_string());
            } else {
                sink.err(format!("error: {e}"));
            }
            sink.finish(code)
        }
    }
}

fn selftest(machine: bool) -> CliOutput {
    let mut sink = Sink::default();
    let results = run_reference_checks();
    let passed = results.iter().filter(|r| r.passed).count();
    let failed = results.len() - passed;
    for r in &results {
        if machine {
            sink.out(
                json!({"record": "check", "label": r.label, "passed": r.passed, "got": r.got}).to_string(),
            );
        } else {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            sink.out(format!("{mark} {} (got {})", r.label, r.got));
        }
    }
    if machine {
        sink.out(json!({"record": "summary", "passed": passed, "failed": failed}).to_string());
    } else {
        sink.out(format!("{passed} passed, {failed} failed"));
    }
    sink.finish(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_SELFTEST_FAILED
    })
}

/// Parses `argv` (program name first) and runs it.
pub fn main_with_args<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return CliOutput {
                exit_code: code,
                stdout,
                stderr,
            };
        }
    };
    match CliRequest::from_args(args) {
        Ok(req) => run(&req),
        Err(e) => CliOutput {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
