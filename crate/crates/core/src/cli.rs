//! Command-line front end.
//!
//! Every command writes one JSON object per line to stdout (or CSV for
//! `scan --format csv`) and reports its outcome through a fixed exit code:
//!
//! | code | meaning                                          |
//! |------|--------------------------------------------------|
//! | 0    | success                                          |
//! | 1    | `decompose`: the integer is not representable    |
//! | 2    | invalid arguments or parameters                  |
//! | 3    | internal assertion or check failure              |
//! | 4    | limit too large                                  |
//! | 5    | `family`: member turned out representable        |

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructive::{
    decompose, decompose_constructive, general_identity_sides, identity_3b4_sides, BoundOptions,
    ConstructError, DecomposeOptions, Method,
};
use crate::oracle::{
    exception_scan_with_workers, family_audit, FamilyStatus, OracleError, Theorem,
};
use crate::polygonal::{Domain, Order, Scheme, SlotSpec};
use crate::quadforms::{excluded, r4_bruteforce, r4_formula, represent, FormDesc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REPRESENTABLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;
pub const EXIT_DISCREPANCY: i32 = 5;

/// Largest `n` accepted by `r4 --check`.
const R4_BRUTE_MAX: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "polysum",
    version,
    about = "Weighted sums of four polygonal numbers"
)]
struct Cli {
    /// Add elapsed wall-clock milliseconds to each record (output is then no
    /// longer byte-identical between runs).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write N as a weighted sum of four polygonal numbers of order m+2.
    Decompose(DecomposeArgs),
    /// List the integers up to a limit with no representation.
    Scan(ScanArgs),
    /// Audit one member of a non-representable family.
    Family(FamilyArgs),
    /// Check a polynomial identity on seeded random integers.
    Identity(IdentityArgs),
    /// r4(n) by the divisor formula, optionally against brute force.
    R4(R4Args),
    /// Representability of n by a diagonal ternary form.
    Ternary(TernaryArgs),
    /// Run the constructive path on a range of N starting at the bound.
    VerifyRange(VerifyRangeArgs),
}

#[derive(Debug, Args, Serialize)]
struct DecomposeArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, value_parser = parse_scheme)]
    #[serde(serialize_with = "display")]
    scheme: Scheme,
    #[arg(long)]
    n: u64,
    /// Use 418 m^3 instead of 1628 m^3 for scheme 1,1,2,2 with odd m.
    #[arg(long)]
    sharp_odd_bound: bool,
    /// Search exhaustively when the scheme has no guarantee for m.
    #[arg(long)]
    oracle_fallback: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args, Serialize)]
struct ScanArgs {
    /// A slot `m,coeff,domain`; give exactly four, or use --m/--scheme.
    #[arg(long = "slot", value_parser = parse_slot)]
    #[serde(skip)]
    slots: Vec<SlotSpec>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_parser = parse_scheme)]
    #[serde(serialize_with = "display_opt")]
    scheme: Option<Scheme>,
    #[arg(long, value_parser = parse_domain, default_value = "natural")]
    #[serde(serialize_with = "display")]
    domain: Domain,
    #[arg(long)]
    limit: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args, Serialize)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_theorem)]
    #[serde(serialize_with = "display")]
    theorem: Theorem,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
enum Which {
    /// (a+b)(c+d)(w^2+abx^2+cdy^2+abcdz^2) as four weighted squares.
    #[value(name = "3.5")]
    #[serde(rename = "3.5")]
    General,
    /// (3b+4)(w^2+2x^2+(b+1)y^2+2bz^2) as four weighted squares.
    #[value(name = "3.6")]
    #[serde(rename = "3.6")]
    ThreeBFour,
}

#[derive(Debug, Args, Serialize)]
struct IdentityArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
struct R4Args {
    #[arg(long)]
    n: u64,
    /// Also count representations by exhaustive search.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args, Serialize)]
struct TernaryArgs {
    #[arg(long, value_parser = parse_form)]
    #[serde(serialize_with = "display")]
    form: FormDesc,
    #[arg(long)]
    n: u64,
}

#[derive(Debug, Args, Serialize)]
struct VerifyRangeArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, value_parser = parse_scheme)]
    #[serde(serialize_with = "display")]
    scheme: Scheme,
    #[arg(long)]
    count: u64,
    /// First N to check; defaults to the bound.
    #[arg(long)]
    start: Option<u64>,
    #[arg(long)]
    sharp_odd_bound: bool,
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse()
}

fn parse_slot(s: &str) -> Result<SlotSpec, String> {
    s.parse()
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse()
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

fn parse_form(s: &str) -> Result<FormDesc, String> {
    s.parse()
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_opt<T: std::fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// One line of output.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

struct Outcome {
    code: i32,
    result: Value,
    method: &'static str,
}

impl Outcome {
    fn new(code: i32, method: &'static str, result: Value) -> Self {
        Outcome {
            code,
            result,
            method,
        }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome::new(EXIT_INVALID, "none", json!({ "error": msg.to_string() }))
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its records to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let (command, inputs, outcome, csv) = match &cli.command {
        Command::Decompose(a) => ("decompose", to_value(a), cmd_decompose(a), None),
        Command::Scan(a) => {
            let (outcome, csv) = cmd_scan(a);
            ("scan", to_value(a), outcome, csv)
        }
        Command::Family(a) => ("family", to_value(a), cmd_family(a), None),
        Command::Identity(a) => ("identity", to_value(a), cmd_identity(a), None),
        Command::R4(a) => ("r4", to_value(a), cmd_r4(a), None),
        Command::Ternary(a) => ("ternary", to_value(a), cmd_ternary(a), None),
        Command::VerifyRange(a) => ("verify-range", to_value(a), cmd_verify_range(a), None),
    };
    if outcome.code == EXIT_INVALID || outcome.code == EXIT_LIMIT {
        if let Some(msg) = outcome.result.get("error") {
            eprintln!("polysum {command}: {}", msg.as_str().unwrap_or_default());
        }
    }
    let written = match csv {
        Some(text) if outcome.code == EXIT_OK => out.write_all(text.as_bytes()),
        _ => {
            let record = OutputRecord {
                command,
                inputs,
                result: outcome.result,
                method: outcome.method,
                elapsed_ms: cli.timing.then(|| started.elapsed().as_millis()),
            };
            let line = serde_json::to_string(&record).expect("records serialize");
            writeln!(out, "{line}")
        }
    };
    if let Err(e) = written {
        eprintln!("polysum: cannot write output: {e}");
    }
    outcome.code
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("arguments serialize")
}

fn construct_error(e: ConstructError) -> Outcome {
    match e {
        ConstructError::NotRepresentable(n) => Outcome::new(
            EXIT_NOT_REPRESENTABLE,
            "oracle",
            json!({ "status": "not_representable", "n": n }),
        ),
        ConstructError::AssertionFailure(msg) => {
            Outcome::new(EXIT_CHECK_FAILED, "constructive", json!({ "error": msg }))
        }
        ConstructError::Oracle(OracleError::LimitTooLarge { .. }) => {
            Outcome::new(EXIT_LIMIT, "oracle", json!({ "error": e.to_string() }))
        }
        other => Outcome::invalid(other),
    }
}

fn cmd_decompose(a: &DecomposeArgs) -> Outcome {
    let opts = DecomposeOptions {
        bounds: BoundOptions {
            sharp_odd_bound: a.sharp_odd_bound,
        },
        oracle_fallback: a.oracle_fallback,
    };
    match decompose(a.m, a.n, a.scheme, opts) {
        Ok(d) => {
            let method = match d.method {
                Method::Constructive => "constructive",
                Method::Oracle => "oracle",
            };
            let values = d.witness.values();
            Outcome::new(
                EXIT_OK,
                method,
                json!({ "status": "representable", "witness": d.witness, "values": values, "pair": d.pair }),
            )
        }
        Err(e) => construct_error(e),
    }
}

fn scan_slots(a: &ScanArgs) -> Result<[SlotSpec; 4], String> {
    if !a.slots.is_empty() {
        if a.m.is_some() || a.scheme.is_some() {
            return Err("use either --slot or --m/--scheme, not both".into());
        }
        return <[SlotSpec; 4]>::try_from(a.slots.clone())
            .map_err(|v| format!("expected exactly 4 --slot values, got {}", v.len()));
    }
    match (a.m, a.scheme) {
        (Some(m), Some(scheme)) => {
            let order = Order::try_from(m)?;
            Ok(scheme.coeffs().map(|c| SlotSpec::new(order, c, a.domain)))
        }
        _ => Err("give four --slot values or both --m and --scheme".into()),
    }
}

fn cmd_scan(a: &ScanArgs) -> (Outcome, Option<String>) {
    let slots = match scan_slots(a) {
        Ok(s) => s,
        Err(e) => return (Outcome::invalid(e), None),
    };
    if a.workers == 0 {
        return (Outcome::invalid("--workers must be at least 1"), None);
    }
    match exception_scan_with_workers(&slots, a.limit, a.workers) {
        Ok(report) => {
            let csv = matches!(a.format, Format::Csv).then(|| {
                let mut text = String::from("n\n");
                for n in &report.exceptions {
                    text.push_str(&format!("{n}\n"));
                }
                text
            });
            let result = json!({
                "slots": report.slots,
                "exceptions": report.exceptions,
                "largest_exception": report.largest_exception,
            });
            (Outcome::new(EXIT_OK, "bitset-sumset", result), csv)
        }
        Err(e @ OracleError::LimitTooLarge { .. }) => (
            Outcome::new(
                EXIT_LIMIT,
                "bitset-sumset",
                json!({ "error": e.to_string() }),
            ),
            None,
        ),
        Err(e) => (Outcome::invalid(e), None),
    }
}

fn cmd_family(a: &FamilyArgs) -> Outcome {
    match family_audit(a.theorem, a.m, a.k) {
        Ok(v) => {
            let code = match v.status {
                FamilyStatus::NonRepresentable => EXIT_OK,
                FamilyStatus::Representable => EXIT_DISCREPANCY,
            };
            Outcome::new(code, "exhaustive", to_value(&v))
        }
        Err(e @ OracleError::LimitTooLarge { .. }) => {
            Outcome::new(EXIT_LIMIT, "exhaustive", json!({ "error": e.to_string() }))
        }
        Err(e) => Outcome::invalid(e),
    }
}

fn cmd_identity(a: &IdentityArgs) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut failures = Vec::new();
    for trial in 0..a.trials {
        let vals: [i64; 8] = std::array::from_fn(|_| rng.gen::<i32>() as i64);
        let (lhs, rhs) = match a.which {
            Which::General => general_identity_sides(
                [vals[0], vals[1], vals[2], vals[3]],
                [vals[4], vals[5], vals[6], vals[7]],
            ),
            Which::ThreeBFour => identity_3b4_sides(vals[0], [vals[1], vals[2], vals[3], vals[4]]),
        };
        if lhs != rhs && failures.len() < 10 {
            failures.push(json!({ "trial": trial, "inputs": vals }));
        }
    }
    let code = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome::new(
        code,
        "exact",
        json!({ "trials": a.trials, "holds": failures.is_empty(), "failures": failures }),
    )
}

fn cmd_r4(a: &R4Args) -> Outcome {
    if a.n == 0 {
        return Outcome::invalid("--n must be positive");
    }
    let formula = r4_formula(a.n);
    if !a.check {
        return Outcome::new(EXIT_OK, "formula", json!({ "n": a.n, "formula": formula }));
    }
    if a.n > R4_BRUTE_MAX {
        return Outcome::invalid(format!("--check supports n <= {R4_BRUTE_MAX}"));
    }
    let brute = r4_bruteforce(a.n);
    let code = if brute == formula {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome::new(
        code,
        "formula+bruteforce",
        json!({ "n": a.n, "formula": formula, "bruteforce": brute, "agree": brute == formula }),
    )
}

fn cmd_ternary(a: &TernaryArgs) -> Outcome {
    let n = a.n as u128;
    let is_excluded = excluded(a.form, n);
    let rep = represent(a.form, n);
    let (status, code) = match (&rep, is_excluded) {
        (Some(r), false) if a.form.eval(*r) == n as i128 => ("represented", EXIT_OK),
        (None, true) => ("excluded", EXIT_OK),
        _ => ("inconsistent", EXIT_CHECK_FAILED),
    };
    Outcome::new(
        code,
        "search",
        json!({ "status": status, "excluded": is_excluded, "representation": rep }),
    )
}

fn cmd_verify_range(a: &VerifyRangeArgs) -> Outcome {
    if !a.scheme.applicable(a.m) {
        return Outcome::invalid(ConstructError::InvalidScheme {
            scheme: a.scheme,
            m: a.m,
        });
    }
    let bounds = BoundOptions {
        sharp_odd_bound: a.sharp_odd_bound,
    };
    let bound = a.scheme.bound(a.m, a.sharp_odd_bound);
    let Ok(bound) = u64::try_from(bound) else {
        return Outcome::invalid("bound exceeds the supported range");
    };
    let start = a.start.unwrap_or(bound);
    if start < bound {
        return Outcome::invalid(format!("--start {start} is below the bound {bound}"));
    }
    let Some(end) = start.checked_add(a.count) else {
        return Outcome::invalid("range overflows");
    };
    let mut failures = Vec::new();
    for n in start..end {
        if let Err(e) = decompose_constructive(a.m, n, a.scheme, bounds) {
            if failures.len() < 10 {
                failures.push(json!({ "n": n, "error": e.to_string() }));
            }
        }
    }
    let code = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome::new(
        code,
        "constructive",
        json!({ "bound": bound, "start": start, "count": a.count, "all_verified": failures.is_empty(), "failures": failures }),
    )
}
