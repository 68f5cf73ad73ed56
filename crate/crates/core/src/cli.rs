//! `monorec` command-line interface.
//!
//! Every subcommand prints JSON with sorted keys and a top-level
//! `"schema": 1`. Exit codes: 0 on success, 2 on invalid input, 1 when a
//! decision procedure disagrees with its oracle window or output fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::decisions::{self, Verdict};
use crate::format::{significant, REPORT_DIGITS};
use crate::numtheory::{boundary_characterization, enumerate_generalized_fibonacci, is_quadratic_pisot, IntCoeffPair};
use crate::oracle::{self, WindowReport};
use crate::qfield::{order_by_modulus, Quad};
use crate::recurrence::{exceptional_zero, iterate, ratio_limit, RatioLimit};
use crate::regions::{rasterize, RegionId};
use crate::riccati::riccati_orbit;
use crate::{Error, Rational, RecurrenceSpec};

const SCHEMA: u32 = 1;
/// Leading distances, residuals and Riccati states shown in a report.
const PREFIX_LEN: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "monorec", version, about = "Monotone properties of second-order linear recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide properties 1-3 and cross-check them on an exact window.
    Analyze(AnalyzeArgs),
    /// Print a_0..=a_n exactly.
    Sequence(SequenceArgs),
    /// Irreducible integer recurrences inside the coefficient domain.
    Enumerate(EnumerateArgs),
    /// Rasterize a domain to PGM or CSV.
    Regions(RegionsArgs),
    /// Orbit of the induced Riccati map.
    Riccati(RiccatiArgs),
    /// Irreducible integer points on the boundary of the coefficient domain.
    Characterize(CharacterizeArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("init").required(true).args(["h_init", "v0"])))]
struct SpecArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    a: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    b: Rational,
    /// h-type initial values a_{-1} = 0, a_0 = C.
    #[arg(long, value_name = "C", allow_hyphen_values = true, value_parser = parse_rational, conflicts_with_all = ["v0", "v1"])]
    h_init: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "v1")]
    v0: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "v0")]
    v1: Option<Rational>,
}

impl SpecArgs {
    fn build(&self) -> Result<RecurrenceSpec, Error> {
        match (&self.h_init, &self.v0, &self.v1) {
            (Some(c), _, _) => RecurrenceSpec::h_type(self.a.clone(), self.b.clone(), c.clone()),
            (None, Some(v0), Some(v1)) => RecurrenceSpec::new(self.a.clone(), self.b.clone(), v0.clone(), v1.clone()),
            _ => Err(Error::InvalidArgument("give --h-init or both --v0 and --v1".into())),
        }
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    window: u64,
    #[arg(long, default_value_t = 0)]
    from_k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SequenceArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
    a_max: i64,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
}

#[derive(Debug, Args)]
struct RegionsArgs {
    #[arg(long, value_parser = parse_region)]
    region: RegionId,
    /// x0,x1,y0,y1 as rationals.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bbox)]
    bbox: (Rational, Rational, Rational, Rational),
    #[arg(long)]
    res: usize,
    /// Output file; `.csv` selects CSV, anything else PGM.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct RiccatiArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    a: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    b: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    b0: Rational,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct CharacterizeArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(i64).range(1..=10_000_000))]
    scan_bound: i64,
}

/// Strict rational syntax: optional sign, digits, optional `/digits`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    let (num, den) = body.split_once('/').unwrap_or((body, "1"));
    if !digits(num) || !digits(den) {
        return Err(format!("{s:?} is not a rational of the form p or p/q"));
    }
    let den: BigInt = den.parse().expect("digits");
    if den.is_zero() {
        return Err(format!("{s:?} has a zero denominator"));
    }
    let mut num: BigInt = num.parse().expect("digits");
    if s.starts_with('-') {
        num = -num;
    }
    Ok(Rational::new(num, den))
}

fn parse_region(s: &str) -> Result<RegionId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bbox(s: &str) -> Result<(Rational, Rational, Rational, Rational), String> {
    let parts = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    match <[Rational; 4]>::try_from(parts) {
        Ok([x0, x1, y0, y1]) => Ok((x0, x1, y0, y1)),
        Err(_) => Err(format!("{s:?} must be x0,x1,y0,y1")),
    }
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Inconsistent(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => Failure::Inconsistent(m),
            e => Failure::Invalid(e.to_string()),
        }
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => analyze(&args),
        Command::Sequence(args) => sequence(&args),
        Command::Enumerate(args) => Ok(enumerate(&args)),
        Command::Regions(args) => regions(&args),
        Command::Riccati(args) => riccati(&args),
        Command::Characterize(args) => Ok(characterize(&args)),
    };
    match outcome {
        Ok(text) => {
            if text.is_empty() {
                return 0;
            }
            // a closed pipe (e.g. `| head`) is not an error of ours
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("i/o error: {e}");
                    1
                }
                _ => 0,
            }
        }
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Inconsistent(m)) => {
            eprintln!("inconsistency: {m}");
            1
        }
        Err(Failure::Io(m)) => {
            eprintln!("i/o error: {m}");
            1
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn exact_rational(x: &Rational) -> Value {
    json!({ "exact": x.to_string(), "decimal": significant(crate::Scalar::to_f64_lossy(x), REPORT_DIGITS) })
}

fn exact_quad(x: &Quad<Rational>) -> Value {
    json!({ "exact": x.to_string(), "decimal": significant(x.to_f64(), REPORT_DIGITS) })
}

fn spec_echo(spec: &RecurrenceSpec) -> Value {
    json!({
        "a": spec.a().to_string(),
        "b": spec.b().to_string(),
        "v0": spec.v0().to_string(),
        "v1": spec.v1().to_string(),
        "h_type": spec.is_h_type(),
    })
}

fn root_data(spec: &RecurrenceSpec) -> Value {
    let roots = spec.roots();
    let sign = match roots.discriminant_sign() {
        std::cmp::Ordering::Less => "negative",
        std::cmp::Ordering::Equal => "zero",
        std::cmp::Ordering::Greater => "positive",
    };
    let mut v = json!({
        "discriminant": exact_rational(roots.discriminant()),
        "discriminant_sign": sign,
        "real": roots.is_real(),
    });
    match order_by_modulus(&roots) {
        Ok((alpha, beta)) => {
            v["alpha"] = exact_quad(&alpha);
            v["beta"] = exact_quad(&beta);
        }
        Err(_) => {
            let m = roots.modulus_squared().expect("complex roots");
            v["modulus_squared"] = exact_rational(m);
            v["real_part"] = exact_rational(&(spec.a().clone() / Rational::from_integer(2.into())));
        }
    }
    v
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Agreement {
    Consistent,
    Inconclusive,
}

impl Agreement {
    fn as_str(self) -> &'static str {
        match self {
            Agreement::Consistent => "consistent",
            Agreement::Inconclusive => "inconclusive",
        }
    }
}

/// Cross-check of a verdict claimed for every index against an exact window.
fn check_everywhere(name: &str, verdict: Verdict, window: &WindowReport) -> Result<Agreement, Failure> {
    match (verdict.holds, window.holds_on_window) {
        (true, true) | (false, false) => Ok(Agreement::Consistent),
        (false, true) if verdict.branch.is_asymptotic() => Ok(Agreement::Inconclusive),
        (true, false) => Err(Failure::Inconsistent(format!(
            "{name}: verdict {} holds but the window fails at n = {:?}",
            verdict.branch, window.first_violation
        ))),
        (false, true) => Err(Failure::Inconsistent(format!(
            "{name}: verdict {} fails but the window {:?} is clean",
            verdict.branch, window.checked_range
        ))),
    }
}

/// An eventual verdict can only be corroborated by a tail witness.
fn check_eventual(verdict: Verdict, witness: Option<usize>) -> Agreement {
    if verdict.holds == witness.is_some() {
        Agreement::Consistent
    } else {
        Agreement::Inconclusive
    }
}

fn checked(verdict: Verdict, agreement: Agreement) -> Value {
    json!({ "holds": verdict.holds, "branch": verdict.branch, "oracle": agreement.as_str() })
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn analyze(args: &AnalyzeArgs) -> Result<String, Failure> {
    let spec = args.spec.build()?;
    let n = args.window as usize;
    let k = args.from_k;

    // Property 1
    let p1_win0 = oracle::check_p1_window(&spec, 0, n);
    let immediate = decisions::nondecreasing_from(&spec, 0);
    let immediate_ok = check_everywhere("p1 immediate", immediate, &p1_win0)?;
    let p1_wink = oracle::check_p1_window(&spec, k, k + n);
    let from_k = decisions::nondecreasing_from(&spec, k);
    let from_k_ok = check_everywhere("p1 from_k", from_k, &p1_wink)?;
    let eventual = decisions::eventually_nondecreasing(&spec);
    let n0 = oracle::find_n0(&spec, n);
    let mut p1 = json!({
        "immediate": checked(immediate, immediate_ok),
        "from_k": { "k": k, "verdict": checked(from_k, from_k_ok), "window": to_json(&p1_wink) },
        "eventual": checked(eventual, check_eventual(eventual, n0)),
        "n0_witness": n0,
        "window": to_json(&p1_win0),
        "h_type": Value::Null,
    });
    if spec.is_h_type() {
        let v = decisions::positive_monotone_h(&spec)?;
        p1["h_type"] = checked(v, check_everywhere("p1 h-type", v, &p1_win0)?);
    }

    // Property 2
    let mut p2 =
        json!({ "h_type": Value::Null, "eventual": Value::Null, "window": Value::Null, "distances": Value::Null });
    let p2_window = oracle::check_p2_window(&spec, n).ok();
    if let Some(w) = &p2_window {
        p2["window"] = to_json(w);
        let d = oracle::p2_distances(&spec, PREFIX_LEN)?;
        p2["distances"] = d.iter().map(|x| x.as_ref().map_or(Value::Null, exact_quad)).collect();
    }
    if spec.is_h_type() {
        let v = decisions::ratio_monotone_h(&spec)?;
        p2["h_type"] = match &p2_window {
            Some(w) => checked(v, check_everywhere("p2 h-type", v, w)?),
            None => json!({ "holds": v.holds, "branch": v.branch, "oracle": "not_applicable" }),
        };
    }
    if let Ok(v) = decisions::eventually_ratio_monotone(&spec) {
        p2["eventual"] = match p2_window {
            Some(_) => checked(v, check_eventual(v, oracle::find_p2_n0(&spec, n))),
            None => json!({ "holds": v.holds, "branch": v.branch, "oracle": "not_applicable" }),
        };
    }

    // Property 3
    let p3_win = oracle::check_p3_window(&spec, n);
    let p3_verdict = decisions::weighted_monotone(&spec);
    let mut p3 = json!({
        "verdict": checked(p3_verdict, check_everywhere("p3", p3_verdict, &p3_win)?),
        "window": to_json(&p3_win),
        "residuals": Value::Null,
    });
    if let Ok(r) = oracle::p3_residuals(&spec, PREFIX_LEN) {
        p3["residuals"] = r.iter().map(exact_quad).collect();
    }

    let ratio = match ratio_limit(&spec) {
        Ok(RatioLimit::Converges { limit, root }) => {
            json!({ "converges": true, "limit": exact_quad(&limit), "root": to_json(&root) })
        }
        Ok(RatioLimit::Diverges) => json!({ "converges": false }),
        Err(e) => json!({ "undefined": e.to_string() }),
    };
    let zero = match exceptional_zero(&spec) {
        Ok(index) => json!({ "index": index }),
        Err(e) => json!({ "undefined": e.to_string() }),
    };
    let riccati = if spec.v0().is_zero() || spec.v1().is_zero() {
        Value::Null
    } else {
        let b0 = spec.v1().clone() / spec.v0().clone();
        let orbit = riccati_orbit(spec.a().clone(), spec.b().clone(), b0, PREFIX_LEN)?;
        json!({
            "states": orbit.states.iter().map(exact_rational).collect::<Vec<_>>(),
            "terminated_early": orbit.terminated_early,
        })
    };

    let report = json!({
        "schema": SCHEMA,
        "command": "analyze",
        "spec": spec_echo(&spec),
        "roots": root_data(&spec),
        "window": n,
        "properties": { "p1": p1, "p2": p2, "p3": p3 },
        "ratio_limit": ratio,
        "hartman_aurel": decisions::hartman_aurel_sufficient(spec.a(), spec.b()),
        "exceptional_zero": zero,
        "riccati_prefix": riccati,
    });
    let text = pretty(&report);
    match &args.out {
        Some(path) => std::fs::write(path, text + "\n").map(|_| String::new()).map_err(|e| Failure::Io(e.to_string())),
        None => Ok(text),
    }
}

fn sequence(args: &SequenceArgs) -> Result<String, Failure> {
    let spec = args.spec.build()?;
    let terms = iterate(&spec, args.n).terms;
    Ok(match args.format {
        OutFormat::Json => pretty(&json!({
            "schema": SCHEMA,
            "command": "sequence",
            "spec": spec_echo(&spec),
            "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        })),
        OutFormat::Csv => {
            let mut out = String::from("n,term");
            for (i, t) in terms.iter().enumerate() {
                out.push_str(&format!("\n{i},{t}"));
            }
            out
        }
    })
}

/// `a_{n+2} = a a_{n+1} + c a_n` with signs folded into the operators.
fn render_recurrence(p: IntCoeffPair) -> String {
    let c = p.additive_c();
    let op = if c < 0 { '-' } else { '+' };
    format!("a_{{n+2}} = {} a_{{n+1}} {op} {} a_n", p.a, c.abs())
}

fn enumerate(args: &EnumerateArgs) -> String {
    let pairs = enumerate_generalized_fibonacci(args.a_max);
    match args.format {
        OutFormat::Json => pretty(&json!({
            "schema": SCHEMA,
            "command": "enumerate",
            "a_max": args.a_max,
            "pairs": pairs.iter().map(|p| json!({
                "a": p.a,
                "b": p.b,
                "c": p.additive_c(),
                "recurrence": render_recurrence(*p),
                "pisot": is_quadratic_pisot(*p),
            })).collect::<Vec<_>>(),
        })),
        OutFormat::Csv => {
            let mut out = String::from("a,b,c");
            for p in &pairs {
                out.push_str(&format!("\n{},{},{}", p.a, p.b, p.additive_c()));
            }
            out
        }
    }
}

fn regions(args: &RegionsArgs) -> Result<String, Failure> {
    let grid = rasterize(args.region, args.bbox.clone(), args.res)?;
    grid.write(&args.out).map_err(|e| Failure::Io(format!("{}: {e}", args.out.display())))?;
    let csv = args.out.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    Ok(pretty(&json!({
        "schema": SCHEMA,
        "command": "regions",
        "region": args.region,
        "resolution": args.res,
        "members": grid.member_count(),
        "format": if csv { "csv" } else { "pgm" },
        "path": args.out.display().to_string(),
    })))
}

fn riccati(args: &RiccatiArgs) -> Result<String, Failure> {
    let orbit = riccati_orbit(args.a.clone(), args.b.clone(), args.b0.clone(), args.n)?;
    Ok(pretty(&json!({
        "schema": SCHEMA,
        "command": "riccati",
        "a": orbit.a.to_string(),
        "b": orbit.b.to_string(),
        "states": orbit.states.iter().map(exact_rational).collect::<Vec<_>>(),
        "terminated_early": orbit.terminated_early,
    })))
}

fn characterize(args: &CharacterizeArgs) -> String {
    let pairs = boundary_characterization(args.scan_bound);
    pretty(&json!({
        "schema": SCHEMA,
        "command": "characterize",
        "scan_bound": args.scan_bound,
        "pairs": pairs.iter().map(|p| [p.a, p.b]).collect::<Vec<_>>(),
    }))
}
