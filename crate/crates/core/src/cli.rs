//! Command-line driver.
//!
//! Claim parameters are passed as `--<name> <value>` after the fixed flags;
//! any `--flag` the subcommand does not define is treated as a parameter.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::check::{CheckResult, ParamValue, Params};
use crate::error::{Error, Result};
use crate::harness::{
    self, all_claims, lookup, report, ClaimDescriptor, ClaimKind, Destination, ParamDomain,
    ParamSet, ParamType, ReportFormat, ReportOptions, ScanConfig, ScanReport,
};
use crate::par;
use crate::sequences::{build_table, Method, SequenceKind};

pub const PARALLEL_ENV: &str = "APERY_CONG_PARALLEL";

#[derive(Parser, Debug)]
#[command(
    name = "apery-cong",
    version,
    about = "Exact checks of Apéry and Delannoy congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Jsonl => ReportFormat::Jsonl,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Seq {
    Apery,
    Delannoy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    DefiningSum,
    Recurrence,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a table of A_n or D_n for 0 ≤ n ≤ max.
    Sequence {
        #[arg(value_enum)]
        kind: Seq,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "defining-sum")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one claim at one parameter tuple, e.g. `verify --claim thm1.3b --p 5`.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan claims over parameter ranges, e.g. `scan --claim thm1.1a --n 1..150 --r 0..4`.
    Scan {
        /// claim to scan; repeat for several
        #[arg(long)]
        claim: Vec<String>,
        /// scan every registered claim over its default space
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// worker threads
        #[arg(long, env = PARALLEL_ENV)]
        parallel: Option<usize>,
        /// maximum counterexamples kept per claim
        #[arg(long, default_value_t = harness::DEFAULT_COUNTEREXAMPLE_CAP)]
        cap: usize,
        /// maximum tuples per claim
        #[arg(long, default_value_t = harness::DEFAULT_TUPLE_CAP)]
        max_tuples: u128,
        /// emit every checked tuple, not only counterexamples
        #[arg(long)]
        records: bool,
        /// include elapsed time in summaries
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered claim ids with kind and parameters.
    ListClaims,
}

/// Runs the CLI and returns the process exit code: 0 all passed, 1 a claim
/// failed, 2 usage or input error.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<String> = args
        .into_iter()
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    let (fixed, raw_params) = split_params(&args);
    let cli = match Cli::try_parse_from(&fixed) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match execute(cli.command, raw_params) {
        Ok(code) => code,
        // reader went away (e.g. `| head`)
        Err(Error::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_falsification() {
                1
            } else {
                2
            }
        }
    }
}

/// Separates `--name value` pairs the subcommand does not define.
fn split_params(args: &[String]) -> (Vec<String>, Vec<(String, String)>) {
    let cmd = Cli::command();
    let sub = args
        .iter()
        .skip(1)
        .find(|a| !a.starts_with('-'))
        .and_then(|name| cmd.find_subcommand(name));
    let Some(sub) = sub else {
        return (args.to_vec(), Vec::new());
    };
    let known: Vec<String> = sub
        .get_arguments()
        .filter_map(|a| a.get_long().map(str::to_string))
        .chain(["help".to_string()])
        .collect();

    let mut fixed = Vec::new();
    let mut params = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = &args[i];
        if let Some(body) = a.strip_prefix("--").filter(|b| !b.is_empty()) {
            let (name, inline) = match body.split_once('=') {
                Some((n, v)) => (n, Some(v.to_string())),
                None => (body, None),
            };
            if !known.iter().any(|k| k == name) {
                let value = match inline {
                    Some(v) => Some(v),
                    None if i + 1 < args.len() => {
                        i += 1;
                        Some(args[i].clone())
                    }
                    None => None,
                };
                match value {
                    Some(v) => params.push((name.to_string(), v)),
                    // let clap report the dangling flag
                    None => fixed.push(a.clone()),
                }
                i += 1;
                continue;
            }
        }
        fixed.push(a.clone());
        i += 1;
    }
    (fixed, params)
}

fn destination(out: Option<PathBuf>) -> Destination {
    out.map_or(Destination::Stdout, Destination::File)
}

fn parse_list(name: &str, s: &str) -> Result<Vec<i64>> {
    let body = s.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body);
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| {
                Error::BadParams(format!("`{name}` expects a list like 3,3, got `{s}`"))
            })
        })
        .collect()
}

fn execute(cmd: Command, raw: Vec<(String, String)>) -> Result<i32> {
    match cmd {
        Command::Sequence {
            kind,
            max,
            method,
            format,
            out,
        } => {
            no_params(&raw)?;
            let kind = match kind {
                Seq::Apery => SequenceKind::Apery,
                Seq::Delannoy => SequenceKind::Delannoy,
            };
            let method = match method {
                MethodArg::DefiningSum => Method::DefiningSum,
                MethodArg::Recurrence => Method::RecurrenceOracle,
            };
            let table = build_table(kind, max, method)?;
            report::with_destination(&destination(out), |w| match format {
                Format::Csv => table.write_csv(w),
                Format::Jsonl => table.write_jsonl(w),
            })?;
            Ok(0)
        }
        Command::Verify { claim, format, out } => {
            let info = lookup(&claim)?;
            let mut params = Params::new();
            for sig in info.params {
                let v = raw.iter().find(|(n, _)| n == sig.name).map(|(_, v)| v);
                let Some(v) = v else {
                    return Err(Error::BadParams(format!(
                        "{claim} needs --{} (parameters: {})",
                        sig.name,
                        info.param_names().join(", ")
                    )));
                };
                let value = match sig.ty {
                    ParamType::List => ParamValue::List(parse_list(sig.name, v)?),
                    ParamType::Int => ParamValue::Int(v.trim().parse().map_err(|_| {
                        Error::BadParams(format!("--{} expects an integer, got `{v}`", sig.name))
                    })?),
                };
                params.0.push((sig.name.to_string(), value));
            }
            unknown_params(&claim, info.param_names(), &raw)?;
            let result = info.evaluate(&params)?;
            harness::write_checks(
                std::slice::from_ref(&result),
                format.into(),
                &destination(out),
            )?;
            Ok(verdict_for_check(info.kind, &result))
        }
        Command::Scan {
            claim,
            all,
            parallel,
            cap,
            max_tuples,
            records,
            timing,
            format,
            out,
        } => {
            let descs: Vec<ClaimDescriptor> = if all {
                no_params(&raw)?;
                all_claims()
                    .iter()
                    .map(|c| ClaimDescriptor::default_for(c.id))
                    .collect::<Result<_>>()?
            } else {
                if claim.is_empty() {
                    return Err(Error::BadParams("scan needs --claim ID or --all".into()));
                }
                claim
                    .iter()
                    .map(|id| scan_descriptor(id, &raw, claim.len() > 1))
                    .collect::<Result<_>>()?
            };
            let parallelism = match parallel {
                Some(0) => return Err(Error::BadParams("--parallel must be ≥ 1".into())),
                Some(p) => p,
                None => par::available_threads(),
            };
            let cfg = ScanConfig {
                parallelism,
                counterexample_cap: cap,
                tuple_cap: max_tuples,
                keep_all: records,
            };
            let reports = descs
                .iter()
                .map(|d| harness::scan_claim_with(d, &cfg))
                .collect::<Result<Vec<_>>>()?;
            harness::write_report(
                &reports,
                format.into(),
                &destination(out),
                ReportOptions {
                    include_timing: timing,
                },
            )?;
            Ok(verdict_for_scans(&reports))
        }
        Command::ListClaims => {
            no_params(&raw)?;
            for c in all_claims() {
                println!(
                    "{}\t{}\t{}\t{}",
                    c.id,
                    c.kind,
                    c.param_names().join(","),
                    c.summary
                );
            }
            Ok(0)
        }
    }
}

fn no_params(raw: &[(String, String)]) -> Result<()> {
    match raw.first() {
        Some((n, _)) => Err(Error::BadParams(format!("unexpected argument --{n}"))),
        None => Ok(()),
    }
}

fn unknown_params(claim: &str, names: Vec<&str>, raw: &[(String, String)]) -> Result<()> {
    match raw.iter().find(|(n, _)| !names.contains(&n.as_str())) {
        Some((n, _)) => Err(Error::BadParams(format!(
            "{claim} has no parameter `{n}` (parameters: {})",
            names.join(", ")
        ))),
        None => Ok(()),
    }
}

/// With several claims in one scan, parameters a claim lacks are skipped.
fn scan_descriptor(id: &str, raw: &[(String, String)], lenient: bool) -> Result<ClaimDescriptor> {
    let info = lookup(id)?;
    if !lenient {
        unknown_params(id, info.param_names(), raw)?;
    }
    let mut overrides = Vec::new();
    for (name, v) in raw {
        let dom = match info.param_type(name) {
            None => continue,
            Some(ParamType::List) => ParamDomain::FixedList(parse_list(name, v)?),
            Some(ParamType::Int) => ParamDomain::Scalar(ParamSet::parse(v)?),
        };
        overrides.push((name.clone(), dom));
    }
    ClaimDescriptor::with_overrides(id, overrides)
}

fn verdict_for_check(kind: ClaimKind, r: &CheckResult) -> i32 {
    if r.pass {
        return 0;
    }
    match kind {
        ClaimKind::Conjecture => eprintln!(
            "counterexample: conjecture {} fails at {}",
            r.claim_id,
            r.params.to_kv_string()
        ),
        _ => eprintln!(
            "FAILED: {} {} fails at {} (implementation defect)",
            kind,
            r.claim_id,
            r.params.to_kv_string()
        ),
    }
    1
}

fn verdict_for_scans(reports: &[ScanReport]) -> i32 {
    let mut code = 0;
    for rep in reports.iter().filter(|r| !r.pass()) {
        code = 1;
        if rep.is_fatal() {
            eprintln!(
                "FAILED: {} {} has {} failing tuples of {} (implementation defect)",
                rep.kind, rep.claim_id, rep.failed, rep.total
            );
        } else {
            eprintln!(
                "counterexample: conjecture {} has {} counterexamples of {}",
                rep.claim_id, rep.failed, rep.total
            );
        }
    }
    code
}
