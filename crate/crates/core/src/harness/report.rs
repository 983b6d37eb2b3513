//! JSONL and CSV serialization of check results and scan reports.
//!
//! Big integers and polynomials are always rendered as strings.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::ScanReport;
use crate::check::{CheckResult, ParamValue, Params};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::BadParams(format!(
                "unknown format `{s}` (jsonl|csv)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// add `elapsed_ms` to scan summaries
    pub include_timing: bool,
}

fn params_json(p: &Params) -> Value {
    let mut m = Map::new();
    for (k, v) in &p.0 {
        let v = match v {
            ParamValue::Int(i) => json!(i),
            ParamValue::List(xs) => json!(xs),
        };
        m.insert(k.clone(), v);
    }
    Value::Object(m)
}

pub fn check_json(r: &CheckResult) -> Value {
    json!({
        "claim": r.claim_id,
        "params": params_json(&r.params),
        "modulus": r.modulus.to_string(),
        "lhs": r.lhs.to_string(),
        "residue": r.residue.to_string(),
        "expected": r.expected.to_string(),
        "pass": r.pass,
    })
}

pub fn scan_json(rep: &ScanReport, opts: ReportOptions) -> Value {
    let mut m = Map::new();
    m.insert("claim".into(), json!(rep.claim_id));
    m.insert("kind".into(), json!(rep.kind.as_str()));
    m.insert("total".into(), json!(rep.total));
    m.insert("passed".into(), json!(rep.passed));
    m.insert("failed".into(), json!(rep.failed));
    m.insert("pass".into(), json!(rep.pass()));
    m.insert(
        "counterexamples".into(),
        Value::Array(rep.counterexamples.iter().map(check_json).collect()),
    );
    if opts.include_timing {
        m.insert("elapsed_ms".into(), json!(rep.elapsed.as_secs_f64() * 1e3));
    }
    m.insert("engine_version".into(), json!(rep.engine_version));
    Value::Object(m)
}

const CSV_HEADER: [&str; 7] = [
    "claim", "params", "modulus", "lhs", "residue", "expected", "pass",
];

fn csv_row(r: &CheckResult) -> [String; 7] {
    [
        r.claim_id.clone(),
        r.params.to_kv_string(),
        r.modulus.to_string(),
        r.lhs.to_string(),
        r.residue.to_string(),
        r.expected.to_string(),
        r.pass.to_string(),
    ]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_csv_rows<'a, W: Write + ?Sized>(
    out: &mut W,
    rows: impl Iterator<Item = &'a CheckResult>,
) -> io::Result<()> {
    writeln!(out, "{}", CSV_HEADER.join(","))?;
    for r in rows {
        let fields: Vec<String> = csv_row(r).iter().map(|f| csv_field(f)).collect();
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

/// Scan reports to `out`. JSONL emits the per-tuple records first when the
/// scan kept them, then one summary line per report. CSV emits one row per
/// kept result, or per counterexample otherwise.
pub fn render_reports<W: Write + ?Sized>(
    out: &mut W,
    reports: &[ScanReport],
    format: ReportFormat,
    opts: ReportOptions,
) -> io::Result<()> {
    if reports.is_empty() {
        return Ok(());
    }
    match format {
        ReportFormat::Jsonl => {
            for rep in reports {
                for r in &rep.results {
                    writeln!(out, "{}", check_json(r))?;
                }
                writeln!(out, "{}", scan_json(rep, opts))?;
            }
        }
        ReportFormat::Csv => {
            let rows = reports.iter().flat_map(|rep| {
                if rep.results.is_empty() {
                    rep.counterexamples.iter()
                } else {
                    rep.results.iter()
                }
            });
            write_csv_rows(out, rows)?;
        }
    }
    Ok(())
}

pub fn render_checks<W: Write + ?Sized>(
    out: &mut W,
    checks: &[CheckResult],
    format: ReportFormat,
) -> io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for r in checks {
                writeln!(out, "{}", check_json(r))?;
            }
            Ok(())
        }
        ReportFormat::Csv => write_csv_rows(out, checks.iter()),
    }
}

pub fn with_destination(
    dest: &Destination,
    f: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<()> {
    match dest {
        Destination::Stdout => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)
                .and_then(|_| lock.flush())
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
        Destination::File(path) => {
            let io_err = |source| Error::Io {
                path: path.clone(),
                source,
            };
            let file = File::create(path).map_err(io_err)?;
            let mut w = BufWriter::new(file);
            f(&mut w).and_then(|_| w.flush()).map_err(io_err)
        }
    }
}

pub fn write_report(
    reports: &[ScanReport],
    format: ReportFormat,
    dest: &Destination,
    opts: ReportOptions,
) -> Result<()> {
    with_destination(dest, |w| render_reports(w, reports, format, opts))
}

pub fn write_checks(
    checks: &[CheckResult],
    format: ReportFormat,
    dest: &Destination,
) -> Result<()> {
    with_destination(dest, |w| render_checks(w, checks, format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::CheckResult;
    use crate::exact::int;
    use crate::harness::ClaimKind;
    use std::time::Duration;

    fn report(fails: usize) -> ScanReport {
        let bad = |n: i64| {
            CheckResult::congruence("x", Params::new().with("n", n), int(3), int(4), int(1))
        };
        ScanReport {
            claim_id: "x".into(),
            kind: ClaimKind::Conjecture,
            total: 5,
            passed: 5 - fails as u64,
            failed: fails as u64,
            counterexamples: (0..fails as i64).map(bad).collect(),
            results: Vec::new(),
            elapsed: Duration::from_millis(3),
            engine_version: "0".into(),
        }
    }

    fn render(reports: &[ScanReport], f: ReportFormat) -> String {
        let mut buf = Vec::new();
        render_reports(&mut buf, reports, f, ReportOptions::default()).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn record_schema() {
        let r = CheckResult::congruence(
            "thm1.3b",
            Params::new().with("p", 5),
            int(24562625),
            int(31250),
            int(125),
        );
        assert_eq!(
            check_json(&r).to_string(),
            r#"{"claim":"thm1.3b","params":{"p":5},"modulus":"31250","lhs":"24562625","residue":"125","expected":"125","pass":true}"#
        );
    }

    #[test]
    fn summary_lines() {
        let out = render(&[report(0)], ReportFormat::Jsonl);
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains(r#""pass":true"#));
        assert!(!out.contains("elapsed"));

        let out = render(&[report(2)], ReportFormat::Jsonl);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["counterexamples"].as_array().unwrap().len(), 2);
        assert_eq!(v["pass"], json!(false));

        assert_eq!(render(&[], ReportFormat::Jsonl), "");
        assert_eq!(render(&[], ReportFormat::Csv), "");
    }

    #[test]
    fn csv_rows() {
        let out = render(&[report(2)], ReportFormat::Csv);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "claim,params,modulus,lhs,residue,expected,pass");
        assert_eq!(lines[1], "x,n=0,4,3,3,1,false");
        assert_eq!(lines.len(), 3);
        assert_eq!(csv_field("a=[1,2]"), "\"a=[1,2]\"");
    }

    #[test]
    fn io_errors_carry_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("out.jsonl");
        let err = write_report(
            &[report(0)],
            ReportFormat::Jsonl,
            &Destination::File(path.clone()),
            ReportOptions::default(),
        )
        .unwrap_err();
        match err {
            Error::Io { path: p, .. } => assert_eq!(p, path),
            e => panic!("unexpected {e:?}"),
        }
    }
}
