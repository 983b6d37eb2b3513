//! Range-driven scanning of registered claims.

mod registry;
pub mod report;
pub mod sample;
pub mod space;

use std::time::{Duration, Instant};

pub use registry::{all_claims, lookup, ClaimInfo, ClaimKind, ParamSig, ParamType};
pub use report::{write_checks, write_report, Destination, ReportFormat, ReportOptions};
pub use space::{Bound, ParamDomain, ParamSet, ParamSpace};

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::par;

pub const DEFAULT_TUPLE_CAP: u128 = 10_000_000;
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

/// A claim and the tuples to check it on.
#[derive(Debug, Clone)]
pub struct ClaimDescriptor {
    pub claim_id: String,
    pub space: ParamSpace,
}

impl ClaimDescriptor {
    /// The registry's default (acceptance) space for `claim_id`.
    pub fn default_for(claim_id: &str) -> Result<Self> {
        let info = lookup(claim_id)?;
        Ok(ClaimDescriptor {
            claim_id: claim_id.to_string(),
            space: info.default_space(),
        })
    }

    /// Default space with some dimensions replaced. When the default is a
    /// sampled tuple list, `overrides` must name every parameter.
    pub fn with_overrides(claim_id: &str, overrides: Vec<(String, ParamDomain)>) -> Result<Self> {
        let info = lookup(claim_id)?;
        let mut desc = Self::default_for(claim_id)?;
        if overrides.is_empty() {
            return Ok(desc);
        }
        for (name, _) in &overrides {
            if info.param_type(name).is_none() {
                return Err(Error::BadParams(format!(
                    "{claim_id} has no parameter `{name}` (expected {})",
                    info.param_names().join(", ")
                )));
            }
        }
        let mut dims = match desc.space {
            ParamSpace::Grid(dims) => dims,
            ParamSpace::Tuples(_) => Vec::new(),
        };
        for (name, dom) in overrides {
            match dims.iter_mut().find(|(n, _)| *n == name) {
                Some(slot) => slot.1 = dom,
                None => dims.push((name, dom)),
            }
        }
        desc.space = ParamSpace::Grid(dims);
        desc.validate()?;
        Ok(desc)
    }

    /// Checks the space against the claim's parameter signature and puts
    /// grid dimensions in signature order.
    pub fn validate(&mut self) -> Result<&'static ClaimInfo> {
        let info = lookup(&self.claim_id)?;
        let names = info.param_names();
        let ParamSpace::Grid(dims) = &mut self.space else {
            return Ok(info);
        };
        for sig in info.params {
            if !dims.iter().any(|(n, _)| n == sig.name) {
                return Err(Error::BadParams(format!(
                    "{} needs a range for `{}`",
                    self.claim_id, sig.name
                )));
            }
        }
        if let Some((n, _)) = dims.iter().find(|(n, _)| !names.contains(&n.as_str())) {
            return Err(Error::BadParams(format!(
                "{} has no parameter `{n}`",
                self.claim_id
            )));
        }
        dims.sort_by_key(|(n, _)| names.iter().position(|s| s == n));
        for (i, (name, dom)) in dims.iter().enumerate() {
            match (info.param_type(name), dom) {
                (Some(ParamType::List), ParamDomain::Scalar(_)) => {
                    return Err(Error::BadParams(format!("`{name}` is a list, e.g. 3,3")));
                }
                (Some(ParamType::Int), ParamDomain::FixedList(_)) => {
                    return Err(Error::BadParams(format!("`{name}` takes an integer range")));
                }
                _ => {}
            }
            if let ParamDomain::Scalar(set) = dom {
                if let Some(r) = set.references() {
                    if !names[..i].contains(&r) {
                        return Err(Error::BadParams(format!(
                            "range for `{name}` refers to `{r}`, which must come earlier in ({})",
                            names.join(", ")
                        )));
                    }
                }
            }
        }
        Ok(info)
    }
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub parallelism: usize,
    pub counterexample_cap: usize,
    pub tuple_cap: u128,
    /// keep every CheckResult, not only the failures
    pub keep_all: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            parallelism: 1,
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            tuple_cap: DEFAULT_TUPLE_CAP,
            keep_all: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub claim_id: String,
    pub kind: ClaimKind,
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    /// failures in parameter order, at most `counterexample_cap`
    pub counterexamples: Vec<CheckResult>,
    /// every result, when `keep_all` was set
    pub results: Vec<CheckResult>,
    pub elapsed: Duration,
    pub engine_version: String,
}

impl ScanReport {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    /// A failed theorem or lemma: an implementation defect.
    pub fn is_fatal(&self) -> bool {
        self.failed > 0 && self.kind.failure_is_fatal()
    }
}

pub fn scan_claim(desc: &ClaimDescriptor, parallelism: usize) -> Result<ScanReport> {
    scan_claim_with(
        desc,
        &ScanConfig {
            parallelism,
            ..ScanConfig::default()
        },
    )
}

/// Every tuple is checked exactly once; results come back in enumeration
/// order whatever the parallelism, and the first error in that order wins.
pub fn scan_claim_with(desc: &ClaimDescriptor, cfg: &ScanConfig) -> Result<ScanReport> {
    let start = Instant::now();
    let mut desc = desc.clone();
    let info = desc.validate()?;
    let tuples = desc.space.enumerate(cfg.tuple_cap)?;
    let results = par::map_ordered(&tuples, cfg.parallelism.max(1), |p| info.evaluate(p));
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;

    let total = results.len() as u64;
    let (failed, counterexamples) = failures(&results, cfg.counterexample_cap);
    Ok(ScanReport {
        claim_id: info.id.to_string(),
        kind: info.kind,
        total,
        passed: total - failed,
        failed,
        counterexamples,
        results: if cfg.keep_all { results } else { Vec::new() },
        elapsed: start.elapsed(),
        engine_version: crate::ENGINE_VERSION.to_string(),
    })
}

/// Failure count and the first `cap` failures, in input order.
fn failures(results: &[CheckResult], cap: usize) -> (u64, Vec<CheckResult>) {
    let failed = results.iter().filter(|r| !r.pass).count() as u64;
    let kept = results
        .iter()
        .filter(|r| !r.pass)
        .take(cap)
        .cloned()
        .collect();
    (failed, kept)
}
