//! Apéry numbers `A_n = Σ C(n+k,2k)² C(2k,k)²` and central Delannoy numbers
//! `D_n = Σ C(n+k,2k) C(2k,k)`.
//!
//! Values come from the defining sums. The classical three-term recurrences
//! are kept as an independent oracle and are never used by the checkers.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{certify_integer, int, ratio, Integer};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Apery,
    Delannoy,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceKind::Apery => "apery",
            SequenceKind::Delannoy => "delannoy",
        })
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "apery" => Ok(SequenceKind::Apery),
            "delannoy" => Ok(SequenceKind::Delannoy),
            other => Err(Error::BadParams(format!("unknown sequence `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DefiningSum,
    RecurrenceOracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub method: Method,
    pub values: Vec<Integer>,
}

impl SequenceTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// CSV with header `n,value`, plain decimal.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "n,value")?;
        for (n, v) in self.values.iter().enumerate() {
            writeln!(out, "{n},{v}")?;
        }
        Ok(())
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (n, v) in self.values.iter().enumerate() {
            writeln!(
                out,
                "{{\"sequence\":\"{}\",\"n\":{n},\"value\":\"{v}\"}}",
                self.kind
            )?;
        }
        Ok(())
    }
}

/// Terms `t_k = C(n+k,2k) C(2k,k)` for `k = 0..=n`, built from the ratio
/// `t_{k+1} / t_k = (n+k+1)(n-k) / (k+1)²`.
fn central_terms(n: u64) -> impl Iterator<Item = Integer> {
    let n = n as i64;
    let mut t = Integer::one();
    (0..=n).map(move |k| {
        let cur = t.clone();
        if k < n {
            t *= int((n + k + 1) * (n - k));
            t /= int((k + 1) * (k + 1));
        }
        cur
    })
}

pub fn apery(n: u64) -> Integer {
    central_terms(n).map(|t| &t * &t).sum()
}

pub fn delannoy(n: u64) -> Integer {
    central_terms(n).sum()
}

pub fn value(kind: SequenceKind, n: u64) -> Integer {
    match kind {
        SequenceKind::Apery => apery(n),
        SequenceKind::Delannoy => delannoy(n),
    }
}

pub fn build_table(kind: SequenceKind, max_n: u64, method: Method) -> Result<SequenceTable> {
    let values = match method {
        Method::DefiningSum => par::map_range(0, max_n as usize + 1, |n| value(kind, n as u64)),
        Method::RecurrenceOracle => recurrence_values(kind, max_n)?,
    };
    Ok(SequenceTable {
        kind,
        method,
        values,
    })
}

/// Seeds with the first two defining-sum values, then runs
/// `(n+1)³A_{n+1} = (2n+1)(17n²+17n+5)A_n − n³A_{n−1}` or
/// `n·D_n = 3(2n−1)D_{n−1} − (n−1)D_{n−2}`.
fn recurrence_values(kind: SequenceKind, max_n: u64) -> Result<Vec<Integer>> {
    let mut v = Vec::with_capacity(max_n as usize + 1);
    v.push(value(kind, 0));
    if max_n == 0 {
        return Ok(v);
    }
    v.push(value(kind, 1));
    for n in 2..=max_n as i64 {
        let (a, b) = (&v[n as usize - 1], &v[n as usize - 2]);
        let (num, den) = match kind {
            SequenceKind::Apery => {
                let m = n - 1;
                let num = int((2 * m + 1) * (17 * m * m + 17 * m + 5)) * a - int(m * m * m) * b;
                (num, int(n * n * n))
            }
            SequenceKind::Delannoy => {
                let num = int(3 * (2 * n - 1)) * a - int(n - 1) * b;
                (num, int(n))
            }
        };
        v.push(certify_integer(&ratio(num, den))?);
    }
    Ok(v)
}

struct SharedPrefix {
    kind: SequenceKind,
    values: RwLock<Arc<Vec<Integer>>>,
}

impl SharedPrefix {
    fn new(kind: SequenceKind) -> Self {
        SharedPrefix {
            kind,
            values: RwLock::new(Arc::new(Vec::new())),
        }
    }

    fn prefix(&self, len: usize) -> Arc<Vec<Integer>> {
        {
            let cur = self.values.read().expect("sequence cache poisoned");
            if cur.len() >= len {
                return Arc::clone(&cur);
            }
        }
        let mut guard = self.values.write().expect("sequence cache poisoned");
        if guard.len() < len {
            let old = guard.len();
            // grow geometrically so a sweep over n does not rebuild per step
            let target = len.max(old * 2).max(16);
            let kind = self.kind;
            let fresh = par::map_range(old, target, |n| value(kind, n as u64));
            let mut grown = Vec::with_capacity(target);
            grown.extend_from_slice(&guard);
            grown.extend(fresh);
            *guard = Arc::new(grown);
        }
        Arc::clone(&guard)
    }
}

static APERY_CACHE: LazyLock<SharedPrefix> =
    LazyLock::new(|| SharedPrefix::new(SequenceKind::Apery));
static DELANNOY_CACHE: LazyLock<SharedPrefix> =
    LazyLock::new(|| SharedPrefix::new(SequenceKind::Delannoy));

/// Process-wide cached values `[x_0, ..., x_{len-1}]` (possibly longer).
/// The cache only grows.
pub fn cached_prefix(kind: SequenceKind, len: usize) -> Arc<Vec<Integer>> {
    match kind {
        SequenceKind::Apery => APERY_CACHE.prefix(len),
        SequenceKind::Delannoy => DELANNOY_CACHE.prefix(len),
    }
}

pub fn is_strictly_increasing(values: &[Integer]) -> bool {
    values.windows(2).all(|w| w[0] < w[1]) && values.first().is_none_or(|v| !v.is_zero())
}
