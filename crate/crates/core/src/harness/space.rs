//! Parameter sets and their enumeration.
//!
//! Range syntax accepted by [`ParamSet::parse`]:
//!
//! * `5` — a single value
//! * `1..150` — inclusive range; bounds may reference an earlier parameter,
//!   as in `0..n-1`
//! * `primes:5..97`, `pow2:2..64`
//! * `{0,1,2}` — explicit set

use std::fmt;

use crate::check::{ParamValue, Params};
use crate::error::{Error, Result};
use crate::exact::{is_power_of_two, is_prime};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Const(i64),
    /// value of an earlier parameter plus an offset
    Param {
        name: String,
        offset: i64,
    },
}

impl Bound {
    fn eval(&self, assigned: &Params) -> Result<i64> {
        match self {
            Bound::Const(v) => Ok(*v),
            Bound::Param { name, offset } => {
                assigned.int(name).map(|v| v + offset).ok_or_else(|| {
                    Error::BadParams(format!(
                        "range bound refers to `{name}`, which is not set earlier"
                    ))
                })
            }
        }
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Bound::Const(v));
        }
        let split = s.find(['+', '-']).filter(|&i| i > 0);
        let (name, offset) = match split {
            Some(i) => {
                let off: i64 = s[i + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadParams(format!("bad range bound `{s}`")))?;
                (&s[..i], if &s[i..=i] == "-" { -off } else { off })
            }
            None => (s, 0),
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::BadParams(format!("bad range bound `{s}`")));
        }
        Ok(Bound::Param {
            name: name.to_string(),
            offset,
        })
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Const(v) => write!(f, "{v}"),
            Bound::Param { name, offset } if *offset == 0 => write!(f, "{name}"),
            Bound::Param { name, offset } if *offset > 0 => write!(f, "{name}+{offset}"),
            Bound::Param { name, offset } => write!(f, "{name}{offset}"),
        }
    }
}

/// A finite set of integer values for one scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSet {
    Range { lo: Bound, hi: Bound },
    Primes { lo: i64, hi: i64 },
    PowersOfTwo { lo: i64, hi: i64 },
    Explicit(Vec<i64>),
}

impl ParamSet {
    pub fn range(lo: i64, hi: i64) -> Self {
        ParamSet::Range {
            lo: Bound::Const(lo),
            hi: Bound::Const(hi),
        }
    }

    /// `lo ..= name + offset`
    pub fn up_to_param(lo: i64, name: &str, offset: i64) -> Self {
        ParamSet::Range {
            lo: Bound::Const(lo),
            hi: Bound::Param {
                name: name.to_string(),
                offset,
            },
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let pair = |body: &str| -> Result<(String, String)> {
            body.split_once("..")
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .ok_or_else(|| Error::BadParams(format!("expected `lo..hi`, got `{body}`")))
        };
        let num = |v: &str| -> Result<i64> {
            v.trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("bad integer `{v}`")))
        };
        if let Some(body) = s.strip_prefix("primes:") {
            let (lo, hi) = pair(body)?;
            return Ok(ParamSet::Primes {
                lo: num(&lo)?,
                hi: num(&hi)?,
            });
        }
        if let Some(body) = s.strip_prefix("pow2:") {
            let (lo, hi) = pair(body)?;
            return Ok(ParamSet::PowersOfTwo {
                lo: num(&lo)?,
                hi: num(&hi)?,
            });
        }
        if let Some(body) = s.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let vals = body
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(num)
                .collect::<Result<Vec<_>>>()?;
            if vals.is_empty() {
                return Err(Error::BadParams("empty explicit set".into()));
            }
            return Ok(ParamSet::Explicit(vals));
        }
        if s.contains("..") {
            let (lo, hi) = pair(s)?;
            return Ok(ParamSet::Range {
                lo: Bound::parse(&lo)?,
                hi: Bound::parse(&hi)?,
            });
        }
        Ok(ParamSet::Explicit(vec![num(s)?]))
    }

    /// Values in ascending order, given the parameters assigned so far.
    pub fn values(&self, assigned: &Params) -> Result<Vec<i64>> {
        Ok(match self {
            ParamSet::Range { lo, hi } => {
                let (lo, hi) = (lo.eval(assigned)?, hi.eval(assigned)?);
                (lo..=hi).collect()
            }
            ParamSet::Primes { lo, hi } => (*lo.max(&0)..=*hi)
                .filter(|&v| is_prime(v as u64))
                .collect(),
            ParamSet::PowersOfTwo { lo, hi } => {
                (*lo..=*hi).filter(|&v| is_power_of_two(v)).collect()
            }
            ParamSet::Explicit(vs) => {
                let mut vs = vs.clone();
                vs.sort_unstable();
                vs.dedup();
                vs
            }
        })
    }

    pub fn references(&self) -> Option<&str> {
        match self {
            ParamSet::Range { lo, hi } => [lo, hi].into_iter().find_map(|b| match b {
                Bound::Param { name, .. } => Some(name.as_str()),
                Bound::Const(_) => None,
            }),
            _ => None,
        }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSet::Range { lo, hi } => write!(f, "{lo}..{hi}"),
            ParamSet::Primes { lo, hi } => write!(f, "primes:{lo}..{hi}"),
            ParamSet::PowersOfTwo { lo, hi } => write!(f, "pow2:{lo}..{hi}"),
            ParamSet::Explicit(vs) => {
                let body: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", body.join(","))
            }
        }
    }
}

/// Domain of one named parameter inside a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamDomain {
    Scalar(ParamSet),
    /// a list-valued parameter held fixed across the grid
    FixedList(Vec<i64>),
}

/// The tuples a scan visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSpace {
    /// Cartesian product, enumerated lexicographically in the given order.
    Grid(Vec<(String, ParamDomain)>),
    /// Explicit tuples, e.g. seeded samples.
    Tuples(Vec<Params>),
}

impl ParamSpace {
    /// All tuples, failing with `RangeTooLarge` once more than `cap` appear.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Params>> {
        match self {
            ParamSpace::Tuples(ts) => {
                if ts.len() as u128 > cap {
                    return Err(Error::RangeTooLarge {
                        count: ts.len() as u128,
                        cap,
                    });
                }
                let mut ts = ts.clone();
                ts.sort();
                Ok(ts)
            }
            ParamSpace::Grid(dims) => {
                let mut out = Vec::new();
                expand(dims, Params::new(), &mut out, cap)?;
                if out.is_empty() {
                    return Err(Error::BadParams("parameter space is empty".into()));
                }
                Ok(out)
            }
        }
    }
}

fn expand(
    dims: &[(String, ParamDomain)],
    prefix: Params,
    out: &mut Vec<Params>,
    cap: u128,
) -> Result<()> {
    let Some(((name, dom), rest)) = dims.split_first() else {
        if out.len() as u128 >= cap {
            return Err(Error::RangeTooLarge {
                count: out.len() as u128 + 1,
                cap,
            });
        }
        out.push(prefix);
        return Ok(());
    };
    match dom {
        ParamDomain::FixedList(v) => {
            let mut p = prefix;
            p.0.push((name.clone(), ParamValue::List(v.clone())));
            expand(rest, p, out, cap)
        }
        ParamDomain::Scalar(set) => {
            for v in set.values(&prefix)? {
                let mut p = prefix.clone();
                p.0.push((name.clone(), ParamValue::Int(v)));
                expand(rest, p, out, cap)?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_shapes() {
        assert_eq!(ParamSet::parse("1..150").unwrap(), ParamSet::range(1, 150));
        assert_eq!(
            ParamSet::parse("primes:5..97").unwrap(),
            ParamSet::Primes { lo: 5, hi: 97 }
        );
        assert_eq!(
            ParamSet::parse("pow2:2..64").unwrap(),
            ParamSet::PowersOfTwo { lo: 2, hi: 64 }
        );
        assert_eq!(
            ParamSet::parse("{0,1,2}").unwrap(),
            ParamSet::Explicit(vec![0, 1, 2])
        );
        assert_eq!(ParamSet::parse("-3").unwrap(), ParamSet::Explicit(vec![-3]));
        assert_eq!(
            ParamSet::parse("0..n-1").unwrap(),
            ParamSet::up_to_param(0, "n", -1)
        );
        assert_eq!(
            ParamSet::parse("0..n").unwrap(),
            ParamSet::up_to_param(0, "n", 0)
        );
        assert_eq!(ParamSet::parse("-2..4").unwrap(), ParamSet::range(-2, 4));
        assert!(ParamSet::parse("1..x y").is_err());
        assert!(ParamSet::parse("{}").is_err());
        assert!(ParamSet::parse("abc").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "1..150",
            "0..n-1",
            "0..n+2",
            "primes:5..97",
            "pow2:2..64",
            "{0,1,2}",
        ] {
            assert_eq!(ParamSet::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn value_sets() {
        let none = Params::new();
        assert_eq!(
            ParamSet::parse("primes:5..30")
                .unwrap()
                .values(&none)
                .unwrap(),
            vec![5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert_eq!(
            ParamSet::parse("pow2:2..64")
                .unwrap()
                .values(&none)
                .unwrap(),
            vec![2, 4, 8, 16, 32, 64]
        );
        assert_eq!(
            ParamSet::Explicit(vec![3, 1, 3]).values(&none).unwrap(),
            vec![1, 3]
        );
    }

    #[test]
    fn dependent_grid() {
        let space = ParamSpace::Grid(vec![
            ("n".into(), ParamDomain::Scalar(ParamSet::range(1, 3))),
            (
                "k".into(),
                ParamDomain::Scalar(ParamSet::up_to_param(0, "n", -1)),
            ),
        ]);
        let ts = space.enumerate(100).unwrap();
        let pairs: Vec<(i64, i64)> = ts
            .iter()
            .map(|p| (p.int("n").unwrap(), p.int("k").unwrap()))
            .collect();
        assert_eq!(pairs, vec![(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]);
        assert!(matches!(
            space.enumerate(5),
            Err(Error::RangeTooLarge { .. })
        ));
    }

    #[test]
    fn forward_reference_is_rejected() {
        let space = ParamSpace::Grid(vec![
            (
                "k".into(),
                ParamDomain::Scalar(ParamSet::up_to_param(0, "n", -1)),
            ),
            ("n".into(), ParamDomain::Scalar(ParamSet::range(1, 3))),
        ]);
        assert!(matches!(space.enumerate(100), Err(Error::BadParams(_))));
    }
}
