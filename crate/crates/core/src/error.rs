use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A closed form that should be an integer came out fractional.
    #[error("value {0} is not an integer")]
    NotIntegral(String),
    #[error("{0} is not a prime greater than 3")]
    NotPrime(i64),
    #[error("divisor has leading coefficient {0}, expected 1 or -1")]
    NonMonicDivisor(String),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("parameter space has {count} tuples, cap is {cap}")]
    RangeTooLarge { count: u128, cap: u128 },
    #[error("parameter outside the claim's domain: {0}")]
    BadDomain(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True when the error means a claim failed, as opposed to bad input.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::NotIntegral(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
