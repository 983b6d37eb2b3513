//! Exact arithmetic checks of congruences and identities for sums involving
//! Apéry numbers `A_n` and central Delannoy numbers `D_n`, their q-analogues,
//! and finite scans of the related conjectures.

pub mod check;
pub mod cli;
pub mod conjectures;
pub mod error;
pub mod exact;
pub mod harness;
pub mod identities;
pub mod newton;
pub mod par;
pub mod qpoly;
pub mod sequences;

pub use check::{CheckResult, ParamValue, Params, Quantity};
pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use harness::{scan_claim, ClaimDescriptor, ScanReport};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
