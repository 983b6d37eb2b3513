//! The uniform record produced by every claim instance.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{modulo, Integer};
use crate::qpoly::QPoly;

/// A parameter value: a scalar, or a list for the gcd-family claims.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(vs) => {
                f.write_str("[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Ordered parameter assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(pub Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &str, v: i64) -> Self {
        self.0.push((name.to_string(), ParamValue::Int(v)));
        self
    }

    pub fn with_list(mut self, name: &str, v: &[i64]) -> Self {
        self.0
            .push((name.to_string(), ParamValue::List(v.to_vec())));
        self
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn int(&self, name: &str) -> Option<i64> {
        match self.get(name)? {
            ParamValue::Int(v) => Some(*v),
            ParamValue::List(_) => None,
        }
    }

    pub fn list(&self, name: &str) -> Option<&[i64]> {
        match self.get(name)? {
            ParamValue::List(v) => Some(v),
            ParamValue::Int(_) => None,
        }
    }

    /// `k=v;k=v` rendering used by the CSV report.
    pub fn to_kv_string(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// A checked quantity: an integer, or a polynomial in q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantity {
    Int(Integer),
    Poly(QPoly),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl From<Integer> for Quantity {
    fn from(v: Integer) -> Self {
        Quantity::Int(v)
    }
}

impl From<QPoly> for Quantity {
    fn from(p: QPoly) -> Self {
        Quantity::Poly(p)
    }
}

/// One verified claim instance.
///
/// `modulus` is `0` for exact equalities, in which case `residue` repeats
/// `lhs`. For polynomial congruences evaluated in the quotient ring the full
/// left-hand side is never formed, so `lhs` holds the reduced value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub claim_id: String,
    pub params: Params,
    pub lhs: Quantity,
    pub modulus: Quantity,
    pub residue: Quantity,
    pub expected: Quantity,
    pub pass: bool,
}

impl CheckResult {
    /// Integer congruence `lhs ≡ expected (mod modulus)`, `modulus > 0`.
    /// Both residues are normalized into `[0, modulus)`.
    pub fn congruence(
        claim_id: &str,
        params: Params,
        lhs: Integer,
        modulus: Integer,
        expected: Integer,
    ) -> Self {
        assert!(modulus.is_positive(), "congruence modulus must be positive");
        let residue = modulo(&lhs, &modulus);
        let expected = modulo(&expected, &modulus);
        let pass = residue == expected;
        CheckResult {
            claim_id: claim_id.to_string(),
            params,
            lhs: lhs.into(),
            modulus: modulus.into(),
            residue: residue.into(),
            expected: expected.into(),
            pass,
        }
    }

    /// Exact equality `lhs = expected`.
    pub fn equality(claim_id: &str, params: Params, lhs: Quantity, expected: Quantity) -> Self {
        let pass = lhs == expected;
        CheckResult {
            claim_id: claim_id.to_string(),
            params,
            residue: lhs.clone(),
            lhs,
            modulus: Quantity::Int(Integer::zero()),
            expected,
            pass,
        }
    }

    /// Polynomial congruence already reduced modulo `modulus`.
    pub fn poly_congruence(
        claim_id: &str,
        params: Params,
        residue: QPoly,
        modulus: QPoly,
        expected: QPoly,
    ) -> Self {
        let pass = residue == expected;
        CheckResult {
            claim_id: claim_id.to_string(),
            params,
            lhs: Quantity::Poly(residue.clone()),
            modulus: Quantity::Poly(modulus),
            residue: Quantity::Poly(residue),
            expected: Quantity::Poly(expected),
            pass,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn negative_lhs_normalizes() {
        let r = CheckResult::congruence("x", Params::new(), int(-8), int(4), int(0));
        assert_eq!(r.residue, Quantity::Int(int(0)));
        assert!(r.pass);
        let r = CheckResult::congruence("x", Params::new(), int(-20064), int(64), int(32));
        assert_eq!(r.residue, Quantity::Int(int(32)));
        assert!(r.pass);
    }

    #[test]
    fn params_render() {
        let p = Params::new().with("n", 3).with_list("a", &[3, -3]);
        assert_eq!(p.to_kv_string(), "n=3;a=[3,-3]");
        assert_eq!(p.int("n"), Some(3));
        assert_eq!(p.list("a"), Some(&[3, -3][..]));
    }
}
