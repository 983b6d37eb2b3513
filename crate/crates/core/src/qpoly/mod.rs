//! Dense integer polynomials in `q`, the q-analogues built from them, and the
//! q-congruence checks.
//!
//! Congruences modulo cyclotomic factors are decided by exact remainder,
//! never by evaluating at complex roots of unity.

mod claims;
mod special;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Integer};

pub use claims::{
    check_conj56, check_lemma55, check_qchu, check_qlucas, check_thm51, check_thm54,
    conj56_modulus, conj56_modulus_cyclotomic, thm51_sum_full, Thm51Variant,
};
pub use special::{cyclotomic, qbinom, qint, qint_in_power};

/// Polynomial with ascending integer coefficients; the top stored
/// coefficient is never zero, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Integer>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c·q^e`
    pub fn monomial(c: Integer, e: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); e + 1];
        coeffs[e] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Integer::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(q) ↦ p(q^s)`, `s ≥ 1`.
    pub fn substitute_power(&self, s: usize) -> Self {
        assert!(s >= 1);
        let mut coeffs = vec![Integer::zero(); self.coeffs.len().saturating_sub(1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Multiplies by `1 − q^m`.
    pub fn mul_one_minus_qpow(&self, m: usize) -> Self {
        if m == 0 {
            return QPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len() + m, Integer::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + m] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Divides by `1 − q^j`, `j ≥ 1`; `None` if the division is not exact.
    pub fn div_one_minus_qpow(&self, j: usize) -> Option<Self> {
        assert!(j >= 1);
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let deg = self.coeffs.len() - 1;
        if deg < j {
            return None;
        }
        let qdeg = deg - j;
        let mut quot: Vec<Integer> = Vec::with_capacity(qdeg + 1);
        for i in 0..=qdeg {
            let mut c = self.coeffs[i].clone();
            if i >= j {
                c += &quot[i - j];
            }
            quot.push(c);
        }
        // the top j coefficients must equal −quot[i − j]
        let exact = (qdeg + 1..=deg).all(|i| {
            let carried = if i >= j {
                quot[i - j].clone()
            } else {
                Integer::zero()
            };
            (&self.coeffs[i] + carried).is_zero()
        });
        exact.then(|| QPoly::from_coeffs(quot))
    }

    /// Long division by a divisor with leading coefficient ±1.
    pub fn divrem(&self, g: &QPoly) -> Result<(QPoly, QPoly)> {
        let lead = match g.leading() {
            None => return Err(Error::NonMonicDivisor("0".into())),
            Some(l) if l.abs().is_one() => l.clone(),
            Some(l) => return Err(Error::NonMonicDivisor(l.to_string())),
        };
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lead;
            for (t, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    rem[i - dg + t] -= &c * gc;
                }
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, g: &QPoly) -> Result<QPoly> {
        Ok(self.divrem(g)?.1)
    }
}

/// Arithmetic in `Z[q] / (m)` for a monic (or −monic) modulus.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    modulus: QPoly,
}

impl QuotientRing {
    pub fn new(modulus: QPoly) -> Result<Self> {
        // validate once so later reductions cannot fail
        QPoly::zero().divrem(&modulus)?;
        Ok(QuotientRing { modulus })
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn reduce(&self, p: &QPoly) -> QPoly {
        p.rem(&self.modulus)
            .expect("modulus validated at construction")
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&(a * b))
    }

    /// `q^e` reduced.
    pub fn qpow(&self, e: usize) -> QPoly {
        self.reduce(&QPoly::monomial(Integer::one(), e))
    }
}

impl fmt::Display for QPoly {
    /// Sparse ascending form `c0 + c1*q + c3*q^3`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), Integer::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}
