//! Exact scalars and the combinatorial primitives shared by every checker.
//!
//! All arithmetic is over arbitrary-precision integers. Rationals only appear
//! transiently, to certify that a closed form is integral before it is
//! compared against anything.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

#[inline]
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Generalized binomial coefficient `C(n, k) = n(n-1)...(n-k+1) / k!`.
///
/// Defined for every integer `n`; returns 0 when `k < 0`.
pub fn binomial(n: &Integer, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    let mut k = k;
    if !n.is_negative() {
        if *n < int(k) {
            return Integer::zero();
        }
        // symmetry keeps the loop short for large k
        let alt = n - int(k);
        if alt < int(k) {
            k = i64::try_from(&alt).expect("binomial: lower index fits i64");
        }
    }
    let mut acc = Integer::one();
    for i in 0..k {
        // after this step acc = C(n, i + 1), always an integer
        acc *= n - int(i);
        acc /= int(i + 1);
    }
    acc
}

/// `binomial` for machine-sized upper index.
#[inline]
pub fn binom(n: i64, k: i64) -> Integer {
    binomial(&int(n), k)
}

/// Rising factorial `(x)_n = x(x+1)...(x+n-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &Integer, n: u64) -> Integer {
    let mut acc = Integer::one();
    let mut t = x.clone();
    for _ in 0..n {
        if t.is_zero() {
            return Integer::zero();
        }
        acc *= &t;
        t += 1;
    }
    acc
}

/// gcd of the absolute values. A zero entry leaves the others unchanged, so
/// `[0, 0, n]` gives `|n|`; an all-zero list gives 0.
pub fn gcd_many<'a, I>(values: I) -> Integer
where
    I: IntoIterator<Item = &'a Integer>,
{
    values
        .into_iter()
        .fold(Integer::zero(), |acc, v| acc.gcd(v))
}

pub fn gcd_many_i64(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |acc, &v| acc.gcd(&v)).abs()
}

/// Returns the numerator of `x` if its reduced denominator is 1.
pub fn certify_integer(x: &Rational) -> Result<Integer> {
    if x.denom().is_one() {
        Ok(x.numer().clone())
    } else {
        Err(Error::NotIntegral(x.to_string()))
    }
}

pub fn ratio(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}

/// Least nonnegative residue of `x` modulo `m > 0`.
pub fn modulo(x: &Integer, m: &Integer) -> Integer {
    x.mod_floor(m)
}

/// Deterministic trial division; intended for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// `(-1)^e` as a small integer.
#[inline]
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn is_power_of_two(n: i64) -> bool {
    n > 0 && (n & (n - 1)) == 0
}
