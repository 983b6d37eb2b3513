//! Evaluators for the integer congruences, summation identities and
//! integrality statements.
//!
//! Every evaluator computes the left-hand side by direct exact summation and
//! returns a [`CheckResult`]. Closed forms with a denominator are evaluated as
//! rationals and certified integral before they are compared.

use num_traits::{One, Zero};

use crate::check::{CheckResult, Params, Quantity};
use crate::error::{Error, Result};
use crate::exact::{
    binom, certify_integer, gcd_many_i64, int, is_prime, ratio, rising_factorial, sign_pow,
    Integer, Rational,
};
use crate::newton::newton_coeffs;
use crate::sequences::{cached_prefix, SequenceKind};

fn require_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::BadDomain(format!("{name} must be ≥ 1, got {v}")));
    }
    Ok(())
}

fn require_prime_above_3(p: i64) -> Result<()> {
    if p <= 3 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn ipow(base: i64, e: u64) -> Integer {
    num_traits::pow(int(base), e as usize)
}

// ---------------------------------------------------------------------------
// summation lemmas

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummationLemma {
    /// `Σ_{m=k}^{n−1}(2m+1)C(m+k,2k)C(m+k+a,2k+2a)`
    Gsun,
    /// `Σ_{m<n}(2m+1)C(m+k,2k)`
    SunPlus,
    /// `Σ_{m<n}(−1)^m(2m+1)C(m+k,2k)`
    SunMinus,
    /// `Σ_{m<n}(2m+1)³C(m+k,2k)²`
    Cubic,
}

impl SummationLemma {
    pub fn claim_id(self) -> &'static str {
        match self {
            SummationLemma::Gsun => "lem2.2",
            SummationLemma::SunPlus => "lem3.1+",
            SummationLemma::SunMinus => "lem3.1-",
            SummationLemma::Cubic => "lem4.1",
        }
    }
}

/// Sum side against closed form; `a` is only read by [`SummationLemma::Gsun`].
pub fn check_summation_lemma(lemma: SummationLemma, n: i64, k: i64, a: i64) -> Result<CheckResult> {
    require_positive("n", n)?;
    if k < 0 || k > n - 1 || a < 0 {
        return Err(Error::BadDomain(format!(
            "{} needs 0 ≤ k ≤ n−1 and a ≥ 0 (n={n}, k={k}, a={a})",
            lemma.claim_id()
        )));
    }
    let (lhs, closed): (Integer, Rational) = match lemma {
        SummationLemma::Gsun => {
            let lhs = (k..n)
                .map(|m| int(2 * m + 1) * binom(m + k, 2 * k) * binom(m + k + a, 2 * k + 2 * a))
                .sum();
            let num =
                int((n - k) * (n - k - a)) * binom(n + k, 2 * k) * binom(n + k + a, 2 * k + 2 * a);
            (lhs, ratio(num, int(2 * k + a + 1)))
        }
        SummationLemma::SunPlus => {
            let lhs = (0..n).map(|m| int(2 * m + 1) * binom(m + k, 2 * k)).sum();
            let num = int((n - k) * n) * binom(n + k, 2 * k);
            (lhs, ratio(num, int(k + 1)))
        }
        SummationLemma::SunMinus => {
            let lhs = (0..n)
                .map(|m| int(sign_pow(m) * (2 * m + 1)) * binom(m + k, 2 * k))
                .sum();
            let num = int(sign_pow(n - 1) * (n - k)) * binom(n + k, 2 * k);
            (lhs, Rational::from_integer(num))
        }
        SummationLemma::Cubic => {
            let lhs = (0..n)
                .map(|m| {
                    let b = binom(m + k, 2 * k);
                    ipow(2 * m + 1, 3) * &b * &b
                })
                .sum();
            let b = binom(n + k, 2 * k);
            let num = int((n - k) * (n - k) * (2 * n * n - k - 1)) * &b * &b;
            (lhs, ratio(num, int(k + 1)))
        }
    };
    let expected = certify_integer(&closed)?;
    let mut params = Params::new().with("n", n).with("k", k);
    if lemma == SummationLemma::Gsun {
        params = params.with("a", a);
    }
    Ok(CheckResult::equality(
        lemma.claim_id(),
        params,
        Quantity::Int(lhs),
        Quantity::Int(expected),
    ))
}

// ---------------------------------------------------------------------------
// integrality certificate

fn lemma23_parts(n: i64, k: i64, a: i64) -> (Integer, Integer) {
    let num = int((n - k) * (n - k - a))
        * binom(n + k, 2 * k)
        * binom(n + k + a, 2 * k + 2 * a)
        * binom(2 * k, k)
        * rising_factorial(&int(2 * k + 1), 2 * a as u64);
    (num, int(n * (2 * k + a + 1)))
}

/// `(n−k)(n−k−a) / (n(2k+a+1)) · C(n+k,2k) C(n+k+a,2k+2a) C(2k,k) (2k+1)_{2a}`,
/// certified to be a nonnegative integer.
pub fn lemma23_certificate(n: i64, k: i64, a: i64) -> Result<Integer> {
    require_positive("n", n)?;
    if k < 0 || a < 0 || k > n {
        return Err(Error::BadDomain(format!(
            "lem2.3 needs 0 ≤ k ≤ n and a ≥ 0 (n={n}, k={k}, a={a})"
        )));
    }
    let (num, den) = lemma23_parts(n, k, a);
    let v = certify_integer(&ratio(num, den))?;
    if v < Integer::zero() {
        return Err(Error::NotIntegral(format!("negative certificate {v}")));
    }
    Ok(v)
}

/// Congruence form of the certificate: numerator ≡ 0 modulo `n(2k+a+1)`.
pub fn check_lemma23(n: i64, k: i64, a: i64) -> Result<CheckResult> {
    lemma23_certificate(n, k, a)?;
    let (num, den) = lemma23_parts(n, k, a);
    let params = Params::new().with("n", n).with("k", k).with("a", a);
    Ok(CheckResult::congruence(
        "lem2.3",
        params,
        num,
        den,
        Integer::zero(),
    ))
}

// ---------------------------------------------------------------------------
// weighted sums of A_k and D_k

/// `Σ_{k<n} ε^k (2k+1) k^r (k+1)^r x_k`
fn poly_weighted_sum(kind: SequenceKind, n: i64, r: u64, eps: i64) -> Integer {
    let xs = cached_prefix(kind, n as usize);
    (0..n)
        .map(|k| {
            let sign = if eps < 0 { sign_pow(k) } else { 1 };
            int(sign * (2 * k + 1)) * ipow(k * (k + 1), r) * &xs[k as usize]
        })
        .sum()
}

/// `Σ_{k<n} ε^k (2k+1)^{2r+1} x_k`
fn odd_power_sum(kind: SequenceKind, n: i64, r: u64, eps: i64) -> Integer {
    let xs = cached_prefix(kind, n as usize);
    (0..n)
        .map(|k| {
            let sign = if eps < 0 { sign_pow(k) } else { 1 };
            int(sign) * ipow(2 * k + 1, 2 * r + 1) * &xs[k as usize]
        })
        .sum()
}

fn validate_eps(eps: i64) -> Result<()> {
    if eps != 1 && eps != -1 {
        return Err(Error::BadDomain(format!("eps must be ±1, got {eps}")));
    }
    Ok(())
}

/// `Σ(2k+1)k^r(k+1)^r A_k ≡ 0` and `Σ(2k+1)^{2r+1} A_k ≡ 0 (mod n)`.
pub fn check_thm_apery(n: i64, r: i64) -> Result<(CheckResult, CheckResult)> {
    require_positive("n", n)?;
    if r < 0 {
        return Err(Error::BadDomain(format!("r must be ≥ 0, got {r}")));
    }
    let params = Params::new().with("n", n).with("r", r);
    let first = poly_weighted_sum(SequenceKind::Apery, n, r as u64, 1);
    let second = odd_power_sum(SequenceKind::Apery, n, r as u64, 1);
    Ok((
        CheckResult::congruence("thm1.1a", params.clone(), first, int(n), int(0)),
        CheckResult::congruence("thm1.1b", params, second, int(n), int(0)),
    ))
}

/// Delannoy analogue of [`check_thm_apery`] with sign `ε^k`.
pub fn check_thm_delannoy(n: i64, r: i64, eps: i64) -> Result<(CheckResult, CheckResult)> {
    require_positive("n", n)?;
    validate_eps(eps)?;
    if r < 0 {
        return Err(Error::BadDomain(format!("r must be ≥ 0, got {r}")));
    }
    let params = Params::new().with("n", n).with("r", r).with("eps", eps);
    let first = poly_weighted_sum(SequenceKind::Delannoy, n, r as u64, eps);
    let second = odd_power_sum(SequenceKind::Delannoy, n, r as u64, eps);
    Ok((
        CheckResult::congruence("thm1.2a", params.clone(), first, int(n), int(0)),
        CheckResult::congruence("thm1.2b", params, second, int(n), int(0)),
    ))
}

/// Refinements modulo `2n`: the plain sum is `≡ n`; the alternating sum is
/// `≡ n` for odd `n` and `≡ 0` for even `n`.
pub fn check_thm_delref(n: i64, r: i64) -> Result<(CheckResult, CheckResult)> {
    require_positive("n", n)?;
    if r < 0 {
        return Err(Error::BadDomain(format!("r must be ≥ 0, got {r}")));
    }
    let params = Params::new().with("n", n).with("r", r);
    let plain = odd_power_sum(SequenceKind::Delannoy, n, r as u64, 1);
    let alt = odd_power_sum(SequenceKind::Delannoy, n, r as u64, -1);
    let alt_expected = if n % 2 == 1 { n } else { 0 };
    Ok((
        CheckResult::congruence("thm3.1a", params.clone(), plain, int(2 * n), int(n)),
        CheckResult::congruence("thm3.1b", params, alt, int(2 * n), int(alt_expected)),
    ))
}

fn cubic_apery_sum(n: i64) -> Integer {
    odd_power_sum(SequenceKind::Apery, n, 1, 1)
}

/// `Σ_{k<n}(2k+1)³A_k ≡ 0 (mod n³)`.
pub fn check_akcubic(n: i64) -> Result<CheckResult> {
    require_positive("n", n)?;
    Ok(CheckResult::congruence(
        "thm1.3a",
        Params::new().with("n", n),
        cubic_apery_sum(n),
        ipow(n, 3),
        int(0),
    ))
}

/// `Σ_{k<p}(2k+1)³A_k ≡ p³ (mod 2p⁶)` for primes `p > 3`.
pub fn check_akcubic_prime(p: i64) -> Result<CheckResult> {
    require_prime_above_3(p)?;
    Ok(CheckResult::congruence(
        "thm1.3b",
        Params::new().with("p", p),
        cubic_apery_sum(p),
        int(2) * ipow(p, 6),
        ipow(p, 3),
    ))
}

/// Second route to `Σ_{m<n}(2m+1)m^r(m+1)^r A_m`: expand with the Newton
/// coefficients and collapse the inner sum with its closed form, giving
/// `n · Σ_j Σ_k a_j(k,r) C(2k,k) · cert(n,k,j)`.
pub fn thm_apery_sum_via_lemmas(n: i64, r: u64) -> Result<Integer> {
    require_positive("n", n)?;
    let mut total = Integer::zero();
    for k in 0..n {
        let coeffs = newton_coeffs(k as u64, r);
        let central = binom(2 * k, k);
        for (j, a) in coeffs.coeffs.iter().enumerate() {
            total += a * &central * lemma23_certificate(n, k, j as i64)?;
        }
    }
    Ok(total * int(n))
}

// ---------------------------------------------------------------------------
// gcd-family congruences

fn validate_lists(a: &[i64], b: &[i64], min_len: usize) -> Result<()> {
    if a.len() != b.len() || a.len() < min_len {
        return Err(Error::BadParams(format!(
            "a and b must have equal length ≥ {min_len} (got {} and {})",
            a.len(),
            b.len()
        )));
    }
    if b.iter().any(|&x| x < 0) {
        return Err(Error::BadDomain("b_i must be nonnegative".into()));
    }
    Ok(())
}

fn gcd_with_n(n: i64, a: &[i64], b: &[i64]) -> i64 {
    let mut all: Vec<i64> = a.iter().chain(b).copied().collect();
    all.push(n);
    gcd_many_i64(&all)
}

/// `Σ_{k<n} C(n−1,k)² ∏ C(a_i+k, b_i+k)`
pub fn gcd_binom_sum(n: u64, a: &[i64], b: &[i64]) -> Integer {
    let n = n as i64;
    (0..n)
        .map(|k| {
            let c = binom(n - 1, k);
            let prod: Integer = a
                .iter()
                .zip(b)
                .map(|(&ai, &bi)| binom(ai + k, bi + k))
                .product();
            &c * &c * prod
        })
        .sum()
}

/// `gcd_binom_sum ≡ 0 (mod gcd(a, b, n))`, `a_i, b_i ≥ 0`.
pub fn check_gcd_binom(n: i64, a: &[i64], b: &[i64]) -> Result<CheckResult> {
    require_positive("n", n)?;
    validate_lists(a, b, 0)?;
    if a.iter().any(|&x| x < 0) {
        return Err(Error::BadDomain("a_i must be nonnegative".into()));
    }
    let d = gcd_with_n(n, a, b);
    let params = Params::new()
        .with("n", n)
        .with_list("a", a)
        .with_list("b", b);
    Ok(CheckResult::congruence(
        "thm1.4",
        params,
        gcd_binom_sum(n as u64, a, b),
        int(d),
        int(0),
    ))
}

/// `Σ_{k<n}(−1)^{mk} ∏ C(a_i−1, b_i+k)`, `m = |a|`
pub fn gen_bino_sum(n: i64, a: &[i64], b: &[i64]) -> Integer {
    let m = a.len() as i64;
    (0..n)
        .map(|k| {
            let prod: Integer = a
                .iter()
                .zip(b)
                .map(|(&ai, &bi)| binom(ai - 1, bi + k))
                .product();
            int(sign_pow(m * k)) * prod
        })
        .sum()
}

/// `gen_bino_sum ≡ 0 (mod gcd(|a|, b, n))` for integer `a_i`, `b_i ≥ 0`.
pub fn check_gen_bino(n: i64, a: &[i64], b: &[i64]) -> Result<CheckResult> {
    require_positive("n", n)?;
    validate_lists(a, b, 1)?;
    let d = gcd_with_n(n, a, b);
    let params = Params::new()
        .with("n", n)
        .with_list("a", a)
        .with_list("b", b);
    Ok(CheckResult::congruence(
        "thm5.3",
        params,
        gen_bino_sum(n, a, b),
        int(d),
        int(0),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corollary {
    /// `Σ C(n+k,k)^r C(n−1,k)^{2s} ≡ 0 (mod n)`
    Cor51a,
    /// `Σ (−1)^k C(n+k,k)^r C(n−1,k)^{2s+1} ≡ 0 (mod n)`
    Cor51b,
    /// `Σ (−1)^{(r+s)k} C(n−1,k)^r C(2n−1,k)^s ≡ 0 (mod n)`
    Cor52,
    /// `Σ_{k=0}^{n} C(n,k)^{2s} ≡ 0 (mod n+1)`
    Calkin,
}

impl Corollary {
    pub fn claim_id(self) -> &'static str {
        match self {
            Corollary::Cor51a => "cor5.1a",
            Corollary::Cor51b => "cor5.1b",
            Corollary::Cor52 => "cor5.2",
            Corollary::Calkin => "calkin",
        }
    }
}

pub fn check_corollary(cor: Corollary, n: i64, r: i64, s: i64) -> Result<CheckResult> {
    if cor == Corollary::Calkin {
        if n < 0 {
            return Err(Error::BadDomain(format!("n must be ≥ 0, got {n}")));
        }
    } else {
        require_positive("n", n)?;
    }
    if r < 0 || s < 0 {
        return Err(Error::BadDomain("r and s must be ≥ 0".into()));
    }
    let (r, s) = (r as usize, s as usize);
    let (lhs, modulus): (Integer, i64) = match cor {
        Corollary::Cor51a => (
            (0..n)
                .map(|k| {
                    num_traits::pow(binom(n + k, k), r) * num_traits::pow(binom(n - 1, k), 2 * s)
                })
                .sum(),
            n,
        ),
        Corollary::Cor51b => (
            (0..n)
                .map(|k| {
                    int(sign_pow(k))
                        * num_traits::pow(binom(n + k, k), r)
                        * num_traits::pow(binom(n - 1, k), 2 * s + 1)
                })
                .sum(),
            n,
        ),
        Corollary::Cor52 => (
            (0..n)
                .map(|k| {
                    int(sign_pow((r + s) as i64 * k))
                        * num_traits::pow(binom(n - 1, k), r)
                        * num_traits::pow(binom(2 * n - 1, k), s)
                })
                .sum(),
            n,
        ),
        Corollary::Calkin => (
            (0..=n).map(|k| num_traits::pow(binom(n, k), 2 * s)).sum(),
            n + 1,
        ),
    };
    let mut params = Params::new().with("n", n);
    if cor != Corollary::Calkin {
        params = params.with("r", r as i64);
    }
    params = params.with("s", s as i64);
    Ok(CheckResult::congruence(
        cor.claim_id(),
        params,
        lhs,
        int(modulus),
        int(0),
    ))
}

// ---------------------------------------------------------------------------
// prime-indexed congruences

/// `Σ_{k=1}^{p−1} 1/k^e` as a reduced rational.
pub fn harmonic(p: i64, e: u32) -> Rational {
    (1..p)
        .map(|k| ratio(Integer::one(), num_traits::pow(int(k), e as usize)))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// `Σ_{k<p} C(p+k,k)² C(p−1,k)²`
pub fn pksquare_sum(p: i64) -> Integer {
    (0..p)
        .map(|k| {
            let x = binom(p + k, k) * binom(p - 1, k);
            &x * &x
        })
        .sum()
}

/// `Σ_{k<p} C(p+k,k+1) C(p+k,k) C(p−1,k)²`
pub fn pkpk1_sum(p: i64) -> Integer {
    (0..p)
        .map(|k| {
            let c = binom(p - 1, k);
            binom(p + k, k + 1) * binom(p + k, k) * &c * &c
        })
        .sum()
}

/// The two harmonic-sum congruences and the two binomial-sum congruences
/// modulo `2p⁴` and `2p³`, in that order.
pub fn check_wolstenholme_suite(p: i64) -> Result<Vec<CheckResult>> {
    require_prime_above_3(p)?;
    let params = Params::new().with("p", p);
    let h1 = harmonic(p, 1);
    let h2 = harmonic(p, 2);
    Ok(vec![
        CheckResult::congruence(
            "wolst1",
            params.clone(),
            h1.numer().clone(),
            ipow(p, 2),
            int(0),
        ),
        CheckResult::congruence("wolst2", params.clone(), h2.numer().clone(), int(p), int(0)),
        CheckResult::congruence(
            "lem4.2a",
            params.clone(),
            pksquare_sum(p),
            int(2) * ipow(p, 4),
            int(p),
        ),
        CheckResult::congruence("lem4.2b", params, pkpk1_sum(p), int(2) * ipow(p, 3), int(1)),
    ])
}

/// `Σ_{k<n} C(n+k,k)² C(n−1,k)²`
pub fn particular_sum(n: i64) -> Integer {
    (0..n)
        .map(|k| {
            let x = binom(n + k, k) * binom(n - 1, k);
            &x * &x
        })
        .sum()
}

/// `I(n) = particular_sum(n) / n`, certified integral.
pub fn i_value(n: u64) -> Result<Integer> {
    require_positive("n", n as i64)?;
    certify_integer(&ratio(particular_sum(n as i64), int(n as i64)))
}

pub fn check_particular1(n: i64) -> Result<CheckResult> {
    require_positive("n", n)?;
    Ok(CheckResult::congruence(
        "eq-particular1",
        Params::new().with("n", n),
        particular_sum(n),
        int(n),
        int(0),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlternatingIdentity {
    /// `Σ_{k<n} (−1)^k C(n+k,n) C(n,k+1) = (−1)^{n−1}`
    Unit,
    /// `Σ_{k<n} (−1)^k C(n+k,n) C(n−1,k) = (−1)^{n−1} n`
    TimesN,
}

pub fn check_alternating_identity(which: AlternatingIdentity, n: i64) -> Result<CheckResult> {
    require_positive("n", n)?;
    let (id, lhs, expected): (&str, Integer, i64) = match which {
        AlternatingIdentity::Unit => (
            "alt-unit",
            (0..n)
                .map(|k| int(sign_pow(k)) * binom(n + k, n) * binom(n, k + 1))
                .sum(),
            sign_pow(n - 1),
        ),
        AlternatingIdentity::TimesN => (
            "alt-n",
            (0..n)
                .map(|k| int(sign_pow(k)) * binom(n + k, n) * binom(n - 1, k))
                .sum(),
            sign_pow(n - 1) * n,
        ),
    };
    Ok(CheckResult::equality(
        id,
        Params::new().with("n", n),
        Quantity::Int(lhs),
        Quantity::Int(int(expected)),
    ))
}
