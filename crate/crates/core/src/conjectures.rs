//! Open conjectures, checked one parameter tuple at a time. A failing check
//! is a counterexample and is reported through `pass = false`, never as an
//! error.

use crate::check::{CheckResult, Params};
use crate::error::{Error, Result};
use crate::exact::{binom, gcd_many_i64, int, is_power_of_two, sign_pow, Integer};
use crate::qpoly;
use crate::sequences::{cached_prefix, SequenceKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureId {
    /// `Σ(−1)^k(2k+1)³D_k ≡ 2n² (mod n³)` for `n` a power of 2
    Delannoy2Adic,
    /// signed weighted product of binomials `≡ 0 (mod gcd)`
    General,
    /// `Σ C(n−1,k)^{2r} ≡ n·[n = 2^a] (mod 2n)`
    PowerOfTwoA,
    /// `Σ C(2n−1,k)^{2r} ≡ n·[n = 2^a] (mod 2n)`
    PowerOfTwoB,
    /// `Σ(−1)^{kt}C(n+k,k)^s C(n−1,k)^t` case split modulo `2n`
    Cases,
    /// q-analogue modulo `[p]_{q^{n/p}}²` for prime powers
    QSquare,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 6] = [
        ConjectureId::Delannoy2Adic,
        ConjectureId::General,
        ConjectureId::PowerOfTwoA,
        ConjectureId::PowerOfTwoB,
        ConjectureId::Cases,
        ConjectureId::QSquare,
    ];

    pub fn claim_id(self) -> &'static str {
        match self {
            ConjectureId::Delannoy2Adic => "conj3.1",
            ConjectureId::General => "conj5.gen",
            ConjectureId::PowerOfTwoA => "conj5.pow2a",
            ConjectureId::PowerOfTwoB => "conj5.pow2b",
            ConjectureId::Cases => "conj5.cases",
            ConjectureId::QSquare => "conj5.6",
        }
    }

    pub fn from_claim_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.claim_id() == id)
    }
}

fn bad(msg: String) -> Error {
    Error::BadDomain(msg)
}

/// `n = 1` is accepted and holds vacuously (everything is `≡ 0 mod 1`).
pub fn check_conj31(n: i64) -> Result<CheckResult> {
    if !is_power_of_two(n) {
        return Err(bad(format!("conj3.1 needs n a power of 2, got {n}")));
    }
    let ds = cached_prefix(SequenceKind::Delannoy, n as usize);
    let lhs: Integer = (0..n)
        .map(|k| int(sign_pow(k)) * num_traits::pow(int(2 * k + 1), 3) * &ds[k as usize])
        .sum();
    Ok(CheckResult::congruence(
        "conj3.1",
        Params::new().with("n", n),
        lhs,
        num_traits::pow(int(n), 3),
        int(2 * n * n),
    ))
}

pub fn check_conj5_gen(n: i64, r: i64, eps: i64, a: &[i64], b: &[i64]) -> Result<CheckResult> {
    if n < 1 || r < 0 || (eps != 1 && eps != -1) {
        return Err(bad(format!(
            "conj5.gen needs n ≥ 1, r ≥ 0, eps = ±1 (n={n}, r={r}, eps={eps})"
        )));
    }
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::BadParams(
            "a and b must have equal non-zero length".into(),
        ));
    }
    if b.iter().any(|&x| x < 0) {
        return Err(bad("b_i must be nonnegative".into()));
    }
    let m = a.len() as i64;
    let lhs: Integer = (0..n)
        .map(|k| {
            let sign = sign_pow(m * k) * if eps < 0 { sign_pow(k) } else { 1 };
            let prod: Integer = a
                .iter()
                .zip(b)
                .map(|(&ai, &bi)| binom(ai - 1, bi + k))
                .product();
            int(sign * (2 * k + 1)) * num_traits::pow(int(k * (k + 1)), r as usize) * prod
        })
        .sum();
    let mut all: Vec<i64> = a.iter().chain(b).copied().collect();
    all.push(n);
    let d = gcd_many_i64(&all);
    let params = Params::new()
        .with("n", n)
        .with("r", r)
        .with("eps", eps)
        .with_list("a", a)
        .with_list("b", b);
    Ok(CheckResult::congruence(
        "conj5.gen",
        params,
        lhs,
        int(d),
        int(0),
    ))
}

pub fn check_conj5_pow2(second: bool, n: i64, r: i64) -> Result<CheckResult> {
    if n < 1 || r < 1 {
        return Err(bad(format!("conj5.pow2 needs n, r ≥ 1 (n={n}, r={r})")));
    }
    let top = if second { 2 * n - 1 } else { n - 1 };
    let lhs: Integer = (0..n)
        .map(|k| num_traits::pow(binom(top, k), 2 * r as usize))
        .sum();
    let expected = if is_power_of_two(n) { n } else { 0 };
    let id = if second { "conj5.pow2b" } else { "conj5.pow2a" };
    Ok(CheckResult::congruence(
        id,
        Params::new().with("n", n).with("r", r),
        lhs,
        int(2 * n),
        int(expected),
    ))
}

pub fn check_conj5_cases(n: i64, s: i64, t: i64) -> Result<CheckResult> {
    if n < 1 || s < 1 || t < 1 {
        return Err(bad(format!(
            "conj5.cases needs n, s, t ≥ 1 (n={n}, s={s}, t={t})"
        )));
    }
    let lhs: Integer = (0..n)
        .map(|k| {
            int(sign_pow(k * t))
                * num_traits::pow(binom(n + k, k), s as usize)
                * num_traits::pow(binom(n - 1, k), t as usize)
        })
        .sum();
    let expected = if n % 2 == 0 && (s + t) % 2 == 1 { 0 } else { n };
    Ok(CheckResult::congruence(
        "conj5.cases",
        Params::new().with("n", n).with("s", s).with("t", t),
        lhs,
        int(2 * n),
        int(expected),
    ))
}

pub fn check_conj56(p: i64, e: i64) -> Result<CheckResult> {
    if p < 2 || e < 1 {
        return Err(bad(format!(
            "conj5.6 needs p prime and e ≥ 1 (p={p}, e={e})"
        )));
    }
    qpoly::check_conj56(p as u64, e as u32)
}

/// Dispatch by id, reading the named parameters from `params`.
pub fn check_conjecture(id: ConjectureId, params: &Params) -> Result<CheckResult> {
    let get = |name: &str| {
        params
            .int(name)
            .ok_or_else(|| Error::BadParams(format!("missing integer parameter `{name}`")))
    };
    let list = |name: &str| {
        params
            .list(name)
            .ok_or_else(|| Error::BadParams(format!("missing list parameter `{name}`")))
    };
    match id {
        ConjectureId::Delannoy2Adic => check_conj31(get("n")?),
        ConjectureId::General => {
            check_conj5_gen(get("n")?, get("r")?, get("eps")?, list("a")?, list("b")?)
        }
        ConjectureId::PowerOfTwoA => check_conj5_pow2(false, get("n")?, get("r")?),
        ConjectureId::PowerOfTwoB => check_conj5_pow2(true, get("n")?, get("r")?),
        ConjectureId::Cases => check_conj5_cases(get("n")?, get("s")?, get("t")?),
        ConjectureId::QSquare => check_conj56(get("p")?, get("e")?),
    }
}
