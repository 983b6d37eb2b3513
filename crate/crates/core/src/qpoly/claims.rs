use super::{cyclotomic, qbinom, qint, qint_in_power, QPoly, QuotientRing};
use crate::check::{CheckResult, Params, Quantity};
use crate::error::{Error, Result};
use crate::exact::{binom, gcd_many_i64, int, is_prime};
use crate::identities::i_value;

/// `Σ_k [n k][m h−k] q^{(n−k)(h−k)} = [m+n h]`.
pub fn check_qchu(m: u64, n: u64, h: u64) -> CheckResult {
    let lhs: QPoly = (0..=h.min(n))
        .map(|k| {
            let e = ((n - k) * (h - k)) as usize;
            (&qbinom(n, k as i64) * &qbinom(m, (h - k) as i64)).shift(e)
        })
        .sum();
    let rhs = qbinom(m + n, h as i64);
    let params = Params::new()
        .with("m", m as i64)
        .with("n", n as i64)
        .with("h", h as i64);
    CheckResult::equality("qchu", params, lhs.into(), rhs.into())
}

/// `[ad+b rd+s]_q ≡ C(a,r)·[b s]_q (mod Φ_d(q))` for `0 ≤ b, s < d`.
pub fn check_qlucas(a: u64, b: u64, r: u64, s: u64, d: u64) -> Result<CheckResult> {
    if d < 2 || b >= d || s >= d {
        return Err(Error::BadDomain(format!(
            "q-Lucas needs d ≥ 2 and 0 ≤ b, s ≤ d−1 (d={d}, b={b}, s={s})"
        )));
    }
    let ring = QuotientRing::new(cyclotomic(d))?;
    let lhs = ring.reduce(&qbinom(a * d + b, (r * d + s) as i64));
    let rhs = ring.reduce(&qbinom(b, s as i64).scale(&binom(a as i64, r as i64)));
    let params = Params::new()
        .with("a", a as i64)
        .with("b", b as i64)
        .with("r", r as i64)
        .with("s", s as i64)
        .with("d", d as i64);
    Ok(CheckResult::poly_congruence(
        "qlucas",
        params,
        lhs,
        ring.modulus().clone(),
        rhs,
    ))
}

/// The four weighted sums whose divisibility by `[d]_q` is asserted, with
/// `d = gcd(a, b, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm51Variant {
    /// weight `q^{k²}`, with `[n−1 k]²`
    SquareWeight = 1,
    /// weight `q^{k²+2k}`, with `[n−1 k]²`
    ShiftedSquareWeight = 2,
    /// weight `q^k`
    Linear = 3,
    /// weight `q^{n−k−1}`
    Reversed = 4,
}

impl Thm51Variant {
    pub fn from_index(v: i64) -> Result<Self> {
        Ok(match v {
            1 => Thm51Variant::SquareWeight,
            2 => Thm51Variant::ShiftedSquareWeight,
            3 => Thm51Variant::Linear,
            4 => Thm51Variant::Reversed,
            _ => return Err(Error::BadParams(format!("variant must be 1..4, got {v}"))),
        })
    }

    pub fn claim_id(self) -> &'static str {
        match self {
            Thm51Variant::SquareWeight => "thm5.1v1",
            Thm51Variant::ShiftedSquareWeight => "thm5.1v2",
            Thm51Variant::Linear => "thm5.1v3",
            Thm51Variant::Reversed => "thm5.1v4",
        }
    }

    fn weight(self, n: u64, k: u64) -> usize {
        (match self {
            Thm51Variant::SquareWeight => k * k,
            Thm51Variant::ShiftedSquareWeight => k * k + 2 * k,
            Thm51Variant::Linear => k,
            Thm51Variant::Reversed => n - k - 1,
        }) as usize
    }

    fn has_square_factor(self) -> bool {
        matches!(
            self,
            Thm51Variant::SquareWeight | Thm51Variant::ShiftedSquareWeight
        )
    }
}

fn validate_ab(a: &[i64], b: &[i64]) -> Result<()> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::BadParams(format!(
            "need equal non-empty a and b lists (got {} and {})",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|&x| x < 0) {
        return Err(Error::BadDomain("a_i and b_i must be nonnegative".into()));
    }
    Ok(())
}

/// Factors of the `k`-th term, weight excluded.
fn thm51_factors(variant: Thm51Variant, n: u64, a: &[i64], b: &[i64], k: u64) -> Vec<QPoly> {
    let mut out = Vec::with_capacity(a.len() + 2);
    if variant.has_square_factor() {
        let f = qbinom(n - 1, k as i64);
        out.push(f.clone());
        out.push(f);
    }
    for (&ai, &bi) in a.iter().zip(b) {
        out.push(qbinom(ai as u64 + k, bi + k as i64));
    }
    out
}

/// The full sum polynomial, with no reduction. Expensive for large inputs;
/// the checker works in the quotient ring instead.
pub fn thm51_sum_full(variant: Thm51Variant, n: u64, a: &[i64], b: &[i64]) -> Result<QPoly> {
    validate_ab(a, b)?;
    Ok((0..n)
        .map(|k| {
            thm51_factors(variant, n, a, b, k)
                .iter()
                .fold(QPoly::one(), |acc, f| &acc * f)
                .shift(variant.weight(n, k))
        })
        .sum())
}

pub fn check_thm51(variant: Thm51Variant, n: u64, a: &[i64], b: &[i64]) -> Result<CheckResult> {
    validate_ab(a, b)?;
    if n == 0 {
        return Err(Error::BadDomain("n must be positive".into()));
    }
    let mut all: Vec<i64> = a.iter().chain(b).copied().collect();
    all.push(n as i64);
    let d = gcd_many_i64(&all) as u64;
    let ring = QuotientRing::new(qint(d))?;
    let residue: QPoly = (0..n)
        .map(|k| {
            thm51_factors(variant, n, a, b, k)
                .iter()
                .fold(ring.qpow(variant.weight(n, k)), |acc, f| {
                    ring.mul(&acc, &ring.reduce(f))
                })
        })
        .sum();
    let residue = ring.reduce(&residue);
    let params = Params::new()
        .with("n", n as i64)
        .with_list("a", a)
        .with_list("b", b);
    Ok(CheckResult::poly_congruence(
        variant.claim_id(),
        params,
        residue,
        ring.modulus().clone(),
        QPoly::zero(),
    ))
}

/// `Σ_{k=0}^{n} [n k]² q^{k²−k} = 2·[2n−1 n]_q`, `n ≥ 1`.
pub fn check_lemma55(n: u64) -> Result<CheckResult> {
    if n == 0 {
        return Err(Error::BadDomain("lem5.5 needs n ≥ 1".into()));
    }
    let lhs: QPoly = (0..=n)
        .map(|k| {
            let b = qbinom(n, k as i64);
            (&b * &b).shift((k * k - k) as usize)
        })
        .sum();
    let rhs = qbinom(2 * n - 1, n as i64).scale(&int(2));
    Ok(CheckResult::equality(
        "lem5.5",
        Params::new().with("n", n as i64),
        lhs.into(),
        rhs.into(),
    ))
}

/// `Σ_{k<n} q^{k²−k}[n+k k]²[n−1 k]² ≡ 2·I(n/2)·(1−q^n)/(1−q²)` for even
/// `n` and `≡ 0` for odd `n`, modulo `[n]_q`.
pub fn check_thm54(n: u64) -> Result<CheckResult> {
    if n == 0 {
        return Err(Error::BadDomain("thm5.4 needs n ≥ 1".into()));
    }
    let ring = QuotientRing::new(qint(n))?;
    let lhs: QPoly = (0..n)
        .map(|k| {
            let x = ring.mul(
                &ring.reduce(&qbinom(n + k, k as i64)),
                &ring.reduce(&qbinom(n - 1, k as i64)),
            );
            let sq = ring.mul(&x, &x);
            ring.mul(&ring.qpow((k * k - k) as usize), &sq)
        })
        .sum();
    let lhs = ring.reduce(&lhs);
    let rhs = if n.is_multiple_of(2) {
        // (1 − q^n)/(1 − q²) = 1 + q² + ... + q^{n−2}
        let even = qint_in_power(n / 2, 2);
        even.scale(&(int(2) * i_value(n / 2)?))
    } else {
        QPoly::zero()
    };
    Ok(CheckResult::poly_congruence(
        "thm5.4",
        Params::new().with("n", n as i64),
        lhs,
        ring.modulus().clone(),
        ring.reduce(&rhs),
    ))
}

/// `((1 − q^n)/(1 − q^{n/p}))²`, the square of `[p]_{q^{n/p}}`.
pub fn conj56_modulus(p: u64, n: u64) -> QPoly {
    qint_in_power(p, n / p).pow(2)
}

/// `Φ_p(q^{n/p})²`; equal to [`conj56_modulus`] because `Φ_p = [p]_q` for
/// prime `p`.
pub fn conj56_modulus_cyclotomic(p: u64, n: u64) -> QPoly {
    cyclotomic(p).substitute_power((n / p) as usize).pow(2)
}

/// For `n = p^e`:
/// `Σ_{k<n} q^{(n−k)²}[n+k k]²[n−1 k]² ≡ q^{(n−1)²}[n]_q (mod [p]_{q^{n/p}}²)`.
///
/// A nonzero difference is a counterexample, reported through `pass`.
pub fn check_conj56(p: u64, e: u32) -> Result<CheckResult> {
    if !is_prime(p) || e == 0 {
        return Err(Error::BadDomain(format!(
            "conj5.6 needs p prime and e ≥ 1 (p={p}, e={e})"
        )));
    }
    let n = p
        .checked_pow(e)
        .filter(|&n| n <= 1024)
        .ok_or_else(|| Error::BadDomain(format!("p^e too large (p={p}, e={e})")))?;
    let ring = QuotientRing::new(conj56_modulus(p, n))?;
    let lhs: QPoly = (0..n)
        .map(|k| {
            let x = ring.mul(
                &ring.reduce(&qbinom(n + k, k as i64)),
                &ring.reduce(&qbinom(n - 1, k as i64)),
            );
            let sq = ring.mul(&x, &x);
            ring.mul(&ring.qpow(((n - k) * (n - k)) as usize), &sq)
        })
        .sum();
    let lhs = ring.reduce(&lhs);
    let rhs = ring.reduce(&qint(n).shift(((n - 1) * (n - 1)) as usize));
    let params = Params::new().with("p", p as i64).with("e", e as i64);
    Ok(CheckResult::poly_congruence(
        "conj5.6",
        params,
        lhs,
        ring.modulus().clone(),
        rhs,
    ))
}

impl CheckResult {
    /// The residue as a polynomial, for q-claims.
    pub fn residue_poly(&self) -> Option<&QPoly> {
        match &self.residue {
            Quantity::Poly(p) => Some(p),
            Quantity::Int(_) => None,
        }
    }
}
