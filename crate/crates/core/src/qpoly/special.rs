use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::One;

use super::QPoly;
use crate::exact::Integer;

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn qint(n: u64) -> QPoly {
    QPoly::from_coeffs(vec![Integer::one(); n as usize])
}

/// `[p]_{q^s} = 1 + q^s + ... + q^{(p-1)s}`.
pub fn qint_in_power(p: u64, s: u64) -> QPoly {
    qint(p).substitute_power(s as usize)
}

/// Gaussian binomial `[n k]_q`, zero outside `0 ≤ k ≤ n`.
///
/// Built as `∏_{j≤k} (1 − q^{n−j+1}) / (1 − q^j)`, dividing after each
/// multiplication; every partial quotient is `[n j]_q`, so each division is
/// exact.
pub fn qbinom(n: u64, k: i64) -> QPoly {
    if k < 0 || k as u64 > n {
        return QPoly::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = QPoly::one();
    for j in 1..=k {
        acc = acc
            .mul_one_minus_qpow((n - j + 1) as usize)
            .div_one_minus_qpow(j as usize)
            .expect("partial q-binomial product divides exactly");
    }
    acc
}

static CYCLOTOMIC_CACHE: LazyLock<RwLock<HashMap<u64, QPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn divisors(d: u64) -> Vec<u64> {
    (1..=d).filter(|e| d.is_multiple_of(*e)).collect()
}

/// Cyclotomic polynomial `Φ_d(q)`, from `q^d − 1` divided by `Φ_e` for each
/// proper divisor `e` of `d`. Results are memoized process-wide.
pub fn cyclotomic(d: u64) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = CYCLOTOMIC_CACHE.read().expect("cache poisoned").get(&d) {
        return p.clone();
    }
    let mut acc = &QPoly::monomial(Integer::one(), d as usize) - &QPoly::one();
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        let (quot, rem) = acc
            .divrem(&cyclotomic(e))
            .expect("cyclotomic polynomials are monic");
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    // concurrent callers may race here; both compute the same value
    CYCLOTOMIC_CACHE
        .write()
        .expect("cache poisoned")
        .entry(d)
        .or_insert(acc)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binom, int};
    use num_integer::Integer as _;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    /// q-Pascal table, independent of the product formula.
    fn qpascal(n: u64) -> Vec<QPoly> {
        let mut row = vec![QPoly::one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(m as usize + 1);
            for k in 0..=m as usize {
                let upper = row.get(k).map(|x| x.shift(k)).unwrap_or_default();
                let lower = if k > 0 {
                    row[k - 1].clone()
                } else {
                    QPoly::zero()
                };
                next.push(&upper + &lower);
            }
            row = next;
        }
        row
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(0), QPoly::zero());
        assert_eq!(qint(1), QPoly::one());
        assert_eq!(qint(3), p(&[1, 1, 1]));
        assert_eq!(qint_in_power(3, 2), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(9, 0), QPoly::one());
        assert_eq!(qbinom(3, 5), QPoly::zero());
        assert_eq!(qbinom(3, -1), QPoly::zero());
    }

    #[test]
    fn qbinom_matches_pascal_table() {
        for n in 0..=30 {
            let row = qpascal(n);
            for k in 0..=n {
                assert_eq!(qbinom(n, k as i64), row[k as usize], "[{n} {k}]");
            }
        }
    }

    #[test]
    fn qbinom_symmetry_pascal_and_q_one() {
        for n in 1..=30u64 {
            for k in 0..=n as i64 {
                let b = qbinom(n, k);
                assert_eq!(b, qbinom(n, n as i64 - k));
                assert_eq!(b.eval_at_one(), binom(n as i64, k));
                let rhs = &qbinom(n - 1, k).shift(k as usize) + &qbinom(n - 1, k - 1);
                assert_eq!(b, rhs);
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_factorization_and_degree() {
        for d in 2..=60u64 {
            let prod = divisors(d)
                .into_iter()
                .filter(|&e| e > 1)
                .fold(QPoly::one(), |acc, e| &acc * &cyclotomic(e));
            assert_eq!(prod, qint(d), "d = {d}");
        }
        for d in 1..=60u64 {
            let totient = (1..=d).filter(|i| i.gcd(&d) == 1).count();
            assert_eq!(cyclotomic(d).degree(), Some(totient));
            assert_eq!(cyclotomic(d).leading(), Some(&int(1)));
        }
    }
}
