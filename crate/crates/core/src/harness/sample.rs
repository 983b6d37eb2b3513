//! Seeded tuple generators for the list-parameter claims.
//!
//! Uniform draws would almost always give `gcd = 1`, where every claim holds
//! vacuously, so each sampler first draws a common divisor `d` and then
//! draws `n`, `a_i`, `b_i` as multiples of it. `d = 1` is in the pool, which
//! covers the unstructured case.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::Params;

/// Seed used by every default scan.
pub const DEFAULT_SEED: u64 = 0x4170_6572_7944; // "AperyD"

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn multiple_up_to(r: &mut ChaCha8Rng, d: i64, max: i64) -> i64 {
    d * r.gen_range(0..=max / d)
}

/// `(n, a, b)` with `m ≤ 3`, `0 ≤ a_i, b_i ≤ 30`, `1 ≤ n ≤ 60`.
pub fn gcd_binom_tuples(seed: u64, count: usize) -> Vec<Params> {
    let mut r = rng(seed, 1);
    (0..count)
        .map(|_| {
            let d = r.gen_range(1..=12i64);
            let n = d * r.gen_range(1..=60 / d);
            let m = r.gen_range(0..=3usize);
            let a: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 30)).collect();
            let b: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 30)).collect();
            Params::new()
                .with("n", n)
                .with_list("a", &a)
                .with_list("b", &b)
        })
        .collect()
}

/// `a_i ∈ {0, n, 2n}`, `b_i = 0`, `m ∈ {1, 2}`, `1 ≤ n ≤ max_n`.
pub fn gcd_binom_structured(max_n: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let choices = [0, n, 2 * n];
        for &x in &choices {
            out.push(
                Params::new()
                    .with("n", n)
                    .with_list("a", &[x])
                    .with_list("b", &[0]),
            );
            for &y in &choices {
                out.push(
                    Params::new()
                        .with("n", n)
                        .with_list("a", &[x, y])
                        .with_list("b", &[0, 0]),
                );
            }
        }
    }
    out
}

/// `(n, a, b)` with `m ∈ 1..=3`, `|a_i| ≤ 30`, `0 ≤ b_i ≤ 30`, `n ≤ 60`.
pub fn gen_bino_tuples(seed: u64, count: usize) -> Vec<Params> {
    let mut r = rng(seed, 2);
    (0..count)
        .map(|_| {
            let d = r.gen_range(1..=12i64);
            let n = d * r.gen_range(1..=60 / d);
            let m = r.gen_range(1..=3usize);
            let a: Vec<i64> = (0..m)
                .map(|_| {
                    let v = multiple_up_to(&mut r, d, 30);
                    if r.gen_bool(0.5) {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            let b: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 30)).collect();
            Params::new()
                .with("n", n)
                .with_list("a", &a)
                .with_list("b", &b)
        })
        .collect()
}

/// `a_i ∈ {±n, ±2n}`, `b_i = 0`, `m ∈ {1, 2}`.
pub fn gen_bino_structured(max_n: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let choices = [-2 * n, -n, n, 2 * n];
        for &x in &choices {
            out.push(
                Params::new()
                    .with("n", n)
                    .with_list("a", &[x])
                    .with_list("b", &[0]),
            );
            for &y in &choices {
                out.push(
                    Params::new()
                        .with("n", n)
                        .with_list("a", &[x, y])
                        .with_list("b", &[0, 0]),
                );
            }
        }
    }
    out
}

/// `(n, a, b)` for the q-analogues: `n ≤ 24`, `m ∈ {1, 2}`, `a_i, b_i ≤ 24`,
/// all multiples of a random divisor of `n`.
pub fn thm51_tuples(seed: u64, count: usize) -> Vec<Params> {
    let mut r = rng(seed, 3);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=24i64);
            let divs: Vec<i64> = (1..=n).filter(|d| n % d == 0).collect();
            let d = divs[r.gen_range(0..divs.len())];
            let m = r.gen_range(1..=2usize);
            let a: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 24)).collect();
            let b: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 24)).collect();
            Params::new()
                .with("n", n)
                .with_list("a", &a)
                .with_list("b", &b)
        })
        .collect()
}

/// `(n, r, eps, a, b)` with `m ≤ 2`, `|a_i| ≤ 20`, `b_i ≤ 10`, `r ≤ 2`,
/// `n ≤ 40`.
pub fn conj_gen_tuples(seed: u64, count: usize) -> Vec<Params> {
    let mut r = rng(seed, 4);
    (0..count)
        .map(|_| {
            let d = r.gen_range(1..=10i64);
            let n = d * r.gen_range(1..=40 / d);
            let m = r.gen_range(1..=2usize);
            let a: Vec<i64> = (0..m)
                .map(|_| {
                    let v = multiple_up_to(&mut r, d, 20);
                    if r.gen_bool(0.5) {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            let b: Vec<i64> = (0..m).map(|_| multiple_up_to(&mut r, d, 10)).collect();
            let rr = r.gen_range(0..=2i64);
            let eps = if r.gen_bool(0.5) { 1 } else { -1 };
            Params::new()
                .with("n", n)
                .with("r", rr)
                .with("eps", eps)
                .with_list("a", &a)
                .with_list("b", &b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_in_bounds() {
        assert_eq!(gcd_binom_tuples(7, 50), gcd_binom_tuples(7, 50));
        assert_ne!(gcd_binom_tuples(7, 50), gcd_binom_tuples(8, 50));
        for p in gcd_binom_tuples(DEFAULT_SEED, 500) {
            let n = p.int("n").unwrap();
            assert!((1..=60).contains(&n));
            let (a, b) = (p.list("a").unwrap(), p.list("b").unwrap());
            assert_eq!(a.len(), b.len());
            assert!(a.len() <= 3);
            assert!(a.iter().chain(b).all(|&x| (0..=30).contains(&x)));
        }
        for p in conj_gen_tuples(DEFAULT_SEED, 200) {
            assert!(p.list("a").unwrap().iter().all(|x| x.abs() <= 20));
            assert!(p.list("b").unwrap().iter().all(|&x| (0..=10).contains(&x)));
            assert!((0..=2).contains(&p.int("r").unwrap()));
            assert!((1..=40).contains(&p.int("n").unwrap()));
        }
        for p in thm51_tuples(DEFAULT_SEED, 100) {
            assert!((1..=24).contains(&p.int("n").unwrap()));
        }
    }

    #[test]
    fn samples_are_not_all_trivial() {
        let nontrivial = gcd_binom_tuples(DEFAULT_SEED, 500)
            .iter()
            .filter(|p| {
                let mut v: Vec<i64> = p.list("a").unwrap().to_vec();
                v.extend(p.list("b").unwrap());
                v.push(p.int("n").unwrap());
                crate::exact::gcd_many_i64(&v) > 1
            })
            .count();
        assert!(nontrivial > 250, "only {nontrivial} tuples with gcd > 1");
    }
}
