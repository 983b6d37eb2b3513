//! Change of basis from powers of `x` to the products
//! `∏_{i=1}^{j} (x − (k+i−1)(k+i))`.
//!
//! Substituting `x = m(m+1)` turns each basis product into
//! `(m+k+1)_j (m−k−j+1)_j`, which is what lets `m^r (m+1)^r C(m+k,2k)` be
//! rewritten as an integer combination of `C(m+k+j, 2k+2j) (2k+1)_{2j}`.

use num_traits::{One, Zero};

use crate::check::{CheckResult, Params, Quantity};
use crate::exact::{binom, int, rising_factorial, Integer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonBasisCoeffs {
    pub k: u64,
    pub r: u64,
    /// `a_0 .. a_r`
    pub coeffs: Vec<Integer>,
}

/// Node `(k+j−1)(k+j)` of the `j`-th basis factor, `j ≥ 1`.
pub fn node(k: u64, j: u64) -> Integer {
    int((k + j - 1) as i64) * int((k + j) as i64)
}

/// Coefficients `a_j(k, r)` with `x^r = Σ_j a_j ∏_{i≤j}(x − node(k,i))`.
///
/// Peels `a_0` by evaluating at the first node, divides out the linear
/// factor, and repeats on the quotient with the next node.
pub fn newton_coeffs(k: u64, r: u64) -> NewtonBasisCoeffs {
    // ascending coefficients of x^r
    let mut poly = vec![Integer::zero(); r as usize + 1];
    poly[r as usize] = Integer::one();
    let mut coeffs = Vec::with_capacity(r as usize + 1);
    for j in 1..=r {
        let x = node(k, j);
        // synthetic division by (x − node); the remainder is poly(node)
        let deg = poly.len() - 1;
        let mut quot = vec![Integer::zero(); deg];
        let mut carry = Integer::zero();
        for i in (0..=deg).rev() {
            let v = &poly[i] + &carry * &x;
            if i == 0 {
                coeffs.push(v);
            } else {
                quot[i - 1] = v.clone();
                carry = v;
            }
        }
        poly = quot;
    }
    coeffs.push(poly.pop().expect("constant quotient"));
    NewtonBasisCoeffs { k, r, coeffs }
}

impl NewtonBasisCoeffs {
    /// Evaluates `Σ_j a_j ∏_{i≤j}(x − node(k,i))` at `x`.
    pub fn reconstruct_at(&self, x: &Integer) -> Integer {
        let mut total = Integer::zero();
        let mut basis = Integer::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                basis *= x - node(self.k, j as u64);
            }
            total += a * &basis;
        }
        total
    }

    /// Checks the reconstruction at `r + 2` points, enough for degree `r`.
    pub fn reconstructs_power(&self) -> bool {
        (0..self.r as i64 + 2).all(|t| {
            let x = int(t * 7 - 3);
            self.reconstruct_at(&x) == num_traits::pow(x.clone(), self.r as usize)
        })
    }
}

/// `Σ_j a_j(k,r) C(m+k+j, 2k+2j) (2k+1)_{2j}`.
pub fn expanded_side(c: &NewtonBasisCoeffs, m: u64) -> Integer {
    let (k, m) = (c.k as i64, m as i64);
    c.coeffs
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let j = j as i64;
            a * binom(m + k + j, 2 * k + 2 * j) * rising_factorial(&int(2 * k + 1), 2 * j as u64)
        })
        .sum()
}

/// `m^r (m+1)^r C(m+k, 2k)`.
pub fn direct_side(k: u64, r: u64, m: u64) -> Integer {
    let (k, m) = (k as i64, m as i64);
    num_traits::pow(int(m * (m + 1)), r as usize) * binom(m + k, 2 * k)
}

/// Checks `m^r(m+1)^r C(m+k,2k) = Σ_j a_j(k,r) C(m+k+j,2k+2j)(2k+1)_{2j}`
/// for every `0 ≤ m ≤ m_max`. On failure the record carries the first bad
/// `m`; otherwise it carries the values at `m_max`.
pub fn check_coeff_identity(k: u64, r: u64, m_max: u64) -> CheckResult {
    let coeffs = newton_coeffs(k, r);
    let mut last = (Integer::zero(), Integer::zero());
    let mut at = m_max;
    for m in 0..=m_max {
        let lhs = direct_side(k, r, m);
        let rhs = expanded_side(&coeffs, m);
        let bad = lhs != rhs;
        last = (lhs, rhs);
        if bad {
            at = m;
            break;
        }
    }
    let params = Params::new()
        .with("k", k as i64)
        .with("r", r as i64)
        .with("m", at as i64);
    CheckResult::equality(
        "lem2.1",
        params,
        Quantity::Int(last.0),
        Quantity::Int(last.1),
    )
}

/// `(2k+1)^{2r} = Σ_{i=0}^{r} C(r,i) 4^i k^i (k+1)^i`.
pub fn check_odd_power_expansion(k: i64, r: u64) -> CheckResult {
    let lhs = num_traits::pow(int(2 * k + 1), 2 * r as usize);
    let base = int(4 * k * (k + 1));
    let rhs: Integer = (0..=r as i64)
        .map(|i| binom(r as i64, i) * num_traits::pow(base.clone(), i as usize))
        .sum();
    let params = Params::new().with("k", k).with("r", r as i64);
    CheckResult::equality("eq2.3", params, Quantity::Int(lhs), Quantity::Int(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{certify_integer, ratio, Rational};

    /// Newton divided differences over the rationals: an independent route
    /// to the same coefficients.
    fn divided_difference_oracle(k: u64, r: u64) -> Vec<Integer> {
        let nodes: Vec<Integer> = (1..=r + 1).map(|j| node(k, j)).collect();
        let mut table: Vec<Rational> = nodes
            .iter()
            .map(|x| Rational::from_integer(num_traits::pow(x.clone(), r as usize)))
            .collect();
        let mut out = vec![table[0].clone()];
        for level in 1..table.len() {
            for i in (level..table.len()).rev() {
                let den = &nodes[i] - &nodes[i - level];
                table[i] = (&table[i] - &table[i - 1]) / Rational::from_integer(den);
            }
            out.push(table[level].clone());
        }
        out.iter()
            .map(|q| certify_integer(&ratio(q.numer().clone(), q.denom().clone())).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(newton_coeffs(2, 1).coeffs, vec![int(6), int(1)]);
        assert_eq!(newton_coeffs(1, 2).coeffs, vec![int(4), int(8), int(1)]);
        assert_eq!(newton_coeffs(0, 0).coeffs, vec![int(1)]);
    }

    #[test]
    fn matches_divided_differences() {
        for k in 0..=8 {
            for r in 0..=8 {
                assert_eq!(newton_coeffs(k, r).coeffs, divided_difference_oracle(k, r));
            }
        }
    }

    #[test]
    fn structural_invariants() {
        for k in 0..=8u64 {
            for r in 0..=8u64 {
                let c = newton_coeffs(k, r);
                assert_eq!(c.coeffs.len(), r as usize + 1);
                assert_eq!(c.coeffs[r as usize], int(1));
                assert_eq!(
                    c.coeffs[0],
                    num_traits::pow(int((k * (k + 1)) as i64), r as usize)
                );
                assert!(c.reconstructs_power());
            }
        }
    }

    #[test]
    fn coeff_identity_examples() {
        assert!(check_coeff_identity(0, 0, 5).pass);
        assert!(check_coeff_identity(1, 1, 10).pass);
        assert!(check_coeff_identity(3, 4, 20).pass);
    }

    #[test]
    fn odd_power_examples() {
        let r = check_odd_power_expansion(0, 3);
        assert!(r.pass);
        assert_eq!(r.lhs, Quantity::Int(int(1)));
        let r = check_odd_power_expansion(2, 1);
        assert_eq!(r.lhs, Quantity::Int(int(25)));
        assert!(r.pass);
        assert!(check_odd_power_expansion(-1, 2).pass);
    }
}
