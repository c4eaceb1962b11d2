//! Independent oracles for the integration tests. Nothing here calls the
//! library's formulas: brackets are power sums, binomials come from the
//! q-Pascal table, and laws come from enumerating every path or outcome.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type R = BigRational;

pub fn r(n: i64, d: i64) -> R {
    R::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow(x: &R, e: u32) -> R {
    (0..e).fold(R::one(), |acc, _| acc * x)
}

/// `[k] = 1 + q + ... + q^(k-1)`.
pub fn br(k: i64, q: &R) -> R {
    assert!(k >= 0, "power-sum bracket needs k >= 0");
    (0..k as u32).fold(R::zero(), |acc, i| acc + pow(q, i))
}

/// Rows `0..=n_max` of the q-Pascal triangle `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn pascal(n_max: usize, q: &R) -> Vec<Vec<R>> {
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { R::zero() };
                let right = if k < n { pow(q, k as u32) * &prev[k] } else { R::zero() };
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn choose(n: u64, k: u64) -> R {
    if k > n {
        return R::zero();
    }
    (0..k).fold(R::one(), |acc, i| acc * r((n - i) as i64, 1) / r((i + 1) as i64, 1))
}

/// Law of the number of nonzeros in `n` q-Bernoulli trials, where a trial
/// after `z` zeros so far is nonzero with probability `q^z p`.
pub fn bernoulli_paths(n: u32, p: &R, q: &R) -> BTreeMap<u32, R> {
    let mut law = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let (mut prob, mut zeros, mut ones) = (R::one(), 0u32, 0u32);
        for step in 0..n {
            let nonzero_prob = pow(q, zeros) * p;
            if mask >> step & 1 == 1 {
                prob *= nonzero_prob;
                ones += 1;
            } else {
                prob *= R::one() - nonzero_prob;
                zeros += 1;
            }
        }
        *law.entry(ones).or_insert_with(R::zero) += prob;
    }
    law.retain(|_, v| !v.is_zero());
    law
}

/// Law of the number of marked draws from an urn with `m` marked and `u`
/// unmarked balls, each draw returning `s + 1` copies (`s = -1`: no
/// replacement). With counts `M`, `U` the next draw is marked with
/// probability `[M]/[M+U]` and unmarked with probability `q^M [U]/[M+U]`.
pub fn urn_paths(m: i64, u: i64, s: i64, n: u32, q: &R) -> BTreeMap<u32, R> {
    let mut law = BTreeMap::new();
    'paths: for mask in 0u32..(1 << n) {
        let (mut big_m, mut big_u, mut prob, mut ones) = (m, u, R::one(), 0u32);
        for step in 0..n {
            let total = br(big_m + big_u, q);
            if mask >> step & 1 == 1 {
                if big_m <= 0 {
                    continue 'paths;
                }
                prob *= br(big_m, q) / &total;
                big_m += s;
                ones += 1;
            } else {
                if big_u <= 0 {
                    continue 'paths;
                }
                prob *= pow(q, big_m as u32) * br(big_u, q) / &total;
                big_u += s;
            }
        }
        *law.entry(ones).or_insert_with(R::zero) += prob;
    }
    law.retain(|_, v| !v.is_zero());
    law
}

/// Range `max - min` of `n` draws with weights `q^i / [M+1]`, over all tuples.
pub fn range_brute(max_index: u32, n: u32, q: &R) -> BTreeMap<u32, R> {
    let side = max_index + 1;
    let norm = pow(&br(side.into(), q), n);
    let mut law = BTreeMap::new();
    for code in 0..side.pow(n) {
        let (mut c, mut lo, mut hi, mut weight) = (code, u32::MAX, 0, R::one());
        for _ in 0..n {
            let x = c % side;
            c /= side;
            lo = lo.min(x);
            hi = hi.max(x);
            weight *= pow(q, x);
        }
        *law.entry(hi - lo).or_insert_with(R::zero) += weight / &norm;
    }
    law.retain(|_, v| !v.is_zero());
    law
}

/// `prod_{i>=0} (1 - p q^i)` in floating point, for sanity bounds only.
pub fn euler_product_f64(p: f64, q: f64) -> f64 {
    let mut acc = 1.0;
    let mut t = p;
    while t > 1e-18 {
        acc *= 1.0 - t;
        t *= q;
    }
    acc
}

/// The grid used across the acceptance criteria.
pub fn grid_qs() -> Vec<R> {
    vec![r(1, 4), r(1, 2), r(3, 4), r(1, 1)]
}

pub fn grid_ps() -> Vec<R> {
    vec![r(1, 5), r(1, 2), r(4, 5)]
}
