//! Möbius function tables and the truncated series for `1/ζ(2)`.

use crate::error::{Error, Result};

/// Values of the Möbius function `μ(n)` for `1 ≤ n ≤ limit`.
///
/// Built once with a linear sieve and immutable afterwards, so a table can be
/// shared freely between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoebiusTable {
    // values[0] is unused padding so that values[n] = μ(n).
    values: Vec<i8>,
}

impl MoebiusTable {
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// `μ(n)`. Panics if `n` is zero or beyond the sieved limit.
    pub fn mu(&self, n: usize) -> i8 {
        assert!(n >= 1 && n <= self.limit(), "mu({n}) outside 1..={}", self.limit());
        self.values[n]
    }

    pub fn get(&self, n: usize) -> Option<i8> {
        if n == 0 {
            None
        } else {
            self.values.get(n).copied()
        }
    }

    /// Iterates over `(n, μ(n))` for `n = 1..=limit`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.values.iter().copied().enumerate().skip(1)
    }
}

/// Sieves `μ(n)` for `1 ≤ n ≤ limit`.
pub fn moebius_sieve(limit: usize) -> Result<MoebiusTable> {
    if limit == 0 {
        return Err(Error::InvalidArgument("Möbius sieve limit must be at least 1".into()));
    }
    let mut values = vec![0i8; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut primes: Vec<usize> = Vec::new();
    values[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            values[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > limit {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                values[m] = 0;
                break;
            }
            values[m] = -values[i];
        }
    }
    Ok(MoebiusTable { values })
}

/// `Σ_{q ≤ Q} μ(q)/q²`, summed with Neumaier compensation.
///
/// The tail is bounded by `Σ_{q > Q} 1/q² < 1/Q`, so the result is within
/// `1/Q` of `6/π²`.
pub fn partial_zeta_inverse(order: usize) -> Result<f64> {
    let table = moebius_sieve(order)?;
    Ok(neumaier_sum(table.iter().filter(|&(_, m)| m != 0).map(|(q, m)| {
        let q = q as f64;
        f64::from(m) / (q * q)
    })))
}

pub(crate) fn neumaier_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for t in terms {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            carry += (sum - s) + t;
        } else {
            carry += (t - s) + sum;
        }
        sum = s;
    }
    sum + carry
}

/// Euler's totient `φ(n)` for `0 ≤ n ≤ limit` (with `φ(0) = 0`).
pub fn totient_sieve(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for i in 2..=limit {
        if phi[i] == i as u64 {
            for j in (i..=limit).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    phi
}
