//! Scalar sequences: binomial coefficients, falling factorials, Lah numbers,
//! Bernoulli numbers (modern convention, B_1 = -1/2), Genocchi numbers, and
//! Bernoulli values at 1/2.
//!
//! Bernoulli numbers are memoized in a process-wide cache because every layer
//! above this one (Bernoulli polynomials, power sums, Faulhaber coefficients,
//! reciprocal polynomials) keeps asking for the same prefix of the sequence.

use crate::error::{Error, Result};
use crate::rational::{pow2, Int, Rational};
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

/// Generalized binomial coefficient `C(x, k)` for any integer `x` and
/// non-negative `k`: the product x(x-1)...(x-k+1)/k!.  Always an integer;
/// for negative `x` this is `(-1)^k C(-x+k-1, k)`.
pub fn binomial(x: i64, k: u32) -> Int {
    let mut acc = Int::one();
    for i in 0..k as i64 {
        acc *= Int::from(x - i);
        // Exact at every step: the partial product is C(x, i+1) * (i+1)!
        // divided by i!, so division by (i+1) leaves an integer.
        acc /= Int::from(i + 1);
    }
    acc
}

/// Falling factorial `(x)_n = x(x-1)...(x-n+1)` over the rationals.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n as i64 {
        acc *= x - Rational::from_integer(Int::from(i));
    }
    acc
}

/// Integer falling factorial `(x)_n` for integer `x`.
pub fn falling_factorial_int(x: i64, n: u32) -> Int {
    let mut acc = Int::one();
    for i in 0..n as i64 {
        acc *= Int::from(x - i);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for i in 2..=n as i64 {
        acc *= Int::from(i);
    }
    acc
}

/// Signed Lah number `L(n, k) = (-1)^n (n!/k!) C(n-1, k-1)` for 1 <= k <= n.
pub fn lah(n: u32, k: u32) -> Result<Int> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("Lah number requires 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let mut acc = binomial(n as i64 - 1, k - 1);
    // n!/k! = n(n-1)...(k+1)
    for i in (k as i64 + 1)..=(n as i64) {
        acc *= Int::from(i);
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// Process-wide Bernoulli cache.  Reads share the lock; a miss extends the
/// table under the write lock using the defining recurrence
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0` for n >= 1.
struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    fn new() -> Self {
        BernoulliCache { values: RwLock::new(vec![Rational::one()]) }
    }

    fn get(&self, n: u32) -> Rational {
        let n = n as usize;
        {
            let values = self.values.read().expect("Bernoulli cache poisoned");
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        let mut values = self.values.write().expect("Bernoulli cache poisoned");
        while values.len() <= n {
            let m = values.len(); // compute B_m from B_0..B_{m-1}
            let mut sum = Rational::zero();
            for (k, bk) in values.iter().enumerate() {
                sum += Rational::from_integer(binomial(m as i64 + 1, k as u32)) * bk;
            }
            // C(m+1, m) = m+1
            let bm = -sum / Rational::from_integer(Int::from(m as i64 + 1));
            values.push(bm);
        }
        values[n].clone()
    }
}

fn cache() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// Bernoulli number `B_n` in the modern convention (`B_1 = -1/2`).
pub fn bernoulli_number(n: u32) -> Rational {
    cache().get(n)
}

/// Genocchi number `G_n = 2 (1 - 2^n) B_n`; always an (odd-indexed zero
/// aside) integer.
pub fn genocchi(n: u32) -> Rational {
    let two = Rational::from_integer(Int::from(2));
    two * (Rational::one() - pow2(n as i32)) * bernoulli_number(n)
}

/// Bernoulli polynomial value at one half: `B_n(1/2) = (2^(1-n) - 1) B_n`.
pub fn bernoulli_half(n: u32) -> Rational {
    (pow2(1 - n as i32) - Rational::one()) * bernoulli_number(n)
}
