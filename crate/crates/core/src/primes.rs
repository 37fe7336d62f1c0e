//! Prime generation with the `i (ln i + ln ln i)` bound, the unary cost of
//! writing the first `n` primes, and the uniqueness oracle for sums of
//! fractions over distinct prime denominators.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The primes below the point where the `i (ln i + ln ln i)` bound starts to hold.
const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

/// The first `n` primes, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    primes: Vec<u64>,
}

impl PrimeList {
    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The `i`-th prime, 1-based.
    pub fn nth(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.primes.get(k).copied())
    }

    pub fn last(&self) -> u64 {
        *self.primes.last().expect("prime lists are never empty")
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.primes
    }
}

/// Returns exactly the first `n` primes.
///
/// For `n >= 6` the sieve runs up to `ceil(2 n ln n)`, which bounds the
/// `n`-th prime; below that a fixed table is used.
pub fn first_n_primes(n: usize) -> Result<PrimeList> {
    if n == 0 {
        return Err(Error::EmptyInput("first_n_primes needs n >= 1"));
    }
    if n < 6 {
        return Ok(PrimeList {
            primes: SMALL_PRIMES[..n].to_vec(),
        });
    }
    let nf = n as f64;
    let mut limit = (2.0 * nf * nf.ln()).ceil() as usize;
    loop {
        let mut primes = sieve(limit);
        if primes.len() >= n {
            primes.truncate(n);
            return Ok(PrimeList { primes });
        }
        // Unreachable while the bound holds.
        limit *= 2;
    }
}

/// All primes `<= limit` by the sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for k in 2..=limit {
        if composite[k] {
            continue;
        }
        out.push(k as u64);
        let mut m = k.saturating_mul(k);
        while m <= limit {
            composite[m] = true;
            m += k;
        }
    }
    out
}

/// `i (ln i + ln ln i)`, an upper bound on the `i`-th prime for `i >= 6`.
pub fn prime_upper_bound(i: u64) -> Result<f64> {
    if i < 6 {
        return Err(Error::OutOfRange(format!(
            "prime bound requires i >= 6, got {i}"
        )));
    }
    let x = i as f64;
    Ok(x * (x.ln() + x.ln().ln()))
}

/// Total unary digits needed to write the first `n` primes.
pub fn unary_size_of_first_primes(n: usize) -> Result<u64> {
    Ok(first_n_primes(n)?.as_slice().iter().sum())
}

pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Two coefficient lists over the same distinct primes, compared as
/// `a0 + a1/p1 + ... + an/pn` versus `b0 + b1/p1 + ... + bn/pn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaInstance {
    primes: Vec<u64>,
    a: Vec<i64>,
    b: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub equal_sums: bool,
    pub componentwise_equal: bool,
}

impl LemmaInstance {
    /// Checked constructor: also requires `|a_i - b_i| < p_i` for every prime.
    pub fn new(primes: Vec<u64>, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        let inst = Self::new_unchecked(primes, a, b)?;
        for (i, &p) in inst.primes.iter().enumerate() {
            let gap = (inst.a[i + 1] as i128 - inst.b[i + 1] as i128).unsigned_abs();
            if gap >= p as u128 {
                return Err(Error::OutOfRange(format!(
                    "|a_{k} - b_{k}| = {gap} is not below p_{k} = {p}",
                    k = i + 1
                )));
            }
        }
        Ok(inst)
    }

    /// Skips the coefficient-gap hypothesis, for exhibiting counterexamples.
    /// Shape and prime validity are still enforced.
    pub fn new_unchecked(primes: Vec<u64>, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != primes.len() + 1 || b.len() != primes.len() + 1 {
            return Err(Error::Shape(format!(
                "{} primes need coefficient lists of length {}, got {} and {}",
                primes.len(),
                primes.len() + 1,
                a.len(),
                b.len()
            )));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidPrimes(format!("{p} is not prime")));
        }
        let mut sorted = primes.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPrimes("duplicate primes".into()));
        }
        Ok(LemmaInstance { primes, a, b })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn sum(&self, coeffs: &[i64]) -> Rational {
        let mut total = Rational::from_integer(coeffs[0]);
        for (&p, &c) in self.primes.iter().zip(&coeffs[1..]) {
            total += &Rational::new(BigInt::from(c), BigInt::from(p)).expect("primes are nonzero");
        }
        total
    }
}

/// Evaluates both sides exactly and compares the coefficient lists.
/// Inside the hypothesis the two answers always coincide.
pub fn lemma1_equal_iff_componentwise(inst: &LemmaInstance) -> LemmaOutcome {
    LemmaOutcome {
        equal_sums: inst.sum(&inst.a) == inst.sum(&inst.b),
        componentwise_equal: inst.a == inst.b,
    }
}
