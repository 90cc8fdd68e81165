// SPDX-License-Identifier: Apache-2.0

//! Primality, factorization, and the multiplicative functions built on it.
//!
//! Factoring trial-divides by the primes below 10^6 and hands whatever
//! composite survives to Brent's variant of Pollard rho. Primality is a
//! deterministic Miller-Rabin test whose witness set is exact below 2^64.

use std::sync::OnceLock;

use crate::arith::{gcd, lcm, mul_mod, pow_mod_unchecked};
use crate::error::{Error, Result};
use crate::special::sieve_primes;

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

// Sinclair's set, valid for all n < 2^64.
const MR_WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

fn small_primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| sieve_primes(TRIAL_DIVISION_BOUND))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    MR_WITNESSES.iter().all(|&w| {
        let a = w % n;
        a == 0 || strong_probable_prime(n, d, s, a)
    })
}

fn strong_probable_prime(n: u64, d: u64, s: u32, a: u64) -> bool {
    let mut x = pow_mod_unchecked(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// An integer together with its prime-power decomposition, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit prime powers, checking every
    /// invariant: primes strictly increasing and prime, exponents positive,
    /// product fitting in a `u64`.
    pub fn from_prime_powers(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut n: u64 = 1;
        let mut last = 0;
        for &(p, e) in &factors {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p <= last || e == 0 {
                return Err(Error::InvalidRange(format!(
                    "prime powers must have ascending primes and positive exponents, got {p}^{e}"
                )));
            }
            last = p;
            let pe = p
                .checked_pow(e)
                .ok_or(Error::Overflow(p as u128))?;
            n = n
                .checked_mul(pe)
                .ok_or(Error::Overflow(n as u128 * pe as u128))?;
        }
        Ok(Factorization { n, factors })
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The prime powers `p^e` exactly dividing `n`.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        let mut large = Vec::new();
        split_large(rest, &mut large);
        large.sort_unstable();
        for p in large {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(Factorization { n, factors })
}

// `n` has no prime factor below the trial-division bound, or is itself prime.
fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = (1..)
        .find_map(|c| brent_rho(n, c))
        .expect("rho eventually splits a composite");
    split_large(d, out);
    split_large(n / d, out);
}

/// One run of Brent's cycle-finding rho with `x -> x^2 + c`. Returns a
/// nontrivial divisor, or `None` when this `c` degenerates.
fn brent_rho(n: u64, c: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    const BATCH: u64 = 128;
    let step = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
    let (mut x, mut y, mut ys) = (0u64, 2u64, 2u64);
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        // Batched product hit zero; back up and step one at a time.
        loop {
            ys = step(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Euler's totient `∏ p^(e-1) (p - 1)`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Carmichael's function: the exponent of the unit group modulo `n`.
pub fn carmichael_lambda(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| {
            if p == 2 && e >= 3 {
                1 << (e - 2)
            } else {
                p.pow(e - 1) * (p - 1)
            }
        })
        .fold(1, |acc, l| lcm(acc, l).expect("lambda(n) <= n fits"))
}

/// Number of distinct prime divisors.
pub fn omega(f: &Factorization) -> u64 {
    f.factors.len() as u64
}

/// Möbius function.
pub fn mobius(f: &Factorization) -> i8 {
    if !f.is_squarefree() {
        0
    } else if f.factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}
