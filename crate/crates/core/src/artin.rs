// SPDX-License-Identifier: Apache-2.0

//! Artin's constant, prime counts with a fixed primitive root, the least
//! prime with a given primitive root, and the scan that compares it with
//! `(log q)(log log q)^3`.

use rayon::prelude::*;

use crate::arith::{gcd, log_integral};
use crate::charsum::check_base;
use crate::error::{Error, Result};
use crate::factorize::{euler_phi, factor};
use crate::primroot::PrimeRootTester;
use crate::special::{germain_decompose, primes_in_range, sieve_primes};

/// `∏_p (1 - 1/(p(p-1)))` to double precision.
pub const ARTIN_CONSTANT: f64 = 0.373_955_813_619_202_3;

/// Default search cap for [`least_prime_with_primitive_root`].
pub const DEFAULT_CAP: u64 = 100_000;

/// Smallest `q` whose scan row carries a bound ratio; below it `log log q`
/// is at most 1.
pub const RATIO_MIN_Q: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArtinConstant {
    /// Largest prime included in the product.
    pub truncation: u64,
    pub value: f64,
    /// `Σ_{n > P} 1/(n(n-1)) = 1/P`, an envelope on the omitted log-factors.
    pub tail_bound: f64,
}

/// Partial Euler product over primes up to `prime_cutoff`.
pub fn artin_constant(prime_cutoff: u64) -> Result<ArtinConstant> {
    if prime_cutoff < 2 {
        return Err(Error::ModulusTooSmall { n: prime_cutoff, min: 2 });
    }
    let value = sieve_primes(prime_cutoff)
        .into_iter()
        .map(|p| {
            let p = p as f64;
            1.0 - 1.0 / (p * (p - 1.0))
        })
        .product();
    Ok(ArtinConstant {
        truncation: prime_cutoff,
        value,
        tail_bound: 1.0 / prime_cutoff as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityReport {
    pub q: u64,
    pub x: u64,
    /// `π(x)`.
    pub pi_x: u64,
    /// Primes `3 <= p <= x`, coprime to `q`, with `q` a primitive root.
    pub pi_q_x: u64,
    pub density: f64,
    pub artin_reference: f64,
}

impl DensityReport {
    /// `density / a_1`, an empirical stand-in for the correction factor.
    pub fn correction_estimate(&self) -> f64 {
        self.density / self.artin_reference
    }
}

pub fn prime_counts(q: u64, x: u64) -> Result<DensityReport> {
    check_base(q)?;
    if x < 3 {
        return Err(Error::InvalidRange(format!("x = {x} must be at least 3")));
    }
    let primes = sieve_primes(x);
    let pi_q_x = primes
        .par_iter()
        .filter(|&&p| p >= 3 && q % p != 0)
        .map(|&p| PrimeRootTester::new(p).map(|t| t.is_generator(q) as u64))
        .sum::<Result<u64>>()?;
    let pi_x = primes.len() as u64;
    Ok(DensityReport {
        q,
        x,
        pi_x,
        pi_q_x,
        density: pi_q_x as f64 / pi_x as f64,
        artin_reference: ARTIN_CONSTANT,
    })
}

/// `Σ_{p <= x} φ(p - 1) / p`, summed in ascending `p`.
pub fn main_term_sum(x: u64) -> Result<f64> {
    let terms = sieve_primes(x)
        .par_iter()
        .map(|&p| factor(p - 1).map(|f| euler_phi(&f) as f64 / p as f64))
        .collect::<Result<Vec<f64>>>()?;
    Ok(terms.into_iter().sum())
}

/// `a_1 li(x)`.
pub fn main_term_prediction(x: u64) -> Result<f64> {
    Ok(ARTIN_CONSTANT * log_integral(x as f64)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeastPrime {
    Found(u64),
    /// No prime up to the cap works.
    Exhausted(u64),
}

impl LeastPrime {
    pub fn found(self) -> Option<u64> {
        match self {
            LeastPrime::Found(p) => Some(p),
            LeastPrime::Exhausted(_) => None,
        }
    }
}

/// Searches primes `3 <= p <= cap` in ascending order; primes dividing `q`
/// are skipped.
pub fn least_prime_with_primitive_root(q: u64, cap: u64) -> Result<LeastPrime> {
    check_base(q)?;
    if cap < 3 {
        return Err(Error::InvalidRange(format!("cap = {cap} must be at least 3")));
    }
    LeastPrimeSearch::new(cap).find(q)
}

/// Shares one sieve across many searches.
#[derive(Debug, Clone)]
pub struct LeastPrimeSearch {
    cap: u64,
    primes: Vec<u64>,
}

impl LeastPrimeSearch {
    pub fn new(cap: u64) -> Self {
        LeastPrimeSearch {
            cap,
            primes: primes_in_range(3, cap),
        }
    }

    pub fn find(&self, q: u64) -> Result<LeastPrime> {
        check_base(q)?;
        for &p in &self.primes {
            if gcd(p, q) != 1 {
                continue;
            }
            if PrimeRootTester::new(p)?.is_generator(q) {
                return Ok(LeastPrime::Found(p));
            }
        }
        Ok(LeastPrime::Exhausted(self.cap))
    }
}

/// `(log q)(log log q)^3` with natural logarithms.
pub fn conjecture_bound(q: u64) -> f64 {
    let l = (q as f64).ln();
    let ll = l.ln();
    l * ll * ll * ll
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    pub q: u64,
    /// `None` when the search hit its cap.
    pub least_p: Option<u64>,
    /// Defined for `q >= 16`.
    pub bound_value: Option<f64>,
    pub ratio: Option<f64>,
    pub germain_hit: bool,
}

impl ScanRecord {
    /// `least_p / (log q)^c`, for comparison against a polylogarithmic bound
    /// with a caller-chosen exponent.
    pub fn log_power_ratio(&self, c: f64) -> Option<f64> {
        self.least_p
            .map(|p| p as f64 / (self.q as f64).ln().powf(c))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    /// Largest defined ratio, if any row has one.
    pub max_ratio: Option<f64>,
    /// The `q` attaining `max_ratio`.
    pub max_ratio_q: Option<u64>,
    /// Share of rows whose least prime is a generalized Germain prime.
    pub germain_fraction: f64,
    /// Rows whose search ran out of primes.
    pub exhausted: u64,
}

/// One row per admissible `q` in `[q_min, q_max]` (squares skipped), in
/// ascending `q`. `threads = None` uses the global rayon pool.
pub fn conjecture_scan(q_min: u64, q_max: u64, cap: u64, threads: Option<usize>) -> Result<ScanReport> {
    if q_min < 2 || q_min > q_max {
        return Err(Error::InvalidRange(format!(
            "need 2 <= q_min <= q_max, got q_min = {q_min}, q_max = {q_max}"
        )));
    }
    if cap < 3 {
        return Err(Error::InvalidRange(format!("cap = {cap} must be at least 3")));
    }
    let search = LeastPrimeSearch::new(cap);
    let run = || -> Result<Vec<ScanRecord>> {
        (q_min..=q_max)
            .into_par_iter()
            .filter(|&q| check_base(q).is_ok())
            .map(|q| scan_one(&search, q))
            .collect()
    };
    let records = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidRange(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(summarize(records))
}

fn scan_one(search: &LeastPrimeSearch, q: u64) -> Result<ScanRecord> {
    let least_p = search.find(q)?.found();
    let bound_value = (q >= RATIO_MIN_Q).then(|| conjecture_bound(q));
    let ratio = least_p.zip(bound_value).map(|(p, b)| p as f64 / b);
    let germain_hit = match least_p {
        Some(p) => germain_decompose(p)?.is_some(),
        None => false,
    };
    Ok(ScanRecord {
        q,
        least_p,
        bound_value,
        ratio,
        germain_hit,
    })
}

fn summarize(records: Vec<ScanRecord>) -> ScanReport {
    let mut max: Option<(f64, u64)> = None;
    for r in &records {
        if let Some(x) = r.ratio {
            if max.is_none_or(|(m, _)| x > m) {
                max = Some((x, r.q));
            }
        }
    }
    let hits = records.iter().filter(|r| r.germain_hit).count();
    let germain_fraction = if records.is_empty() {
        0.0
    } else {
        hits as f64 / records.len() as f64
    };
    let exhausted = records.iter().filter(|r| r.least_p.is_none()).count() as u64;
    ScanReport {
        max_ratio: max.map(|(m, _)| m),
        max_ratio_q: max.map(|(_, q)| q),
        germain_fraction,
        exhausted,
        records,
    }
}
