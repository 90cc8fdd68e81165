// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Precondition and range violations reported by every fallible operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got 0")]
    ZeroModulus,
    #[error("modulus must be at least {min}, got {n}")]
    ModulusTooSmall { n: u64, min: u64 },
    #[error("Jacobi symbol requires an odd positive modulus, got {0}")]
    EvenModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gcd({u}, {n}) != 1: the element must be a unit")]
    NotCoprime { u: u64, n: u64 },
    #[error("{0} is a perfect square; perfect squares are excluded")]
    PerfectSquare(u64),
    #[error("{u} is congruent to +1 or -1 modulo {n}; trivial bases are excluded")]
    TrivialBase { u: u64, n: u64 },
    #[error("base {0} is excluded: q must not be 0 or 1")]
    DegenerateBase(u64),
    #[error("cannot factor 0")]
    FactorZero,
    #[error("logarithmic integral is defined here for x >= 2, got {0}")]
    LogIntegralDomain(f64),
    #[error("{0} exceeds the integer ceiling 2^63 - 1")]
    Overflow(u128),
    #[error("{0} is not one of the known Fermat primes 3, 5, 17, 257, 65537")]
    NotFermatPrime(u64),
    #[error("k = {0} must be an odd prime")]
    InvalidMultiplier(u64),
    #[error("element {u} must lie in [1, {p} - 1]")]
    ElementOutOfRange { u: u64, p: u64 },
    #[error("literal exponential-sum mode is capped at p <= {cap}, got p = {p}")]
    LiteralTooLarge { p: u64, cap: u64 },
    #[error("accumulator {re} + {im}i is not within {tol} of 0 or 1")]
    Residual { re: f64, im: f64, tol: f64 },
    #[error("interval start must be at least {min}, got {z}")]
    IntervalTooShort { z: u64, min: u64 },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("cannot parse natural number from {0:?}")]
    Parse(String),
    #[error("lifted primitive-root claim failed for u = {u} modulo {n}")]
    LiftViolation { u: u64, n: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
