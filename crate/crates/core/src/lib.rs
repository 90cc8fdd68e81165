// SPDX-License-Identifier: Apache-2.0

//! Primitive roots modulo primes and composites, and the experiments around
//! the least prime for which a fixed integer is a primitive root.
//!
//! - [`arith`]: modular exponentiation, gcd, Jacobi symbol, exact square
//!   test, offset logarithmic integral.
//! - [`factorize`]: deterministic primality, factorization, `φ`, `λ`, `ω`.
//! - [`primroot`]: multiplicative order and primitive-root tests, including
//!   the lift from prime-power moduli to composite moduli.
//! - [`special`]: segmented sieve, Fermat primes, generalized Germain primes
//!   `2^s r + 1` and primes `k 2^n + 1`, with their short tests.
//! - [`charsum`]: both exponential-sum forms of the primitive-root indicator
//!   and the short-interval main/error decomposition.
//! - [`artin`]: Artin's constant, prime counts, least-prime search and the
//!   bound-ratio scan.

pub mod arith;
pub mod artin;
pub mod charsum;
pub mod error;
pub mod factorize;
pub mod primroot;
pub mod special;

pub use error::{Error, Result};
