// SPDX-License-Identifier: Apache-2.0

//! Multiplicative order and primitive-root tests.
//!
//! Modulo a prime `p`, `u` generates `F_p^*` iff `u^((p-1)/l) != 1` for every
//! prime `l | p - 1`. Modulo a composite `n` the unit group need not be
//! cyclic, so "primitive root" means λ-primitive root: an element whose order
//! equals the Carmichael exponent `λ(n)`, tested the same way with `λ(n)` in
//! place of `p - 1`.

use crate::arith::{gcd, is_perfect_square, pow_mod_unchecked};
use crate::error::{Error, Result};
use crate::factorize::{carmichael_lambda, euler_phi, factor, is_prime, Factorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderResult {
    /// Modulus.
    pub n: u64,
    /// Element, reduced modulo `n`.
    pub u: u64,
    pub order: u64,
    /// `λ(n)`, the exponent of the unit group.
    pub group_exponent: u64,
    pub is_lambda_primitive: bool,
}

fn require_unit(u: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall { n, min: 2 });
    }
    let u = u % n;
    if gcd(u, n) != 1 {
        return Err(Error::NotCoprime { u, n });
    }
    Ok(u)
}

/// Exact order of `u` modulo `n`: start from `λ(n)` and strip each prime
/// factor while the reduced power still equals one.
pub fn multiplicative_order(u: u64, n: u64) -> Result<OrderResult> {
    let u = require_unit(u, n)?;
    let lambda = carmichael_lambda(&factor(n)?);
    let mut order = lambda;
    for &(l, e) in factor(lambda)?.factors() {
        for _ in 0..e {
            if pow_mod_unchecked(u, order / l, n) == 1 {
                order /= l;
            } else {
                break;
            }
        }
    }
    Ok(OrderResult {
        n,
        u,
        order,
        group_exponent: lambda,
        is_lambda_primitive: order == lambda,
    })
}

/// Primitive-root test modulo a fixed prime with the cofactors `(p-1)/l`
/// precomputed, for sweeps over many bases.
#[derive(Debug, Clone)]
pub struct PrimeRootTester {
    p: u64,
    cofactors: Vec<u64>,
}

impl PrimeRootTester {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let cofactors = factor(p - 1)?.primes().map(|l| (p - 1) / l).collect();
        Ok(PrimeRootTester { p, cofactors })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Modular exponentiations per test, `ω(p - 1)`.
    pub fn exponentiations(&self) -> usize {
        self.cofactors.len()
    }

    /// Whether `u` generates `F_p^*`. Multiples of `p` are not units and
    /// return `false`.
    pub fn is_generator(&self, u: u64) -> bool {
        let u = u % self.p;
        u != 0 && self.cofactors.iter().all(|&c| pow_mod_unchecked(u, c, self.p) != 1)
    }
}

pub fn is_primitive_root_prime(u: u64, p: u64) -> Result<bool> {
    let tester = PrimeRootTester::new(p)?;
    require_unit(u, p)?;
    Ok(tester.is_generator(u))
}

pub fn is_lambda_primitive_root(u: u64, n: u64) -> Result<bool> {
    let u = require_unit(u, n)?;
    let lambda = carmichael_lambda(&factor(n)?);
    Ok(factor(lambda)?
        .primes()
        .all(|l| pow_mod_unchecked(u, lambda / l, n) != 1))
}

/// Checks `u` against every prime-power modulus `p^k || n`; when it is a
/// λ-primitive root for each, the lifted claim that it is one modulo `n`
/// itself is re-verified before returning `true`.
///
/// `u` must be a unit, not `±1 mod n`, and not a perfect square as an
/// integer.
pub fn lift_primitive_root(u: u64, f: &Factorization) -> Result<bool> {
    let n = f.value();
    let reduced = require_unit(u, n)?;
    if reduced == 1 || reduced == n - 1 {
        return Err(Error::TrivialBase { u, n });
    }
    if is_perfect_square(u) {
        return Err(Error::PerfectSquare(u));
    }
    for pk in f.prime_powers() {
        if !is_lambda_primitive_root(u, pk)? {
            return Ok(false);
        }
    }
    if !is_lambda_primitive_root(u, n)? {
        return Err(Error::LiftViolation { u, n });
    }
    Ok(true)
}

/// Smallest generator of `F_p^*`. For `p = 2` that is `1`, the only unit.
pub fn least_primitive_root(p: u64) -> Result<u64> {
    let tester = PrimeRootTester::new(p)?;
    if p == 2 {
        return Ok(1);
    }
    Ok((2..p)
        .find(|&t| tester.is_generator(t))
        .expect("every prime has a primitive root"))
}

/// Number of generators in `[1, p - 1]`, by testing each.
pub fn count_primitive_roots(p: u64) -> Result<u64> {
    let tester = PrimeRootTester::new(p)?;
    Ok((1..p).filter(|&u| tester.is_generator(u)).count() as u64)
}

/// `φ(p - 1)`, the count [`count_primitive_roots`] must reproduce.
pub fn expected_primitive_root_count(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(euler_phi(&factor(p - 1)?))
}
