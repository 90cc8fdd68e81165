// SPDX-License-Identifier: Apache-2.0

//! The characteristic function Ψ of primitive roots modulo a prime, in two
//! exponential-sum representations, and the main-term / error-term split of
//! `Σ_{z <= p <= 2z} Ψ(q)` over a short interval.
//!
//! Multiplicative characters of `F_p^*` are realized through discrete logs in
//! a fixed generator τ: `χ_j(τ^m) = e(j m / (p - 1))`, and `χ_j` has order
//! `(p - 1) / gcd(j, p - 1)`.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::{gcd, is_perfect_square, log_integral, mul_mod, pow_mod_unchecked, Natural};
use crate::artin::ARTIN_CONSTANT;
use crate::error::{Error, Result};
use crate::factorize::{euler_phi, factor, mobius, Factorization};
use crate::primroot::{least_primitive_root, PrimeRootTester};
use crate::special::primes_in_range;

/// Largest `|raw - value|` accepted when rounding an accumulator.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Largest prime evaluated by literally summing additive characters.
pub const LITERAL_CAP: u64 = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiMethod {
    /// Möbius-weighted sum over multiplicative characters of each order
    /// `d | p - 1`.
    DivisorDependent,
    /// Double sum over exponents coprime to `p - 1` and additive characters.
    DivisorFree,
}

/// How the inner additive-character sum of the divisor-free form is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumMode {
    /// Use `Σ_k e((τ^n - u) k / p) = p [τ^n = u]`.
    Indicator,
    /// Add up all `p` exponentials.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiEvaluation {
    pub p: u64,
    pub u: u64,
    pub method: PsiMethod,
    pub value: u8,
    /// Accumulator before rounding.
    pub raw: Complex64,
    /// `|raw - value|`.
    pub residual: f64,
}

impl PsiEvaluation {
    fn round(p: u64, u: u64, method: PsiMethod, raw: Complex64) -> Result<Self> {
        let value = raw.re.round();
        let residual = (raw - Complex64::new(value, 0.0)).norm();
        if !(value == 0.0 || value == 1.0) || residual > ROUNDING_TOLERANCE {
            return Err(Error::Residual {
                re: raw.re,
                im: raw.im,
                tol: ROUNDING_TOLERANCE,
            });
        }
        Ok(PsiEvaluation {
            p,
            u,
            method,
            value: value as u8,
            raw,
            residual,
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct DivisorTerm {
    d: u64,
    mobius: i8,
    phi: u64,
}

/// Character data for one prime: a generator τ, the squarefree divisors of
/// `p - 1`, and optionally a full discrete-log table.
#[derive(Debug, Clone)]
pub struct CharacterContext {
    p: u64,
    tau: u64,
    phi_p_minus_1: u64,
    divisors: Vec<DivisorTerm>,
    log_table: Option<Vec<u64>>,
}

impl CharacterContext {
    /// Uses the least primitive root as τ.
    pub fn new(p: u64) -> Result<Self> {
        let tau = least_primitive_root(p)?;
        Self::with_generator(p, tau)
    }

    pub fn with_generator(p: u64, tau: u64) -> Result<Self> {
        let tester = PrimeRootTester::new(p)?;
        if !tester.is_generator(tau) {
            return Err(Error::InvalidRange(format!("{tau} does not generate F_{p}^*")));
        }
        let f = factor(p - 1)?;
        Ok(CharacterContext {
            p,
            tau: tau % p,
            phi_p_minus_1: euler_phi(&f),
            divisors: squarefree_divisors(&f),
            log_table: None,
        })
    }

    /// Precomputes every discrete log; worthwhile when sweeping all units.
    pub fn with_log_table(mut self) -> Self {
        let mut table = vec![0u64; self.p as usize];
        let mut x = 1u64;
        for m in 0..self.p - 1 {
            table[x as usize] = m;
            x = mul_mod(x, self.tau, self.p);
        }
        self.log_table = Some(table);
        self
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.tau
    }

    /// `m` in `[0, p - 2]` with `τ^m = u`.
    pub fn log(&self, u: u64) -> Result<u64> {
        let u = self.check_unit(u)?;
        Ok(match &self.log_table {
            Some(t) => t[u as usize],
            None => discrete_log(u, self.tau, self.p),
        })
    }

    fn check_unit(&self, u: u64) -> Result<u64> {
        if u == 0 || u >= self.p {
            return Err(Error::ElementOutOfRange { u, p: self.p });
        }
        Ok(u)
    }

    pub fn psi_divisor_dependent(&self, u: u64) -> Result<PsiEvaluation> {
        let log = self.log(u)?;
        let mut outer = Complex64::new(0.0, 0.0);
        for term in &self.divisors {
            // characters of order d are χ_j with j = (p-1) t / d, gcd(t, d) = 1
            let mut inner = Complex64::new(0.0, 0.0);
            for t in (0..term.d).filter(|&t| gcd(t, term.d) == 1) {
                let phase = mul_mod(t, log % term.d, term.d) as f64 / term.d as f64;
                inner += Complex64::from_polar(1.0, TAU * phase);
            }
            outer += inner * (term.mobius as f64 / term.phi as f64);
        }
        let raw = outer * (self.phi_p_minus_1 as f64 / (self.p - 1) as f64);
        PsiEvaluation::round(self.p, u, PsiMethod::DivisorDependent, raw)
    }

    pub fn psi_divisor_free(&self, u: u64, mode: SumMode) -> Result<PsiEvaluation> {
        let u = self.check_unit(u)?;
        let p = self.p;
        let roots = match mode {
            SumMode::Literal if p > LITERAL_CAP => {
                return Err(Error::LiteralTooLarge { p, cap: LITERAL_CAP })
            }
            SumMode::Literal => Some(unit_roots(p)),
            SumMode::Indicator => None,
        };
        let mut raw = Complex64::new(0.0, 0.0);
        let mut tau_n = 1u64;
        for n in 1..p {
            tau_n = mul_mod(tau_n, self.tau, p);
            if gcd(n, p - 1) != 1 {
                continue;
            }
            let shift = (tau_n + p - u) % p;
            let inner = match &roots {
                Some(w) => (0..p)
                    .map(|k| w[mul_mod(shift, k, p) as usize])
                    .sum::<Complex64>(),
                None if shift == 0 => Complex64::new(p as f64, 0.0),
                None => Complex64::new(0.0, 0.0),
            };
            raw += inner / p as f64;
        }
        PsiEvaluation::round(p, u, PsiMethod::DivisorFree, raw)
    }
}

fn unit_roots(p: u64) -> Vec<Complex64> {
    (0..p)
        .map(|m| Complex64::from_polar(1.0, TAU * m as f64 / p as f64))
        .collect()
}

fn squarefree_divisors(f: &Factorization) -> Vec<DivisorTerm> {
    let primes: Vec<u64> = f.primes().collect();
    (0u32..1 << primes.len())
        .map(|mask| {
            let chosen: Vec<(u64, u32)> = primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| (q, 1))
                .collect();
            let fd = Factorization::from_prime_powers(chosen).expect("distinct primes");
            DivisorTerm {
                d: fd.value(),
                mobius: mobius(&fd),
                phi: euler_phi(&fd),
            }
        })
        .collect()
}

/// Baby-step giant-step discrete log of a unit `u` to base `tau` modulo a
/// prime `p`; `tau` must generate.
pub(crate) fn discrete_log(u: u64, tau: u64, p: u64) -> u64 {
    let order = p - 1;
    let m = order.isqrt() + 1;
    let mut baby = HashMap::with_capacity(m as usize);
    let mut x = 1u64;
    for j in 0..m {
        baby.entry(x).or_insert(j);
        x = mul_mod(x, tau, p);
    }
    // τ^(-m)
    let giant = pow_mod_unchecked(tau, order - m % order, p);
    let mut y = u % p;
    for i in 0..=m {
        if let Some(&j) = baby.get(&y) {
            return (i * m + j) % order;
        }
        y = mul_mod(y, giant, p);
    }
    unreachable!("tau generates F_p^*, so every unit has a logarithm")
}

pub fn psi_divisor_dependent(u: u64, p: u64) -> Result<PsiEvaluation> {
    reject_zero(u, p)?;
    CharacterContext::new(p)?.psi_divisor_dependent(u)
}

pub fn psi_divisor_free(u: u64, p: u64, mode: SumMode) -> Result<PsiEvaluation> {
    reject_zero(u, p)?;
    CharacterContext::new(p)?.psi_divisor_free(u, mode)
}

fn reject_zero(u: u64, p: u64) -> Result<()> {
    if u == 0 || u >= p {
        return Err(Error::ElementOutOfRange { u, p });
    }
    Ok(())
}

/// `Σ_{z <= p <= 2z} Ψ(q)` split into the trivial-character term and the
/// rest, over primes coprime to `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalDecomposition {
    pub z: u64,
    pub q: u64,
    /// Primes in `[z, 2z]` coprime to `q`.
    pub primes: u64,
    /// How many of them have `q` as a primitive root.
    pub psi_sum: u64,
    /// `Σ φ(p - 1) / p`, the `k = 0` contribution.
    pub trivial_term: f64,
    /// The `k != 0` contribution, accumulated independently of `psi_sum`.
    pub error_term: f64,
    /// `a_1 (li(2z) - li(z))`.
    pub li_prediction: f64,
}

impl IntervalDecomposition {
    /// `psi_sum - trivial_term - error_term`; zero up to rounding.
    pub fn identity_gap(&self) -> f64 {
        self.psi_sum as f64 - self.trivial_term - self.error_term
    }

    /// `|E(z)| / z^(1 - 1/16)`.
    pub fn scaled_error(&self) -> f64 {
        self.error_term.abs() / (self.z as f64).powf(15.0 / 16.0)
    }
}

/// Minimum interval start.
pub const MIN_INTERVAL_START: u64 = 3;

/// Splits the primitive-root count over `[z, 2z]` into main and error terms.
///
/// `psi_sum` comes from the primitive-root test. The error term is summed
/// separately through discrete logs: for each prime the nontrivial additive
/// characters contribute `(1/p) Σ_{gcd(n, p-1) = 1} (p [τ^n = q] - 1)`, which
/// is `[gcd(log_τ q, p - 1) = 1] - φ(p - 1) / p`. Per-prime terms are reduced
/// in ascending `p`, so results are identical for any thread count.
pub fn decompose_interval(z: u64, q: u64) -> Result<IntervalDecomposition> {
    if z < MIN_INTERVAL_START {
        return Err(Error::IntervalTooShort { z, min: MIN_INTERVAL_START });
    }
    check_base(q)?;
    let hi = Natural::new(z)?.checked_mul(Natural::new(2)?)?.get();
    let primes: Vec<u64> = primes_in_range(z, hi)
        .into_iter()
        .filter(|&p| q % p != 0)
        .collect();
    let terms: Vec<(bool, f64, f64)> = primes
        .par_iter()
        .map(|&p| -> Result<(bool, f64, f64)> {
            let primitive = PrimeRootTester::new(p)?.is_generator(q);
            let phi = euler_phi(&factor(p - 1)?) as f64;
            let tau = least_primitive_root(p)?;
            let log = discrete_log(q % p, tau, p);
            let indicator = if gcd(log, p - 1) == 1 { 1.0 } else { 0.0 };
            Ok((primitive, phi / p as f64, indicator - phi / p as f64))
        })
        .collect::<Result<_>>()?;
    let mut psi_sum = 0;
    let mut trivial_term = 0.0;
    let mut error_term = 0.0;
    for (primitive, main, err) in terms {
        psi_sum += primitive as u64;
        trivial_term += main;
        error_term += err;
    }
    let li_prediction = ARTIN_CONSTANT * (log_integral(hi as f64)? - log_integral(z as f64)?);
    Ok(IntervalDecomposition {
        z,
        q,
        primes: primes.len() as u64,
        psi_sum,
        trivial_term,
        error_term,
        li_prediction,
    })
}

// q not 0 or 1 and not a perfect square.
pub(crate) fn check_base(q: u64) -> Result<()> {
    if q <= 1 {
        return Err(Error::DegenerateBase(q));
    }
    if is_perfect_square(q) {
        return Err(Error::PerfectSquare(q));
    }
    Ok(())
}
