// SPDX-License-Identifier: Apache-2.0

use primlab::artin::{
    least_prime_with_primitive_root, prime_counts, LeastPrime, ARTIN_CONSTANT, DEFAULT_CAP,
};
use primlab::charsum::{decompose_interval, CharacterContext, SumMode, ROUNDING_TOLERANCE};
use primlab::factorize::{euler_phi, factor};
use primlab::primroot::{is_primitive_root_prime, multiplicative_order};
use primlab::special::sieve_primes;

#[test]
fn representations_sum_to_totient() {
    for p in sieve_primes(200) {
        let ctx = CharacterContext::new(p).unwrap().with_log_table();
        let dep: u64 = (1..p).map(|u| ctx.psi_divisor_dependent(u).unwrap().value as u64).sum();
        let free: u64 = (1..p)
            .map(|u| ctx.psi_divisor_free(u, SumMode::Literal).unwrap().value as u64)
            .sum();
        let phi = euler_phi(&factor(p - 1).unwrap());
        assert_eq!(dep, phi, "p = {p}");
        assert_eq!(free, phi, "p = {p}");
    }
}

#[test]
fn psi_is_generator_independent() {
    for p in sieve_primes(50) {
        let generators: Vec<u64> = (1..p)
            .filter(|&t| multiplicative_order(t, p).unwrap().order == p - 1)
            .collect();
        let baseline: Vec<u8> = {
            let ctx = CharacterContext::new(p).unwrap();
            (1..p).map(|u| ctx.psi_divisor_dependent(u).unwrap().value).collect()
        };
        for tau in generators {
            let ctx = CharacterContext::with_generator(p, tau).unwrap();
            for u in 1..p {
                let dep = ctx.psi_divisor_dependent(u).unwrap();
                let free = ctx.psi_divisor_free(u, SumMode::Literal).unwrap();
                assert_eq!(dep.value, baseline[(u - 1) as usize], "p = {p}, tau = {tau}, u = {u}");
                assert_eq!(free.value, baseline[(u - 1) as usize]);
                assert!(dep.residual <= ROUNDING_TOLERANCE && free.residual <= ROUNDING_TOLERANCE);
            }
        }
    }
}

#[test]
fn indicator_mode_matches_literal_mode() {
    for p in [101u64, 997, 1009, 2003] {
        let ctx = CharacterContext::new(p).unwrap();
        for u in (1..p).step_by(7) {
            assert_eq!(
                ctx.psi_divisor_free(u, SumMode::Literal).unwrap().value,
                ctx.psi_divisor_free(u, SumMode::Indicator).unwrap().value
            );
        }
    }
}

#[test]
fn divisor_dependent_form_beyond_literal_cap() {
    let p = 1_000_003u64;
    let ctx = CharacterContext::new(p).unwrap();
    for u in [2u64, 3, 5, 6, 7, 10, 999_999] {
        let e = ctx.psi_divisor_dependent(u).unwrap();
        assert_eq!(e.value == 1, is_primitive_root_prime(u, p).unwrap(), "u = {u}");
        assert!(e.residual < ROUNDING_TOLERANCE);
    }
}

#[test]
fn interval_identity_across_bases() {
    for z in [3u64, 10, 97, 1000, 5000, 20_000] {
        for q in [2u64, 3, 5, 6, 7, 10, 12] {
            let d = decompose_interval(z, q).unwrap();
            let pi2z = sieve_primes(2 * z).len() as f64;
            assert!(d.identity_gap().abs() <= 1e-6 * pi2z, "z = {z}, q = {q}: {d:?}");
            assert!(d.psi_sum <= d.primes);
            assert!(d.li_prediction > 0.0);
        }
    }
}

#[test]
fn prime_counts_monotone_and_bounded() {
    let mut prev = 0;
    for x in (3..3000).step_by(37) {
        let r = prime_counts(3, x).unwrap();
        assert!(r.pi_q_x >= prev);
        assert!(r.pi_q_x <= r.pi_x);
        assert!((0.0..=1.0).contains(&r.density));
        prev = r.pi_q_x;
    }
}

#[test]
fn prime_counts_match_order_oracle() {
    for q in [2u64, 3, 5, 6, 7, 10] {
        let want = sieve_primes(5000)
            .into_iter()
            .filter(|&p| p >= 3 && q % p != 0)
            .filter(|&p| multiplicative_order(q, p).unwrap().order == p - 1)
            .count() as u64;
        assert_eq!(prime_counts(q, 5000).unwrap().pi_q_x, want, "q = {q}");
    }
}

#[test]
fn least_prime_is_minimal() {
    let primes = sieve_primes(DEFAULT_CAP);
    for q in 2..3000u64 {
        let Ok(found) = least_prime_with_primitive_root(q, DEFAULT_CAP) else {
            assert!(primlab::arith::is_perfect_square(q));
            continue;
        };
        let LeastPrime::Found(p) = found else {
            panic!("q = {q} exhausted");
        };
        assert_eq!(multiplicative_order(q, p).unwrap().order, p - 1);
        for &smaller in primes.iter().take_while(|&&s| s < p).filter(|&&s| s >= 3) {
            if q % smaller != 0 {
                assert_ne!(multiplicative_order(q, smaller).unwrap().order, smaller - 1);
            }
        }
    }
}

#[test]
fn artin_reference_constant_digits() {
    assert!((ARTIN_CONSTANT - 0.373_955_813_619_202_288_05).abs() < 1e-16);
}
