// SPDX-License-Identifier: Apache-2.0

use primlab::arith::{gcd, is_perfect_square, jacobi, log_integral, mod_pow, KroneckerValue};
use primlab::special::sieve_primes;
use proptest::prelude::*;

/// Composite Simpson on `∫_{ln 2}^{ln x} e^s / s ds` (the substitution
/// `t = e^s` of `∫_2^x dt / ln t`) with a fixed panel count.
fn simpson_li(x: f64, panels: usize) -> f64 {
    let (a, b) = (2f64.ln(), x.ln());
    let h = (b - a) / panels as f64;
    let f = |s: f64| s.exp() / s;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

#[test]
fn log_integral_against_fixed_panel_simpson() {
    for x in [3.0, 100.0, 1000.0, 1e4, 1e6] {
        let oracle = simpson_li(x, 1_000_000);
        let got = log_integral(x).unwrap();
        assert!((got - oracle).abs() < 1e-6, "x = {x}: {got} vs {oracle}");
    }
}

#[test]
fn log_integral_frozen_values() {
    // 30-digit reference values of li(x) - li(2)
    let cases = [
        (100.0, 29.080_977_803_962_137),
        (1e6, 78_626.503_995_682_06),
    ];
    for (x, want) in cases {
        let got = log_integral(x).unwrap();
        assert!((got - want).abs() < 1e-8, "x = {x}: {got} vs {want}");
    }
    // near π(10^6) = 78 498
    assert!((log_integral(1e6).unwrap() - 78_498.0).abs() < 200.0);
}

#[test]
fn log_integral_increasing_and_interval_positive() {
    let mut prev = 0.0;
    let mut x = 2.5;
    while x < 1e9 {
        let v = log_integral(x).unwrap();
        assert!(v > prev);
        assert!(log_integral(2.0 * x).unwrap() - v > 0.0);
        prev = v;
        x *= 1.7;
    }
}

#[test]
fn quadratic_reciprocity_small_primes() {
    let odd: Vec<u64> = sieve_primes(200).into_iter().filter(|&p| p > 2).collect();
    for &p in &odd {
        for &q in &odd {
            if p == q {
                continue;
            }
            let lhs = jacobi(p as i64, q).unwrap().as_i8() * jacobi(q as i64, p).unwrap().as_i8();
            let rhs = if ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, rhs, "p = {p}, q = {q}");
        }
    }
}

#[test]
fn second_supplement_up_to_ten_thousand() {
    for p in sieve_primes(10_000).into_iter().filter(|&p| p > 2) {
        let want = if ((p * p - 1) / 8) % 2 == 0 { 1 } else { -1 };
        assert_eq!(jacobi(2, p).unwrap().as_i8(), want, "p = {p}");
    }
}

#[test]
fn legendre_matches_euler_criterion() {
    for p in sieve_primes(500).into_iter().filter(|&p| p > 2) {
        for a in 0..p {
            let euler = mod_pow(a, (p - 1) / 2, p).unwrap();
            let want = match euler {
                0 => KroneckerValue::Zero,
                1 => KroneckerValue::PlusOne,
                _ => KroneckerValue::MinusOne,
            };
            assert_eq!(jacobi(a as i64, p).unwrap(), want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mod_pow_exponent_additivity(b in any::<u64>(), e1 in 0u64..1 << 40, e2 in 0u64..1 << 40, m in 1u64..) {
        let lhs = mod_pow(b, e1 + e2, m).unwrap();
        let rhs = (mod_pow(b, e1, m).unwrap() as u128 * mod_pow(b, e2, m).unwrap() as u128 % m as u128) as u64;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_multiplicative(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000, half in 0u64..1 << 31) {
        let n = 2 * half + 1;
        let ab = jacobi(a * b, n).unwrap();
        prop_assert_eq!(ab, jacobi(a, n).unwrap() * jacobi(b, n).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in any::<u64>(), b in any::<u64>()) {
        let g = gcd(a, b);
        if g != 0 {
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
            prop_assert_eq!(gcd(a / g, b / g), 1);
        }
    }

    #[test]
    fn squares_are_recognized(r in 0u64..u32::MAX as u64) {
        prop_assert!(is_perfect_square(r * r));
        if r > 0 {
            prop_assert!(!is_perfect_square(r * r + 1));
        }
    }
}
