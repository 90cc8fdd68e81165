// SPDX-License-Identifier: Apache-2.0

#![no_main]

use libfuzzer_sys::fuzz_target;
use primlab::arith::{gcd, jacobi, mod_pow, KroneckerValue};
use primlab::factorize::{factor, is_prime};
use primlab::primroot::multiplicative_order;

fuzz_target!(|input: (u64, u64)| {
    let (u, n) = input;
    let n = n >> 1;
    if n < 2 || gcd(u, n) != 1 {
        return;
    }
    let r = multiplicative_order(u, n).expect("coprime inputs have an order");
    assert_eq!(mod_pow(u, r.order, n).unwrap(), 1);
    assert_eq!(r.group_exponent % r.order, 0);
    for l in factor(r.order).unwrap().primes() {
        assert_ne!(mod_pow(u, r.order / l, n).unwrap(), 1);
    }
    if n % 2 == 1 && n > 2 && is_prime(n) && u % n != 0 {
        let euler = mod_pow(u, (n - 1) / 2, n).unwrap();
        let symbol = jacobi((u % n) as i64, n).unwrap();
        let want = if symbol == KroneckerValue::PlusOne { 1 } else { n - 1 };
        assert_eq!(euler, want);
    }
});
