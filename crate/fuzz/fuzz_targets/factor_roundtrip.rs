// SPDX-License-Identifier: Apache-2.0

#![no_main]

use libfuzzer_sys::fuzz_target;
use primlab::factorize::{carmichael_lambda, euler_phi, factor, is_prime};

fuzz_target!(|n: u64| {
    let Ok(f) = factor(n) else {
        return;
    };
    let mut product = 1u64;
    for &(p, e) in f.factors() {
        assert!(is_prime(p));
        product = product.checked_mul(p.pow(e)).expect("factors multiply back");
    }
    assert_eq!(product, n);
    assert_eq!(euler_phi(&f) % carmichael_lambda(&f), 0);
});
