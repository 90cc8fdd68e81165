// SPDX-License-Identifier: Apache-2.0

#![no_main]

use libfuzzer_sys::fuzz_target;
use primlab::arith::{Natural, CEILING};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(n) = s.parse::<Natural>() {
        assert!(n.get() <= CEILING);
        let again: Natural = n.to_string().parse().expect("display output parses");
        assert_eq!(again, n);
    }
});
