// SPDX-License-Identifier: Apache-2.0

#![no_main]

use libfuzzer_sys::fuzz_target;

// Whitespace-separated argv. Bounded numerics keep each run short.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let args: Vec<&str> = s.split_whitespace().collect();
    if args.len() > 16 {
        return;
    }
    let heavy = ["scan", "density", "artin-constant", "interval", "germain", "least-prime"];
    if args.iter().any(|a| heavy.contains(a)) && args.iter().any(|a| a.len() > 4) {
        return;
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = primlab_cli::run(std::iter::once("primlab").chain(args), &mut out, &mut err);
    assert!(matches!(code, 0..=2));
    if code == 1 {
        assert!(out.is_empty());
        assert!(err.starts_with(b"error: "));
    }
});
