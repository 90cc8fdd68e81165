// SPDX-License-Identifier: Apache-2.0

//! Prime sieving and the special prime families with short primitive-root
//! tests: Fermat primes, generalized Germain primes `2^s r + 1`, and primes
//! of the form `k 2^n + 1`.

use rayon::prelude::*;

use crate::arith::{gcd, is_perfect_square, jacobi, pow_mod_unchecked, KroneckerValue, Natural};
use crate::error::{Error, Result};
use crate::factorize::is_prime;

/// The five known Fermat primes `2^(2^n) + 1`.
pub const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

const SEGMENT_LEN: u64 = 1 << 18;

/// All primes `<= limit`, ascending. Empty below 2.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    primes_in_range(2, limit)
}

/// All primes `p` with `lo <= p <= hi`, ascending, by a segmented sieve of
/// Eratosthenes. Segments are sieved in parallel and concatenated in order.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if hi < lo {
        return Vec::new();
    }
    // A base table wider than the range itself costs more than testing each
    // candidate directly.
    if hi.isqrt() > hi - lo + 1 {
        return (lo..=hi).filter(|&n| is_prime(n)).collect();
    }
    let base = simple_sieve(hi.isqrt());
    let segments = (hi - lo) / SEGMENT_LEN + 1;
    (0..segments)
        .into_par_iter()
        .map(|i| {
            let start = lo + i * SEGMENT_LEN;
            let end = start.saturating_add(SEGMENT_LEN - 1).min(hi);
            sieve_segment(start, end, &base)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

fn sieve_segment(start: u64, end: u64, base: &[u64]) -> Vec<u64> {
    let len = (end - start + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p > end {
            break;
        }
        let Some(aligned) = start.div_ceil(p).checked_mul(p) else {
            continue;
        };
        let mut m = (p * p).max(aligned);
        while m <= end {
            composite[(m - start) as usize] = true;
            m = match m.checked_add(p) {
                Some(next) => next,
                None => break,
            };
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|&(_, &c)| !c)
        .map(|(i, _)| start + i as u64)
        .collect()
}

/// A generalized Germain prime `p = 2^s r + 1` with `s >= 1` and `r` an odd
/// prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GermainForm {
    p: u64,
    s: u32,
    r: u64,
}

impl GermainForm {
    pub fn new(p: u64, s: u32, r: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r % 2 == 0 || !is_prime(r) {
            return Err(Error::InvalidRange(format!("r = {r} must be an odd prime")));
        }
        let rebuilt = (r as u128) << s.min(127);
        if s == 0 || s >= 64 || rebuilt + 1 != p as u128 {
            return Err(Error::InvalidRange(format!("{p} != 2^{s} * {r} + 1")));
        }
        Ok(GermainForm { p, s, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn r(&self) -> u64 {
        self.r
    }
}

/// Writes `p - 1 = 2^s r` with `r` odd; the form exists iff `r` is prime.
pub fn germain_decompose(p: u64) -> Result<Option<GermainForm>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::ModulusTooSmall { n: p, min: 3 });
    }
    let s = (p - 1).trailing_zeros();
    let r = (p - 1) >> s;
    Ok((r >= 3 && is_prime(r)).then_some(GermainForm { p, s, r }))
}

/// Generalized Germain primes up to `limit`, optionally restricted to one `s`.
pub fn germain_primes(limit: u64, s: Option<u32>) -> Vec<GermainForm> {
    primes_in_range(3, limit)
        .into_iter()
        .filter_map(|p| germain_decompose(p).ok().flatten())
        .filter(|g| s.is_none_or(|s| g.s == s))
        .collect()
}

/// Modular exponentiations performed by [`germain_primitive_root_test`].
pub const GERMAIN_TEST_EXPONENTIATIONS: u32 = 2;

/// Two-exponentiation primitive-root test for `q` modulo a Germain prime:
/// `q` generates iff `q^(2^(s-1) r) != 1` and `q^(2^s) != 1` modulo `p`.
pub fn germain_primitive_root_test(q: u64, g: &GermainForm) -> Result<bool> {
    let p = g.p;
    check_base(q, p)?;
    let half = pow_mod_unchecked(q, (1u64 << (g.s - 1)) * g.r, p);
    let r_th = pow_mod_unchecked(q, 1u64 << g.s, p);
    Ok(half != 1 && r_th != 1)
}

// gcd(q, p) = 1, q != +-1 mod p, q not a perfect square.
fn check_base(q: u64, p: u64) -> Result<()> {
    if gcd(q, p) != 1 {
        return Err(Error::NotCoprime { u: q, n: p });
    }
    let r = q % p;
    if r == 1 || r == p - 1 {
        return Err(Error::TrivialBase { u: q, n: p });
    }
    if is_perfect_square(q) {
        return Err(Error::PerfectSquare(q));
    }
    Ok(())
}

/// Modulo a Fermat prime a unit generates iff it is a quadratic nonresidue:
/// one Jacobi symbol, no exponentiation.
pub fn fermat_primitive_root_test(q: u64, fermat_prime: u64) -> Result<bool> {
    if !FERMAT_PRIMES.contains(&fermat_prime) {
        return Err(Error::NotFermatPrime(fermat_prime));
    }
    if gcd(q, fermat_prime) != 1 {
        return Err(Error::NotCoprime { u: q, n: fermat_prime });
    }
    let q = (q % fermat_prime) as i64;
    Ok(jacobi(q, fermat_prime)? == KroneckerValue::MinusOne)
}

/// Primes `k 2^n + 1` for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPow2Primes {
    pub k: u64,
    /// `(n, p)` pairs, ascending in `n`.
    pub hits: Vec<(u32, u64)>,
    /// First exponent whose value exceeded the integer ceiling, if the
    /// enumeration had to stop before `n_max`.
    pub cutoff: Option<u32>,
}

pub fn enumerate_k_pow2_primes(k: u64, n_max: u64) -> Result<KPow2Primes> {
    if k % 2 == 0 || !is_prime(k) {
        return Err(Error::InvalidMultiplier(k));
    }
    let k_nat = Natural::new(k)?;
    let mut hits = Vec::new();
    let mut cutoff = None;
    let mut n = 0u32;
    while (n as u64) <= n_max {
        let candidate = Natural::new(2)
            .and_then(|two| two.checked_pow(n))
            .and_then(|pow| pow.checked_mul(k_nat))
            .and_then(|kp| kp.checked_add(Natural::ONE));
        match candidate {
            Ok(c) => {
                if is_prime(c.get()) {
                    hits.push((n, c.get()));
                }
            }
            Err(_) => {
                cutoff = Some(n);
                break;
            }
        }
        n += 1;
    }
    Ok(KPow2Primes { k, hits, cutoff })
}

/// Family membership tags for a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeClass {
    Fermat,
    Germain { s: u32 },
    KTimesPow2 { k: u64 },
    Ordinary,
}

/// Every family `p` belongs to. Germain primes `2^s r + 1` are also members
/// of the `k 2^n + 1` family with `k = r`, so both tags appear together.
pub fn classify(p: u64) -> Result<Vec<PrimeClass>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut tags = Vec::new();
    if FERMAT_PRIMES.contains(&p) {
        tags.push(PrimeClass::Fermat);
    }
    if p >= 3 {
        if let Some(g) = germain_decompose(p)? {
            tags.push(PrimeClass::Germain { s: g.s });
            tags.push(PrimeClass::KTimesPow2 { k: g.r });
        }
    }
    if tags.is_empty() {
        tags.push(PrimeClass::Ordinary);
    }
    Ok(tags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_primes(limit: u64) -> Vec<u64> {
        (2..=limit)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn sieve_examples() {
        assert_eq!(sieve_primes(10), vec![2, 3, 5, 7]);
        assert_eq!(sieve_primes(100).len(), 25);
        assert_eq!(sieve_primes(100), trial_division_primes(100));
        assert!(sieve_primes(1).is_empty());
        assert!(sieve_primes(0).is_empty());
        assert_eq!(sieve_primes(2), vec![2]);
    }

    #[test]
    fn sieve_spans_segments() {
        let lo = SEGMENT_LEN - 50;
        let hi = 3 * SEGMENT_LEN + 50;
        let got = primes_in_range(lo, hi);
        let want: Vec<u64> = (lo..=hi).filter(|&n| is_prime(n)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn sieve_near_u64_max() {
        let got = primes_in_range(u64::MAX - 100, u64::MAX);
        assert_eq!(got, vec![u64::MAX - 94, u64::MAX - 82, u64::MAX - 58]);
    }

    #[test]
    fn germain_decompositions() {
        let g7 = germain_decompose(7).unwrap().unwrap();
        assert_eq!((g7.s(), g7.r()), (1, 3));
        let g13 = germain_decompose(13).unwrap().unwrap();
        assert_eq!((g13.s(), g13.r()), (2, 3));
        let g11 = germain_decompose(11).unwrap().unwrap();
        assert_eq!((g11.s(), g11.r()), (1, 5));
        let g89 = germain_decompose(89).unwrap().unwrap();
        assert_eq!((g89.s(), g89.r()), (3, 11));
        assert_eq!(germain_decompose(127), Ok(None));
        // p - 1 a power of two: Fermat case, not Germain
        assert_eq!(germain_decompose(17), Ok(None));
        assert_eq!(germain_decompose(3), Ok(None));
        assert_eq!(germain_decompose(9), Err(Error::NotPrime(9)));
        assert!(germain_decompose(2).is_err());
    }

    #[test]
    fn germain_form_validation() {
        assert!(GermainForm::new(7, 1, 3).is_ok());
        assert!(GermainForm::new(13, 1, 3).is_err());
        assert!(GermainForm::new(5, 1, 2).is_err());
        assert!(GermainForm::new(8, 1, 3).is_err());
    }

    #[test]
    fn germain_list_is_sorted_union_over_s() {
        let got: Vec<u64> = germain_primes(100, None).iter().map(|g| g.p()).collect();
        assert_eq!(got, vec![7, 11, 13, 23, 29, 41, 47, 53, 59, 83, 89, 97]);
        let s2: Vec<u64> = germain_primes(100, Some(2)).iter().map(|g| g.p()).collect();
        assert_eq!(s2, vec![13, 29, 53]);
    }

    #[test]
    fn germain_test_examples() {
        let g7 = germain_decompose(7).unwrap().unwrap();
        let g13 = germain_decompose(13).unwrap().unwrap();
        assert_eq!(germain_primitive_root_test(3, &g7), Ok(true));
        assert_eq!(germain_primitive_root_test(2, &g7), Ok(false));
        assert_eq!(germain_primitive_root_test(2, &g13), Ok(true));
        assert_eq!(germain_primitive_root_test(4, &g13), Err(Error::PerfectSquare(4)));
        assert_eq!(germain_primitive_root_test(14, &g7), Err(Error::NotCoprime { u: 14, n: 7 }));
        assert_eq!(germain_primitive_root_test(6, &g7), Err(Error::TrivialBase { u: 6, n: 7 }));
        assert_eq!(germain_primitive_root_test(8, &g7), Err(Error::TrivialBase { u: 8, n: 7 }));
    }

    #[test]
    fn fermat_test_examples() {
        assert_eq!(fermat_primitive_root_test(3, 17), Ok(true));
        assert_eq!(fermat_primitive_root_test(2, 17), Ok(false));
        assert_eq!(fermat_primitive_root_test(2, 5), Ok(true));
        assert_eq!(fermat_primitive_root_test(3, 7), Err(Error::NotFermatPrime(7)));
        assert_eq!(fermat_primitive_root_test(34, 17), Err(Error::NotCoprime { u: 34, n: 17 }));
    }

    #[test]
    fn k_pow2_examples() {
        let e = enumerate_k_pow2_primes(3, 6).unwrap();
        assert_eq!(e.hits, vec![(1, 7), (2, 13), (5, 97), (6, 193)]);
        assert_eq!(e.cutoff, None);
        let e = enumerate_k_pow2_primes(5, 3).unwrap();
        assert_eq!(e.hits, vec![(1, 11), (3, 41)]);
        assert!(enumerate_k_pow2_primes(3, 0).unwrap().hits.is_empty());
        assert_eq!(enumerate_k_pow2_primes(9, 3), Err(Error::InvalidMultiplier(9)));
        assert_eq!(enumerate_k_pow2_primes(2, 3), Err(Error::InvalidMultiplier(2)));
    }

    #[test]
    fn k_pow2_reports_cutoff() {
        let e = enumerate_k_pow2_primes(3, 1000).unwrap();
        // 3 * 2^61 + 1 > 2^63 - 1
        assert_eq!(e.cutoff, Some(62));
        assert!(e.hits.iter().all(|&(n, p)| n < 62 && is_prime(p)));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(17).unwrap(), vec![PrimeClass::Fermat]);
        assert_eq!(
            classify(13).unwrap(),
            vec![PrimeClass::Germain { s: 2 }, PrimeClass::KTimesPow2 { k: 3 }]
        );
        assert_eq!(classify(2).unwrap(), vec![PrimeClass::Ordinary]);
        assert_eq!(classify(127).unwrap(), vec![PrimeClass::Ordinary]);
        assert!(classify(15).is_err());
    }
}
