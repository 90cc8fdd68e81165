// SPDX-License-Identifier: Apache-2.0

//! Modular arithmetic kernels on 64-bit naturals and the offset logarithmic
//! integral.
//!
//! Products are formed in `u128` so `mod_pow` and `mul_mod` are exact for
//! every `u64` modulus. Values that have to stay below the desk-scale ceiling
//! (`2^63 - 1`) go through [`Natural`], whose arithmetic fails loudly instead
//! of wrapping.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest value a [`Natural`] may hold.
pub const CEILING: u64 = i64::MAX as u64;

/// A nonnegative integer bounded by [`CEILING`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(u64);

impl Natural {
    pub const ZERO: Natural = Natural(0);
    pub const ONE: Natural = Natural(1);

    pub fn new(value: u64) -> Result<Self> {
        if value > CEILING {
            return Err(Error::Overflow(value as u128));
        }
        Ok(Natural(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, rhs: Natural) -> Result<Natural> {
        Self::from_wide(self.0 as u128 + rhs.0 as u128)
    }

    pub fn checked_mul(self, rhs: Natural) -> Result<Natural> {
        Self::from_wide(self.0 as u128 * rhs.0 as u128)
    }

    pub fn checked_pow(self, exp: u32) -> Result<Natural> {
        if exp == 0 {
            return Ok(Natural::ONE);
        }
        if self.0 <= 1 {
            return Ok(self);
        }
        // base >= 2 overflows within 63 steps, so the loop is short.
        let mut acc = Natural::ONE;
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    fn from_wide(v: u128) -> Result<Natural> {
        if v > CEILING as u128 {
            Err(Error::Overflow(v))
        } else {
            Ok(Natural(v as u64))
        }
    }
}

impl From<Natural> for u64 {
    fn from(n: Natural) -> u64 {
        n.0
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;
    fn try_from(v: u64) -> Result<Natural> {
        Natural::new(v)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses `1234`, `1_000_000`, `10^6` and `5e4`.
///
/// Surrounding whitespace is ignored. Results above [`CEILING`] are rejected
/// with [`Error::Overflow`]; anything else malformed is [`Error::Parse`].
impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Natural> {
        let s = s.trim();
        if let Some((base, exp)) = s.split_once('^') {
            let base = parse_digits(base, s)?;
            let exp = parse_exponent(exp, s)?;
            return base.checked_pow(exp);
        }
        if let Some((mantissa, exp)) = s.split_once(['e', 'E']) {
            let mantissa = parse_digits(mantissa, s)?;
            let exp = parse_exponent(exp, s)?;
            return mantissa.checked_mul(Natural(10).checked_pow(exp)?);
        }
        parse_digits(s, s)
    }
}

fn parse_digits(digits: &str, whole: &str) -> Result<Natural> {
    let bad = || Error::Parse(whole.to_string());
    if digits.is_empty() || digits.starts_with('_') || digits.ends_with('_') {
        return Err(bad());
    }
    let mut acc: u128 = 0;
    for c in digits.chars() {
        match c {
            '_' => continue,
            '0'..='9' => {
                acc = acc * 10 + (c as u8 - b'0') as u128;
                if acc > CEILING as u128 {
                    return Err(Error::Overflow(acc));
                }
            }
            _ => return Err(bad()),
        }
    }
    Ok(Natural(acc as u64))
}

fn parse_exponent(exp: &str, whole: &str) -> Result<u32> {
    // Saturating is harmless: any base >= 2 overflows long before u32::MAX.
    Ok(parse_digits(exp, whole)?.get().min(u32::MAX as u64) as u32)
}

/// The Jacobi symbol value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KroneckerValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl KroneckerValue {
    pub fn as_i8(self) -> i8 {
        match self {
            KroneckerValue::MinusOne => -1,
            KroneckerValue::Zero => 0,
            KroneckerValue::PlusOne => 1,
        }
    }

    fn negate(self) -> Self {
        match self {
            KroneckerValue::MinusOne => KroneckerValue::PlusOne,
            KroneckerValue::Zero => KroneckerValue::Zero,
            KroneckerValue::PlusOne => KroneckerValue::MinusOne,
        }
    }
}

impl std::ops::Mul for KroneckerValue {
    type Output = KroneckerValue;
    fn mul(self, rhs: Self) -> Self {
        match self.as_i8() * rhs.as_i8() {
            -1 => KroneckerValue::MinusOne,
            0 => KroneckerValue::Zero,
            _ => KroneckerValue::PlusOne,
        }
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `base^exponent mod modulus` by right-to-left square-and-multiply.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(pow_mod_unchecked(base, exponent, modulus))
}

/// `mod_pow` for callers that already guarantee `modulus >= 1`.
#[inline]
pub(crate) fn pow_mod_unchecked(base: u64, mut exponent: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    result
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; `None` if it does not fit in a `u64`.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Jacobi symbol `(a / n)` for odd `n >= 1`.
pub fn jacobi(a: i64, n: u64) -> Result<KroneckerValue> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut a = (a as i128).rem_euclid(n as i128) as u64;
    let mut n = n;
    let mut sign = KroneckerValue::PlusOne;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        // (2/n) = -1 iff n = 3, 5 mod 8
        if twos % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = sign.negate();
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = sign.negate();
        }
        (a, n) = (n % a, a);
    }
    Ok(if n == 1 { sign } else { KroneckerValue::Zero })
}

pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

const LI_TOLERANCE: f64 = 1e-9;
const LI_MAX_DEPTH: u32 = 60;

/// Offset logarithmic integral `∫_2^x dt / ln t`, by adaptive Simpson
/// quadrature with absolute tolerance `1e-9`.
pub fn log_integral(x: f64) -> Result<f64> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::LogIntegralDomain(x));
    }
    if x == 2.0 {
        return Ok(0.0);
    }
    // Octave-wide pieces keep the per-piece integrand close to linear so the
    // recursion terminates quickly even for very large x.
    let mut total = 0.0;
    let mut lo = 2.0f64;
    let span = x - 2.0;
    while lo < x {
        let hi = (lo * 2.0).min(x);
        let tol = LI_TOLERANCE * (hi - lo) / span;
        total += simpson_piece(inv_ln, lo, hi, tol);
        lo = hi;
    }
    Ok(total)
}

fn inv_ln(t: f64) -> f64 {
    1.0 / t.ln()
}

fn simpson_piece(f: fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, LI_MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_simpson(
    f: fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}
