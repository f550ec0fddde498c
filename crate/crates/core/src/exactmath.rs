//! Number-theoretic and exact-arithmetic primitives used by every counting
//! formula.
//!
//! All counts are exact [`BigInt`] values; nothing in this crate touches
//! floating point. Divisor-sum formulas divide by the necklace length at the
//! very end, and [`exact_div`] asserts that the division leaves no remainder
//! before performing it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Euler's totient: the number of integers in `1..=d` coprime to `d`.
///
/// `totient(1) == 1` by the empty-product convention. Rejects `d == 0`.
pub fn totient(d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Domain("totient is undefined at 0".into()));
    }
    Ok(phi(d))
}

/// Totient by trial-division factorization. Callers guarantee `d >= 1`.
pub(crate) fn phi(d: usize) -> usize {
    debug_assert!(d >= 1);
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All divisors of `n`, ascending, each exactly once. Rejects `n == 0`.
pub fn divisors(n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::Domain("divisors are undefined at 0".into()));
    }
    Ok(divisor_list(n))
}

pub(crate) fn divisor_list(n: usize) -> Vec<usize> {
    debug_assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The common divisors of `a` and `b`, ascending: the divisors of
/// `gcd(a, b)` with the convention `gcd(0, m) = m` (every integer divides 0).
///
/// Rejects `(0, 0)`, where every positive integer would qualify.
pub fn common_divisors(a: usize, b: usize) -> Result<Vec<usize>> {
    if a == 0 && b == 0 {
        return Err(Error::Domain(
            "common divisors of (0, 0) are unbounded".into(),
        ));
    }
    divisors(a.gcd(&b))
}

/// The exact binomial coefficient `C(a, b)`.
///
/// Returns 0 when `b < 0` or `b > a`; `binomial(0, 0) == 1`.
pub fn binomial(a: usize, b: isize) -> BigInt {
    if b < 0 || b as usize > a {
        return BigInt::zero();
    }
    let b = (b as usize).min(a - b as usize);
    let mut result = BigInt::one();
    for i in 0..b {
        result *= a - i;
        // Exact at every step: the running product is C(a, i + 1) * (i + 1)!
        // truncated, and i + 1 always divides it.
        result /= i + 1;
    }
    result
}

/// The Catalan number `C(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> BigInt {
    exact_div(binomial(2 * k, k as isize), k + 1)
}

/// Divides `value` by `divisor`, asserting that the division is exact.
///
/// Every divisor-sum formula in this crate (MacMahon, Polya and the
/// allowed/forbidden splits) divides an integer sum by the necklace length;
/// the quotient is a cardinality, so a nonzero remainder means a bug.
pub fn exact_div(value: BigInt, divisor: usize) -> BigInt {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    assert!(
        r.is_zero(),
        "non-exact division: {} by {}",
        q * divisor + &r,
        divisor
    );
    q
}

/// `2^e` as a `BigInt`.
pub(crate) fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Largest `r` with `2^r` dividing `n`; `n` must be positive.
pub(crate) fn two_adic_valuation(n: usize) -> u32 {
    debug_assert!(n > 0);
    n.trailing_zeros()
}
