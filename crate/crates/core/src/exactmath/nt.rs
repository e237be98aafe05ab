//! Deterministic 64-bit primality testing and p-adic valuations.

use num::bigint::BigInt;
use num::traits::{ToPrimitive, Zero};
use num::Integer;

use super::MathError;

/// Miller-Rabin witness set that is deterministic for every `n < 2^64`
/// (Sinclair's seven bases, verified against the Feitsma pseudoprime tables).
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Deterministic primality for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let r = (n - 1).trailing_zeros();
    let d = (n - 1) >> r;
    'bases: for base in MR_BASES {
        let a = base % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primality for big integers. Unconditionally correct below 2^64; inputs
/// outside `[1, 2^64)` are rejected so certificates stay checkable without
/// probabilistic assumptions.
pub fn is_prime(n: &BigInt) -> Result<bool, MathError> {
    if n < &BigInt::from(1) {
        return Err(MathError::NonPositiveInteger);
    }
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(MathError::OutOfDeterministicRange),
    }
}

/// Largest `e` with `p^e | n`. Requires `n >= 1` and `p >= 2`.
pub fn padic_valuation(n: &BigInt, p: &BigInt) -> u64 {
    assert!(
        n >= &BigInt::from(1) && p >= &BigInt::from(2),
        "padic_valuation requires n >= 1 and p >= 2"
    );
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_primes() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1000003)); // trial division up to 1000 confirms
        assert!(trial_division(1000003));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(0));
    }

    #[test]
    fn carmichael_numbers_are_composite() {
        for n in [561u64, 1105, 6601] {
            assert!(!is_prime_u64(n), "{n} is composite");
            assert!(!trial_division(n));
        }
        assert_eq!(561 % 3, 0); // 561 = 3 * 11 * 17
    }

    #[test]
    fn agrees_with_trial_division_sample() {
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn large_known_values() {
        assert!(is_prime_u64(18446744073709551557)); // largest prime below 2^64
        assert!(!is_prime_u64(18446744073709551615)); // 2^64 - 1 = 3*5*17*257*641*65537*6700417
    }

    #[test]
    fn bigint_range_checks() {
        assert_eq!(is_prime(&BigInt::from(97)), Ok(true));
        assert!(is_prime(&BigInt::from(0)).is_err());
        let big = BigInt::from(2).pow(64u32);
        assert_eq!(
            is_prime(&big),
            Err(MathError::OutOfDeterministicRange)
        );
    }

    #[test]
    fn valuation_examples() {
        let v = |n: i64, p: i64| padic_valuation(&BigInt::from(n), &BigInt::from(p));
        assert_eq!(v(18, 3), 2);
        assert_eq!(v(7, 7), 1);
        assert_eq!(v(100, 7), 0);
        assert_eq!(v(1, 2), 0);
        assert_eq!(v(1024, 2), 10);
    }
}
