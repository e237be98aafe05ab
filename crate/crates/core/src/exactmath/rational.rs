//! Exact rational scalars and their canonical `a/b` text form.
//!
//! `Rational` is `num::BigRational`, which already maintains the canonical
//! form we rely on everywhere: fully reduced, positive denominator, zero
//! stored as `0/1`. Equal values therefore have identical representations.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::Integer;

use super::MathError;

pub type Rational = num::BigRational;

/// Rational from a machine integer. Test and construction helper.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den` from machine integers. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the canonical text form `a/b` or `a` (optional sign on `a`).
pub fn parse_rational(text: &str) -> Result<Rational, MathError> {
    let s = text.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| MathError::InvalidRational(text.to_owned()))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| MathError::InvalidRational(text.to_owned()))?;
    if den.is_zero() {
        return Err(MathError::InvalidRational(text.to_owned()));
    }
    Ok(Rational::new(num, den))
}

/// `2^k` for any integer `k`.
pub fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(BigInt::one() << k as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-k) as usize)
    }
}

/// Largest `e` with `2^e <= r`. Requires `r > 0`.
pub fn floor_log2(r: &Rational) -> i64 {
    assert!(r.is_positive(), "floor_log2 requires positive input");
    let mut e = r.numer().bits() as i64 - r.denom().bits() as i64;
    // The bit-length estimate is off by at most one in either direction.
    while pow2(e) > *r {
        e -= 1;
    }
    while pow2(e + 1) <= *r {
        e += 1;
    }
    e
}

/// Largest multiple of `2^-bits` that is `<= r`.
pub fn round_down_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled_num = r.numer() << bits as usize;
    Rational::new(scaled_num.div_floor(r.denom()), BigInt::one() << bits as usize)
}

/// Smallest multiple of `2^-bits` that is `>= r`.
pub fn round_up_dyadic(r: &Rational, bits: u32) -> Rational {
    let scaled_num = r.numer() << bits as usize;
    Rational::new(scaled_num.div_ceil(r.denom()), BigInt::one() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_round_trip() {
        for s in ["0", "1", "-1", "3/2", "-7/3", "42"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-2/-4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 6/3 ").unwrap(), rat(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn floor_log2_brackets() {
        for (n, d, e) in [(1, 1, 0), (3, 1, 1), (4, 1, 2), (1, 3, -2), (7, 8, -1), (15, 8, 0)] {
            let r = ratio(n, d);
            assert_eq!(floor_log2(&r), e, "floor_log2({n}/{d})");
            assert!(pow2(e) <= r && r < pow2(e + 1));
        }
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let r = ratio(1, 3);
        let lo = round_down_dyadic(&r, 8);
        let hi = round_up_dyadic(&r, 8);
        assert!(lo <= r && r <= hi);
        assert!(hi.clone() - lo.clone() <= pow2(-8));
        assert_eq!(round_down_dyadic(&rat(5), 4), rat(5));
        assert_eq!(round_up_dyadic(&rat(5), 4), rat(5));
    }
}
