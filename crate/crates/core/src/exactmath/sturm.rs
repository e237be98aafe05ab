//! Distinct-real-root counting on the open interval `(0, ∞)` by Sturm's
//! theorem, and the Cauchy bound beyond which a polynomial keeps the sign of
//! its leading coefficient.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use super::{MathError, Poly, Rational};

/// Number of distinct real roots of `p` in `(0, ∞)`.
///
/// Roots at 0 are stripped first (they are outside the open interval), then
/// the canonical Sturm chain is evaluated at `0⁺` and `+∞` and the
/// sign-variation counts are differenced. Works for non-squarefree input
/// since the chain ends at the gcd of `p` and `p'`.
pub fn sturm_count_positive(p: &Poly) -> Result<usize, MathError> {
    if p.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    let strip = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = Poly::from_coeffs(p.coeffs()[strip..].to_vec());
    if reduced.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&reduced);
    let at_zero: Vec<i8> = chain.iter().map(|q| sign(&q.coeff(0))).collect();
    let at_infinity: Vec<i8> = chain
        .iter()
        .map(|q| sign(q.leading().expect("chain entries are nonzero")))
        .collect();
    let v0 = variations(&at_zero);
    let vinf = variations(&at_infinity);
    debug_assert!(v0 >= vinf);
    Ok(v0 - vinf)
}

/// Integer `B` such that `sign(p(n)) = sign(lead(p))` for every integer
/// `n > B`: the Cauchy bound `1 + max |a_j / a_d|`, rounded up.
pub fn positivity_bound(p: &Poly) -> Result<BigInt, MathError> {
    let deg = p.degree().ok_or(MathError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(BigInt::zero());
    }
    let lead = p.leading().expect("nonzero").clone();
    let mut max = Rational::zero();
    for c in &p.coeffs()[..deg] {
        let ratio = (c / &lead).abs();
        if ratio > max {
            max = ratio;
        }
    }
    Ok((max + Rational::one()).ceil().to_integer())
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign variations, ignoring zeros.
fn variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_integers(coeffs)
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_count_positive(&p(&[-2, 0, 1])).unwrap(), 1); // x^2 - 2
        assert_eq!(sturm_count_positive(&p(&[2, -3, 1])).unwrap(), 2); // roots 1, 2
        assert_eq!(sturm_count_positive(&p(&[1, 0, 1])).unwrap(), 0); // no real roots
        assert_eq!(sturm_count_positive(&p(&[1, -2, 1])).unwrap(), 1); // (x-1)^2, distinct count
        assert_eq!(sturm_count_positive(&p(&[0, 1])).unwrap(), 0); // root at 0 excluded
        assert!(sturm_count_positive(&Poly::zero()).is_err());
    }

    #[test]
    fn sturm_more_shapes() {
        // x(x-1)(x+2) = x^3 + x^2 - 2x: one positive root
        assert_eq!(sturm_count_positive(&p(&[0, -2, 1, 1])).unwrap(), 1);
        // (x-1)(x-2)(x-3): three
        assert_eq!(sturm_count_positive(&p(&[-6, 11, -6, 1])).unwrap(), 3);
        // constants
        assert_eq!(sturm_count_positive(&p(&[7])).unwrap(), 0);
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(positivity_bound(&p(&[-10, 1])).unwrap(), BigInt::from(11));
        assert_eq!(p(&[-10, 1]).eval(&rat(12)), rat(2));
        assert_eq!(positivity_bound(&p(&[2])).unwrap(), BigInt::zero());
        let q = p(&[2, -3, 1]);
        assert_eq!(positivity_bound(&q).unwrap(), BigInt::from(4));
        for n in 5..20 {
            assert!(q.eval(&rat(n)).is_positive());
        }
        assert!(positivity_bound(&Poly::zero()).is_err());
    }
}
