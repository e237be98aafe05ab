//! Quotients of polynomials in a unique canonical form: the denominator is
//! monic and coprime to the numerator, so equality and zero tests are
//! structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::One;

use super::{MathError, Poly, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonicalizes `num/den`: divides out the gcd and scales the
    /// denominator monic.
    pub fn new(num: Poly, den: Poly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (num, rn) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, rd) = den.div_rem(&g).expect("gcd is nonzero");
        debug_assert!(rn.is_zero() && rd.is_zero());
        let lead = den.leading().expect("nonzero denominator").clone();
        Ok(RatFunc {
            num: num.scaled(&lead.recip()),
            den: den.scaled(&lead.recip()),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is one.
    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    fn is_den_one(&self) -> bool {
        self.den.is_one()
    }

    /// Quotient-rule derivative, canonicalized.
    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFunc::new(num, den).expect("square of a nonzero polynomial")
    }

    /// `None` when `x` is a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d == Rational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn recip(&self) -> Result<RatFunc, MathError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for Poly {
    fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.leading().is_some_and(One::is_one)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// Renders as `(num)/(den)` in the expression grammar, or just the numerator
/// when the denominator is one.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_den_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
