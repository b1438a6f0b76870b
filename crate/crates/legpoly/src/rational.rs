//! Exact rational scalars and the factorial-type quantities built from them.
//!
//! The coefficient field for everything exact in this crate is the field of
//! arbitrary-precision rationals. Values are always stored fully reduced with
//! a positive denominator, so equality is structural.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar, always in lowest terms, denominator
/// positive, zero represented as 0/1.
pub type Rational = num_rational::BigRational;

use crate::error::{Error, Result};

/// Shorthand for small rational literals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for small integer literals.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n! as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// n! as a rational.
pub fn factorial_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Binomial coefficient C(n, k) as an arbitrary-precision integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// base^exp for integer exp of either sign; negative exponents require a
/// nonzero base.
pub fn pow_i(base: &Rational, exp: i64) -> Result<Rational> {
    if exp >= 0 {
        Ok(pow_u(base, exp as usize))
    } else if base.is_zero() {
        Err(Error::domain("negative power of zero"))
    } else {
        Ok(pow_u(base, (-exp) as usize).recip())
    }
}

/// base^exp for non-negative exp, by squaring.
pub fn pow_u(base: &Rational, mut exp: usize) -> Rational {
    let mut result = Rational::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    result
}

/// Nearest f64 to an exact rational (for report output only; all identity
/// checks compare rationals structurally).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// The exact rational value Γ(k + 1/2)/√π = (2k)!/(4^k k!).
///
/// Half-integer gamma values always appear in this crate divided by √π, and
/// that ratio is rational — which is what keeps the two-variable Legendre
/// coefficients inside the rational field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfIntegerGamma(pub usize);

impl HalfIntegerGamma {
    pub fn value(self) -> Rational {
        let k = self.0;
        let num = factorial(2 * k);
        let den = BigInt::from(4u32).pow(k as u32) * factorial(k);
        Rational::new(num, den)
    }
}

/// Rising factorial (base)_count = base (base+1) ⋯ (base+count−1).
#[derive(Clone, Debug, PartialEq)]
pub struct Pochhammer {
    pub base: Rational,
    pub count: usize,
}

impl Pochhammer {
    pub fn new(base: Rational, count: usize) -> Self {
        Pochhammer { base, count }
    }

    pub fn value(&self) -> Rational {
        let mut acc = Rational::one();
        for i in 0..self.count {
            acc *= &self.base + int(i as i64);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_u(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow_i(&rat(2, 1), -2).unwrap(), rat(1, 4));
        assert!(pow_i(&int(0), -1).is_err());
    }

    #[test]
    fn half_integer_gamma_values() {
        // Γ(1/2)/√π = 1, Γ(3/2)/√π = 1/2, Γ(5/2)/√π = 3/4
        assert_eq!(HalfIntegerGamma(0).value(), int(1));
        assert_eq!(HalfIntegerGamma(1).value(), rat(1, 2));
        assert_eq!(HalfIntegerGamma(2).value(), rat(3, 4));
    }

    #[test]
    fn pochhammer_recurrence() {
        // (γ)_0 = 1 and (γ)_{k+1} = (γ)_k (γ + k)
        let gamma = rat(1, 2);
        assert_eq!(Pochhammer::new(gamma.clone(), 0).value(), int(1));
        for k in 0..6 {
            let lhs = Pochhammer::new(gamma.clone(), k + 1).value();
            let rhs = Pochhammer::new(gamma.clone(), k).value() * (&gamma + int(k as i64));
            assert_eq!(lhs, rhs);
        }
    }
}
