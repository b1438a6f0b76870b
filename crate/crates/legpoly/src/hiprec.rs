//! Arbitrary-precision floating point, MPFR-backed.
//!
//! All numeric (non-exact) routes — quadrature, Bessel sums, asymptotic
//! limits — run at a configurable working precision, 50 significant decimal
//! digits by default. The default can be raised through the
//! `LEGPOLY_PREC_DIGITS` environment variable (integer, clamped to ≥ 30).

use rug::float::Constant;
pub use rug::Float;

use crate::rational::Rational;

pub const MIN_DIGITS: u32 = 30;
pub const DEFAULT_DIGITS: u32 = 50;
pub const PRECISION_ENV_VAR: &str = "LEGPOLY_PREC_DIGITS";

/// Working precision in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub fn digits(d: u32) -> Self {
        Precision {
            digits: d.max(MIN_DIGITS),
        }
    }

    /// Default precision, honoring `LEGPOLY_PREC_DIGITS` when set.
    pub fn from_env() -> Self {
        let d = std::env::var(PRECISION_ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_DIGITS);
        Self::digits(d)
    }

    pub fn decimal_digits(self) -> u32 {
        self.digits
    }

    /// Mantissa bits, with guard bits on top of the requested digits.
    pub fn bits(self) -> u32 {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
    }

    pub fn f(self, v: f64) -> Float {
        Float::with_val(self.bits(), v)
    }

    pub fn from_u64(self, v: u64) -> Float {
        Float::with_val(self.bits(), v)
    }

    pub fn from_i64(self, v: i64) -> Float {
        Float::with_val(self.bits(), v)
    }

    pub fn zero(self) -> Float {
        Float::with_val(self.bits(), 0)
    }

    pub fn one(self) -> Float {
        Float::with_val(self.bits(), 1)
    }

    /// Exact rational → correctly rounded float.
    pub fn from_rational(self, r: &Rational) -> Float {
        let parsed: rug::Rational = r
            .to_string()
            .parse()
            .expect("reduced rational always parses");
        Float::with_val(self.bits(), &parsed)
    }

    pub fn pi(self) -> Float {
        Float::with_val(self.bits(), Constant::Pi)
    }

    pub fn sqrt_pi(self) -> Float {
        self.pi().sqrt()
    }

    /// Γ(x) at working precision.
    pub fn gamma(self, x: &Float) -> Float {
        Float::with_val(self.bits(), x.gamma_ref())
    }

    /// n! at working precision.
    pub fn factorial(self, n: u32) -> Float {
        Float::with_val(self.bits(), Float::factorial(n))
    }

    /// x^k for signed integer k.
    pub fn pow_i(self, x: &Float, k: i64) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.bits(), x.pow(k as i32))
    }

    /// A coarse "agrees to working precision" threshold used when a
    /// polynomial integrand makes a quadrature identity hold up to rounding
    /// only: 2^(−(bits − 24)) leaves generous slack over accumulated error.
    pub fn rounding_slack(self) -> f64 {
        2f64.powi(-((self.bits() as i32) - 24))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn precision_floor_and_bits() {
        assert_eq!(Precision::digits(10).decimal_digits(), MIN_DIGITS);
        assert!(Precision::digits(50).bits() >= 166);
    }

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let p = Precision::digits(50);
        let x = p.from_rational(&rat(1, 3));
        let three = p.f(3.0);
        let back: Float = x * three;
        let dev: Float = (back - p.one()).abs();
        assert!(dev.to_f64() < 1e-45);
    }

    #[test]
    fn gamma_matches_known_values() {
        let p = Precision::digits(50);
        // Γ(1/2) = √π
        let g = p.gamma(&p.f(0.5));
        let dev: Float = (g - p.sqrt_pi()).abs();
        assert!(dev.to_f64() < 1e-45);
        // Γ(5) = 24
        let g = p.gamma(&p.f(5.0));
        assert!((g.to_f64() - 24.0).abs() < 1e-12);
    }
}
