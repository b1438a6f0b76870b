//! Truncated formal power series over exact rationals.
//!
//! A series of order N stores the coefficients c₀..c_N of
//! Σ c_k t^k + O(t^(N+1)). Every operation is exact over the rationals and
//! never reads past the truncation order; no floating point enters this
//! module. This is the oracle engine: closed-form polynomial families are
//! accepted only when they agree coefficient-by-coefficient with the series
//! route.
//!
//! Binary operations require equal truncation orders; the caller states the
//! working order explicitly (the default used by the verification suites is
//! [`DEFAULT_ORDER`]).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Default truncation order used by the identity suites.
pub const DEFAULT_ORDER: usize = 32;

/// Formal power series in one variable, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Constant series c + O(t^(order+1)).
    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Series with the given coefficients c₀..c_N (order = len − 1).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c0");
        TruncatedSeries { coeffs }
    }

    /// Polynomial Σ c_k t^(e_k) promoted to a series of the given order;
    /// exponents past the order are truncated away.
    pub fn from_terms(order: usize, terms: &[(usize, Rational)]) -> Self {
        let mut s = Self::zero(order);
        for (exp, c) in terms {
            if *exp <= order {
                s.coeffs[*exp] += c;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient c_n.
    pub fn coefficient(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            Err(Error::OrderMismatch(self.order(), other.order()))
        } else {
            Ok(())
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    /// Multiplicative inverse: b with a·b = 1 + O(t^(N+1)), by the standard
    /// convolution recursion b_n = −(Σ_{k≥1} a_k b_{n−k})/a₀.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::SingularSeries);
        }
        let n = self.order();
        let inv0 = self.coeffs[0].clone().recip();
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[m - k];
                }
            }
            b[m] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Inverse square root of a unit series: b with b·b·a = 1 + O(t^(N+1)).
    ///
    /// Only a unit constant term is supported; that keeps every coefficient
    /// rational. Computed as the square root of the reciprocal, with s₀ = 1
    /// and s_n = (q_n − Σ_{0<i<n} s_i s_{n−i})/2.
    pub fn inv_sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::UnsupportedNormalization {
                expected: "1".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let q = self.reciprocal()?;
        let n = self.order();
        let mut s = vec![Rational::zero(); n + 1];
        s[0] = Rational::one();
        let half = crate::rational::rat(1, 2);
        for m in 1..=n {
            let mut acc = q.coeffs[m].clone();
            for i in 1..m {
                acc -= &s[i] * &s[m - i];
            }
            s[m] = acc * &half;
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    /// exp(a) for a series with zero constant term, via the differential
    /// recursion e′ = a′·e, i.e. n·e_n = Σ_{k=1..n} k a_k e_{n−k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::UnsupportedNormalization {
                expected: "0".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut e = vec![Rational::zero(); n + 1];
        e[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &e[m - k];
                }
            }
            e[m] = acc / int(m as i64);
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// k-th formal derivative; the order drops to N − k.
    pub fn derivative(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::IndexOutOfRange {
                index: k,
                order: self.order(),
            });
        }
        let mut cur = self.coeffs.clone();
        for _ in 0..k {
            cur = (1..cur.len())
                .map(|j| &cur[j] * int(j as i64))
                .collect();
            if cur.is_empty() {
                cur.push(Rational::zero());
            }
        }
        Ok(TruncatedSeries { coeffs: cur })
    }

    /// Restrict to a smaller truncation order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// (unit series)^gamma for an arbitrary rational exponent, through the
    /// binomial series Σ_k C(γ, k) u^k with u = a − 1.
    ///
    /// Independent of [`Self::reciprocal`] and [`Self::inv_sqrt`]; the test
    /// suites use it as a second route for rational powers.
    pub fn pow_rational(&self, gamma: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::UnsupportedNormalization {
                expected: "1".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        let mut result = TruncatedSeries::constant(n, Rational::one());
        let mut u_pow = TruncatedSeries::constant(n, Rational::one());
        let mut coef = Rational::one();
        for k in 0..n {
            // falling-factorial update: C(γ, k+1) = C(γ, k)·(γ − k)/(k + 1)
            coef = coef * (gamma - int(k as i64)) / int(k as i64 + 1);
            u_pow = u_pow.mul(&u)?;
            if u_pow.is_zero() {
                break;
            }
            result = result.add(&u_pow.scale(&coef))?;
        }
        Ok(result)
    }

    /// Evaluate the truncated polynomial at a rational point (Horner).
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

/// The polynomial x·t + y·t^m as a series; m ≥ 1, truncated at `order`.
pub fn xt_plus_ytm(order: usize, x: &Rational, y: &Rational, m: usize) -> TruncatedSeries {
    TruncatedSeries::from_terms(order, &[(1, x.clone()), (m, y.clone())])
}

/// 1 + Σ_s x_s t^s for s = 1..p.
pub fn one_plus_linear_combo(order: usize, xs: &[Rational]) -> TruncatedSeries {
    let mut terms: Vec<(usize, Rational)> = vec![(0, Rational::one())];
    for (i, x) in xs.iter().enumerate() {
        terms.push((i + 1, x.clone()));
    }
    TruncatedSeries::from_terms(order, &terms)
}

/// Geometric-style power helper: s^k in the series ring.
pub fn series_pow(s: &TruncatedSeries, k: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::constant(s.order(), Rational::one());
    for _ in 0..k {
        acc = acc.mul(s)?;
    }
    Ok(acc)
}

/// Exact coefficient of t^n in (1 + u)^(−1/2) computed straight from the
/// binomial series — used as an independent oracle in tests.
pub fn binomial_minus_half(k: usize) -> Rational {
    // C(−1/2, k) = (−1)^k (2k)! / (4^k (k!)²)
    let num = crate::rational::factorial(2 * k);
    let den = num_bigint::BigInt::from(4u32).pow(k as u32)
        * crate::rational::factorial(k)
        * crate::rational::factorial(k);
    let mut v = Rational::new(num, den);
    if k % 2 == 1 {
        v = -v;
    }
    v
}
