//! Two-variable, lacunary and p-variable complete Hermite polynomials.
//!
//! The two-variable polynomial of degree n is
//! H_n(x, y) = n! Σ_{r ≤ n/2} x^(n−2r) y^r / ((n−2r)! r!),
//! generated by exp(x t + y t²); the lacunary variant jumps the powers of t
//! by m, and the p-variable complete form is generated by exp(Σ x_s t^s).
//! Everything here is exact over the rationals; float evaluators (used by the
//! quadrature routes) mirror the same sums in arbitrary precision.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::{xt_plus_ytm, TruncatedSeries};
use crate::hiprec::{Float, Precision};
use crate::poly::{weighted_tuples, PolyMulti, PolyXY};
use crate::rational::{factorial, factorial_rat, int, pow_u, Rational};
use crate::report::{ReportBuilder, VerificationReport};

/// Degree and lacunarity pair; m = 2 is the classical two-variable case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HermiteParams {
    pub n: usize,
    pub m: usize,
}

impl HermiteParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::usage("lacunarity m must be at least 2"));
        }
        Ok(HermiteParams { n, m })
    }
}

/// H_n(x, y), exactly.
pub fn hermite2_eval(n: usize, x: &Rational, y: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let n_fact = factorial_rat(n);
    for r in 0..=(n / 2) {
        let term = pow_u(x, n - 2 * r) * pow_u(y, r)
            / (factorial_rat(n - 2 * r) * factorial_rat(r));
        acc += term;
    }
    acc * n_fact
}

/// Exact coefficient table of H_n(x, y).
pub fn hermite2_poly(n: usize) -> PolyXY {
    let n_fact = factorial(n);
    let mut p = PolyXY::zero();
    for r in 0..=(n / 2) {
        let c = Rational::new(
            n_fact.clone(),
            factorial(n - 2 * r) * factorial(r),
        );
        p.insert_add((n - 2 * r) as u32, r as u32, c);
    }
    p
}

/// Lacunary H_n^(m)(x, y); m = 2 reproduces [`hermite2_eval`].
pub fn hermite_lacunary_eval(n: usize, m: usize, x: &Rational, y: &Rational) -> Result<Rational> {
    let params = HermiteParams::new(n, m)?;
    let mut acc = Rational::zero();
    for r in 0..=(params.n / params.m) {
        let term = pow_u(x, n - m * r) * pow_u(y, r)
            / (factorial_rat(n - m * r) * factorial_rat(r));
        acc += term;
    }
    Ok(acc * factorial_rat(n))
}

/// p-variable complete Hermite polynomial H_n^(p,p−1,…,1)(x₁, …, x_p),
/// through the degree-reduction recursion over the last variable.
pub fn hermite_multivar_eval(n: usize, xs: &[Rational]) -> Result<Rational> {
    if xs.is_empty() {
        return Err(Error::usage("at least one variable required"));
    }
    Ok(scaled_multivar(n, xs) * factorial_rat(n))
}

/// H_n^(p,…,1)/n! : base case x₁^n/n!, recursion
/// g(n, p) = Σ_{r ≤ n/p} g(n − p r, p−1) x_p^r / r!.
fn scaled_multivar(n: usize, xs: &[Rational]) -> Rational {
    let p = xs.len();
    if p == 1 {
        return pow_u(&xs[0], n) / factorial_rat(n);
    }
    let last = &xs[p - 1];
    let rest = &xs[..p - 1];
    let mut acc = Rational::zero();
    for r in 0..=(n / p) {
        acc += scaled_multivar(n - p * r, rest) * pow_u(last, r) / factorial_rat(r);
    }
    acc
}

/// Exact coefficient table of H_n^(p,…,1): the monomial on the exponent
/// tuple (r₁, …, r_p) with Σ s·r_s = n carries n!/Π r_s!.
pub fn hermite_multivar_poly(n: usize, p: usize) -> PolyMulti {
    let n_fact = factorial(n);
    let mut poly = PolyMulti::zero(p);
    for tuple in weighted_tuples(n, p) {
        let mut den = num_bigint::BigInt::one();
        for r in &tuple {
            den *= factorial(*r as usize);
        }
        poly.insert_add(tuple, Rational::new(n_fact.clone(), den));
    }
    poly
}

/// Route agreement between the explicit sum and the generating-function
/// coefficients: n!·[t^n] exp(x t + y t²) = H_n(x, y) for every n ≤ order.
pub fn hermite2_genfun_check(x: &Rational, y: &Rational, order: usize) -> Result<VerificationReport> {
    let series = xt_plus_ytm(order, x, y, 2).exp()?;
    let mut b = ReportBuilder::new("hermite2-generating-function")
        .param_rational("x", x)
        .param_rational("y", y)
        .param_int("order", order as i64);
    for n in 0..=order {
        let from_series = series.coefficient(n)? * factorial_rat(n);
        let direct = hermite2_eval(n, x, y);
        b.compare_exact(n.to_string(), &direct, &from_series);
    }
    Ok(b.finish())
}

/// Truncated heat-operator action Σ_{k ≤ n/2} y^k ∂_x^(2k)/k! on x^n.
///
/// The sum is finite because high derivatives of the monomial vanish; the
/// result's coefficient table (a polynomial in x alone) equals the expansion
/// of H_n(x, y) with this y substituted.
pub fn heat_operator_apply(n: usize, y: &Rational) -> PolyXY {
    let monomial = PolyXY::from_terms(&[(n as u32, 0, Rational::one())]);
    let mut acc = PolyXY::zero();
    let mut y_pow = Rational::one();
    for k in 0..=(n / 2) {
        let d = monomial.derivative_x(2 * k as u32);
        acc = acc.add(&d.scale(&(y_pow.clone() / factorial_rat(k))));
        y_pow *= y;
    }
    acc
}

/// Which Euler operator weights the monomials of a dilation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerWeight {
    /// x∂x alone: eigenvalue i on x^i y^j.
    X,
    /// x∂x + y∂y: eigenvalue i + j on x^i y^j.
    XY,
}

/// Monomial-eigenvalue dilation λ^(x∂x) (or λ^(x∂x + y∂y)): each monomial is
/// scaled by λ^weight. No operator exponential is ever formed.
pub fn euler_dilation_apply(poly: &PolyXY, lam: &Rational, weight: EulerWeight) -> Result<PolyXY> {
    if lam.is_zero() {
        return Err(Error::domain("dilation factor must be nonzero"));
    }
    Ok(poly.map_coeffs(|i, j, c| {
        let w = match weight {
            EulerWeight::X => i,
            EulerWeight::XY => i + j,
        };
        c * pow_u(lam, w as usize)
    }))
}

/// H_n(X, Y) with float arguments at the given precision.
pub fn hermite2_eval_f(n: usize, x: &Float, y: &Float, prec: Precision) -> Float {
    hermite_lacunary_eval_f(n, 2, x, y, prec)
}

/// H_n^(m)(X, Y) with float arguments.
pub fn hermite_lacunary_eval_f(n: usize, m: usize, x: &Float, y: &Float, prec: Precision) -> Float {
    let mut acc = prec.zero();
    for r in 0..=(n / m) {
        let term: Float = prec.pow_i(x, (n - m * r) as i64) * prec.pow_i(y, r as i64)
            / (prec.factorial((n - m * r) as u32) * prec.factorial(r as u32));
        acc += term;
    }
    acc * prec.factorial(n as u32)
}

/// H_n^(p,…,1) with float arguments.
pub fn hermite_multivar_eval_f(n: usize, xs: &[Float], prec: Precision) -> Float {
    fn scaled(n: usize, xs: &[Float], prec: Precision) -> Float {
        let p = xs.len();
        if p == 1 {
            return prec.pow_i(&xs[0], n as i64) / prec.factorial(n as u32);
        }
        let mut acc = prec.zero();
        for r in 0..=(n / p) {
            let term: Float = scaled(n - p * r, &xs[..p - 1], prec)
                * prec.pow_i(&xs[p - 1], r as i64)
                / prec.factorial(r as u32);
            acc += term;
        }
        acc
    }
    scaled(n, xs, prec) * prec.factorial(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn two_variable_values() {
        // H₂(x,y) = x² + 2y at (3,2) = 13
        assert_eq!(hermite2_eval(2, &int(3), &int(2)), int(13));
        // H_n(x,0) = x^n
        assert_eq!(hermite2_eval(5, &int(2), &int(0)), int(32));
        // H₀ = 1
        assert_eq!(hermite2_eval(0, &rat(7, 3), &rat(-1, 2)), int(1));
    }

    #[test]
    fn poly_table_matches_eval() {
        for n in 0..=10 {
            let table = hermite2_poly(n);
            for (x, y) in [(int(1), int(1)), (rat(1, 2), int(-2)), (int(-3), rat(2, 5))] {
                assert_eq!(table.eval(&x, &y), hermite2_eval(n, &x, &y));
            }
        }
        assert_eq!(hermite2_poly(2).to_string(), "x^2 + 2 y");
    }

    #[test]
    fn lacunary_values() {
        // H₃^(3)(x,y) = x³ + 6y at (1,1) = 7
        assert_eq!(
            hermite_lacunary_eval(3, 3, &int(1), &int(1)).unwrap(),
            int(7)
        );
        // n < m leaves only the r = 0 term
        assert_eq!(
            hermite_lacunary_eval(2, 5, &int(3), &int(9)).unwrap(),
            int(9)
        );
        // m = 2 reduction
        assert_eq!(
            hermite_lacunary_eval(2, 2, &int(1), &int(1)).unwrap(),
            hermite2_eval(2, &int(1), &int(1))
        );
        assert!(hermite_lacunary_eval(3, 1, &int(1), &int(1)).is_err());
    }

    #[test]
    fn lacunary_reduces_to_two_variable_everywhere() {
        for n in 0..=12 {
            for (x, y) in [(int(2), int(-1)), (rat(-1, 2), rat(3, 4))] {
                assert_eq!(
                    hermite_lacunary_eval(n, 2, &x, &y).unwrap(),
                    hermite2_eval(n, &x, &y)
                );
            }
        }
    }

    #[test]
    fn multivar_values() {
        // H₂^(2,1)(1,1) = 3 agrees with H₂(1,1)
        assert_eq!(
            hermite_multivar_eval(2, &[int(1), int(1)]).unwrap(),
            int(3)
        );
        // H₃^(3,2,1)(1,1,1) = 13
        assert_eq!(
            hermite_multivar_eval(3, &[int(1), int(1), int(1)]).unwrap(),
            int(13)
        );
        // single variable: x₁^n
        assert_eq!(hermite_multivar_eval(4, &[int(3)]).unwrap(), int(81));
        assert!(hermite_multivar_eval(2, &[]).is_err());
    }

    #[test]
    fn multivar_recursion_matches_table_and_series() {
        // three routes: recursion, coefficient table, generating function
        let xs = [int(1), rat(-1, 2), int(2)];
        let gen = crate::fps::one_plus_linear_combo(10, &xs);
        // exp(Σ x_s t^s): build from terms directly
        let expo = TruncatedSeries::from_terms(
            10,
            &[(1, xs[0].clone()), (2, xs[1].clone()), (3, xs[2].clone())],
        )
        .exp()
        .unwrap();
        let _ = gen;
        for n in 0..=10 {
            let rec = hermite_multivar_eval(n, &xs).unwrap();
            let table = hermite_multivar_poly(n, 3).eval(&xs).unwrap();
            let series = expo.coefficient(n).unwrap() * factorial_rat(n);
            assert_eq!(rec, table);
            assert_eq!(rec, series);
        }
        // p = 2 reduction to the two-variable polynomial
        for n in 0..=8 {
            assert_eq!(
                hermite_multivar_eval(n, &[int(1), int(1)]).unwrap(),
                hermite2_eval(n, &int(1), &int(1))
            );
        }
    }

    #[test]
    fn genfun_check_samples() {
        assert!(hermite2_genfun_check(&int(1), &int(1), 16).unwrap().passed());
        assert!(hermite2_genfun_check(&int(0), &int(0), 8).unwrap().passed());
        assert!(hermite2_genfun_check(&int(-2), &int(3), 16)
            .unwrap()
            .passed());
    }

    #[test]
    fn heat_operator_examples() {
        // n = 2, y = 1 → x² + 2
        let p = heat_operator_apply(2, &int(1));
        assert_eq!(
            p,
            PolyXY::from_terms(&[(2, 0, int(1)), (0, 0, int(2))])
        );
        // n = 1: the second derivative kills x
        let p = heat_operator_apply(1, &rat(100, 7));
        assert_eq!(p, PolyXY::from_terms(&[(1, 0, int(1))]));
        // n = 4 at y = 1/2 agrees with the explicit sum for several x
        let p = heat_operator_apply(4, &rat(1, 2));
        for x in [int(0), int(1), int(2)] {
            assert_eq!(
                p.eval(&x, &int(0)),
                hermite2_eval(4, &x, &rat(1, 2))
            );
        }
    }

    #[test]
    fn heat_operator_route_agreement_on_grid() {
        for n in 0..=16 {
            let table = heat_operator_apply(n, &rat(-3, 2));
            for x in [int(-1), rat(1, 2), int(2)] {
                assert_eq!(
                    table.eval(&x, &int(0)),
                    hermite2_eval(n, &x, &rat(-3, 2))
                );
            }
        }
    }

    #[test]
    fn euler_dilation_examples() {
        // λ^(x∂x) x² with λ=3 → 9x²
        let x2 = PolyXY::from_terms(&[(2, 0, int(1))]);
        assert_eq!(
            euler_dilation_apply(&x2, &int(3), EulerWeight::X).unwrap(),
            PolyXY::from_terms(&[(2, 0, int(9))])
        );
        // λ = 1 is the identity
        let h3 = hermite2_poly(3);
        assert_eq!(
            euler_dilation_apply(&h3, &int(1), EulerWeight::XY).unwrap(),
            h3
        );
        // weighted dilation of H₂ = x² + 2y with λ=2 → 4x² + 4y
        let h2 = hermite2_poly(2);
        assert_eq!(
            euler_dilation_apply(&h2, &int(2), EulerWeight::XY).unwrap(),
            PolyXY::from_terms(&[(2, 0, int(4)), (0, 1, int(4))])
        );
        assert!(euler_dilation_apply(&h2, &int(0), EulerWeight::X).is_err());
    }

    #[test]
    fn recurrence_route() {
        // H_{n+1} = x H_n + 2 n y H_{n−1}
        let (x, y) = (rat(1, 2), rat(-3, 2));
        for n in 1..=20 {
            let lhs = hermite2_eval(n + 1, &x, &y);
            let rhs = &x * hermite2_eval(n, &x, &y)
                + int(2) * int(n as i64) * &y * hermite2_eval(n - 1, &x, &y);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn float_evaluators_match_exact() {
        let prec = Precision::digits(50);
        let x = rat(-3, 2);
        let y = rat(1, 2);
        for n in 0..=12 {
            let exact = prec.from_rational(&hermite2_eval(n, &x, &y));
            let float = hermite2_eval_f(n, &prec.from_rational(&x), &prec.from_rational(&y), prec);
            let dev: Float = (exact - float).abs();
            assert!(dev.to_f64() < 1e-40);
        }
        let xs = [int(1), rat(-1, 2), int(2)];
        let fx: Vec<Float> = xs.iter().map(|v| prec.from_rational(v)).collect();
        for n in 0..=8 {
            let exact = prec.from_rational(&hermite_multivar_eval(n, &xs).unwrap());
            let float = hermite_multivar_eval_f(n, &fx, prec);
            let dev: Float = (exact - float).abs();
            assert!(dev.to_f64() < 1e-40);
        }
    }
}
