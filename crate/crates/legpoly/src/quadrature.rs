//! Generalized Gauss-Laguerre quadrature: nodes and weights for the weight
//! s^α e^(−s) on [0, ∞), constructed in arbitrary-precision floating point.
//!
//! Nodes are the roots of the generalized Laguerre polynomial L_N^α, located
//! by Newton iteration on the three-term recurrence from classical initial
//! guesses; weights follow from the derivative at each node. An N-point rule
//! integrates s^k exactly (to working precision) for k ≤ 2N−1, which covers
//! every Laplace-type polynomial integrand in this crate with margin.

use rug::ops::Pow;

use crate::error::{Error, Result};
use crate::hiprec::{Float, Precision};
use crate::rational::Rational;

/// Default node count; covers degree ≤ 12 integrands with two orders of
/// magnitude of margin.
pub const DEFAULT_NODES: usize = 80;

/// Immutable node/weight table for ∫₀^∞ s^α e^(−s) f(s) ds ≈ Σ wᵢ f(sᵢ).
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    alpha: Float,
    nodes: Vec<Float>,
    weights: Vec<Float>,
    prec: Precision,
}

impl QuadratureRule {
    pub fn alpha(&self) -> &Float {
        &self.alpha
    }

    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Float] {
        &self.nodes
    }

    pub fn weights(&self) -> &[Float] {
        &self.weights
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Does this rule carry the weight exponent a family expects?
    pub fn matches_alpha(&self, expected: &Float) -> bool {
        let dev: Float = (self.alpha.clone() - expected).abs();
        dev.to_f64() < 1e-30
    }
}

/// L_N^α(x) and its derivative, via the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+α−x) L_k − (k+α) L_{k−1} and the closed derivative
/// identity x L_N′ = N L_N − (N+α) L_{N−1}.
fn laguerre_pair(n: usize, alpha: &Float, x: &Float, prec: Precision) -> (Float, Float) {
    let bits = prec.bits();
    let mut lm1 = Float::with_val(bits, 1); // L_0
    if n == 0 {
        return (lm1, Float::with_val(bits, 0));
    }
    let mut l = Float::with_val(bits, alpha + Float::with_val(bits, 1) - x.clone()); // L_1
    for k in 1..n {
        let kf = Float::with_val(bits, k as u32);
        let a: Float = Float::with_val(bits, 2 * k as u32 + 1) + alpha.clone() - x.clone();
        let b: Float = kf.clone() + alpha.clone();
        let next: Float = (a * l.clone() - b * lm1.clone()) / Float::with_val(bits, k as u32 + 1);
        lm1 = l;
        l = next;
    }
    let nf = Float::with_val(bits, n as u32);
    let dl: Float = (nf * l.clone() - (Float::with_val(bits, n as u32) + alpha.clone()) * lm1) / x.clone();
    (l, dl)
}

/// Classical initial guesses for the roots of L_N^α in increasing order.
fn initial_guess(i: usize, n: usize, alpha: f64, z1: f64, z2: f64) -> f64 {
    let nf = n as f64;
    if i == 0 {
        (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha)
    } else if i == 1 {
        z1 + (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf)
    } else {
        let ai = (i - 1) as f64;
        z1 + ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai))
            * (z1 - z2)
            / (1.0 + 0.3 * alpha)
    }
}

/// Build an N-point rule for the weight s^α e^(−s), α > −1, N ≥ 1.
pub fn build_rule(alpha: &Float, n: usize, prec: Precision) -> Result<QuadratureRule> {
    if !(alpha.clone() > -1.0) {
        return Err(Error::domain(format!(
            "weight exponent alpha must exceed -1, got {}",
            alpha.to_f64()
        )));
    }
    if n == 0 {
        return Err(Error::usage("a quadrature rule needs at least one node"));
    }
    let bits = prec.bits();
    let alpha_f64 = alpha.to_f64();
    let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32 - 8)));

    let mut nodes: Vec<Float> = Vec::with_capacity(n);
    let mut weights: Vec<Float> = Vec::with_capacity(n);
    // Γ(N+α+1)/N! prefactor of every weight
    let arg: Float = Float::with_val(bits, n as u32) + alpha.clone() + Float::with_val(bits, 1);
    let gamma_top = prec.gamma(&arg);
    let n_fact = prec.factorial(n as u32);

    let (mut z1, mut z2) = (0.0f64, 0.0f64);
    for i in 0..n {
        let guess = initial_guess(i, n, alpha_f64, z1, z2);
        z2 = z1;
        z1 = guess;
        let mut z = Float::with_val(bits, guess);
        let mut converged = false;
        let mut dl_final = Float::with_val(bits, 0);
        for _ in 0..200 {
            let (l, dl) = laguerre_pair(n, alpha, &z, prec);
            let step: Float = l / dl.clone();
            z -= step.clone();
            dl_final = dl;
            let rel: Float = step.abs() / z.clone().abs();
            if rel <= tol {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Evaluation(format!(
                "Newton iteration for node {i} of the {n}-point rule did not converge"
            )));
        }
        // polish the derivative at the converged node
        let (_, dl) = laguerre_pair(n, alpha, &z, prec);
        dl_final = dl;
        if !(z.clone() > 0.0) || nodes.last().map(|p: &Float| &z <= p).unwrap_or(false) {
            return Err(Error::Evaluation(format!(
                "nodes of the {n}-point rule are not strictly increasing and positive"
            )));
        }
        let w: Float = gamma_top.clone() / (n_fact.clone() * z.clone() * dl_final.clone().pow(2));
        if !(w.clone() > 0.0) {
            return Err(Error::Evaluation("non-positive quadrature weight".into()));
        }
        nodes.push(z);
        weights.push(w);
    }

    Ok(QuadratureRule {
        alpha: alpha.clone(),
        nodes,
        weights,
        prec,
    })
}

/// Convenience constructor for exact rational weight exponents.
pub fn build_rule_rational(alpha: &Rational, n: usize, prec: Precision) -> Result<QuadratureRule> {
    build_rule(&prec.from_rational(alpha), n, prec)
}

/// Σ wᵢ f(sᵢ); errors if the integrand produces a non-finite value.
pub fn integrate(rule: &QuadratureRule, mut f: impl FnMut(&Float) -> Float) -> Result<Float> {
    let mut acc = rule.prec.zero();
    for (s, w) in rule.nodes.iter().zip(&rule.weights) {
        let v = f(s);
        if !v.is_finite() {
            return Err(Error::Evaluation(format!(
                "integrand not finite at node {}",
                s.to_f64()
            )));
        }
        acc += v * w.clone();
    }
    Ok(acc)
}

/// Quadrature estimate of Γ(ν): either with a rule whose α = ν − 1 and f ≡ 1,
/// or with an α = 0 rule and the factor s^(ν−1) as integrand.
pub fn gamma_check(nu: &Float, rule: &QuadratureRule) -> Result<Float> {
    if !(nu.clone() > 0.0) {
        return Err(Error::domain("gamma integral requires a positive argument"));
    }
    let prec = rule.prec;
    let shifted: Float = nu.clone() - Float::with_val(prec.bits(), 1);
    if rule.matches_alpha(&shifted) {
        return integrate(rule, |_| prec.one());
    }
    if rule.matches_alpha(&prec.zero()) {
        let e = shifted;
        return integrate(rule, |s| Float::with_val(prec.bits(), s.pow(&e)));
    }
    Err(Error::usage(
        "rule weight does not match the requested gamma argument",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::digits(50)
    }

    #[test]
    fn one_point_rule_is_node_one_weight_one() {
        let p = prec();
        let rule = build_rule(&p.zero(), 1, p).unwrap();
        assert!((rule.nodes()[0].to_f64() - 1.0).abs() < 1e-45);
        assert!((rule.weights()[0].to_f64() - 1.0).abs() < 1e-45);
    }

    #[test]
    fn weights_sum_to_gamma_alpha_plus_one() {
        let p = prec();
        for (alpha, expected) in [
            (p.f(0.0), 1.0),                   // Γ(1)
            (p.f(-0.5), p.sqrt_pi().to_f64()), // Γ(1/2)
            (p.f(3.0), 6.0),                   // Γ(4)
        ] {
            let rule = build_rule(&alpha, 40, p).unwrap();
            let total = integrate(&rule, |_| p.one()).unwrap();
            assert!(
                (total.to_f64() - expected).abs() <= 1e-40 * expected.abs().max(1.0),
                "alpha {} sum {}",
                alpha.to_f64(),
                total.to_f64()
            );
        }
    }

    #[test]
    fn monomial_exactness_to_degree_2n_minus_1() {
        let p = prec();
        for alpha in [p.f(0.0), p.f(-0.5), p.f(3.0)] {
            let n = 40;
            let rule = build_rule(&alpha, n, p).unwrap();
            for k in [0usize, 1, 7, 40, 2 * n - 1] {
                let est = integrate(&rule, |s| p.pow_i(s, k as i64)).unwrap();
                let arg: Float = alpha.clone() + p.f(k as f64 + 1.0);
                let exact = p.gamma(&arg);
                let rel: Float = (est - exact.clone()).abs() / exact;
                assert!(
                    rel.to_f64() <= 1e-12,
                    "alpha {} k {} rel {}",
                    alpha.to_f64(),
                    k,
                    rel.to_f64()
                );
            }
        }
    }

    #[test]
    fn gamma_check_known_values() {
        let p = prec();
        let rule0 = build_rule(&p.zero(), 40, p).unwrap();
        // ν = 1 → Γ(1) = 1 and ν = 5 → Γ(5) = 24 on the α = 0 rule
        assert!((gamma_check(&p.f(1.0), &rule0).unwrap().to_f64() - 1.0).abs() < 1e-12);
        assert!((gamma_check(&p.f(5.0), &rule0).unwrap().to_f64() - 24.0).abs() < 1e-12);
        // ν = 1/2 → √π on the matching α = −1/2 rule
        let rule_h = build_rule(&p.f(-0.5), 80, p).unwrap();
        let est = gamma_check(&p.f(0.5), &rule_h).unwrap();
        assert!((est.to_f64() - p.sqrt_pi().to_f64()).abs() < 1e-40);
        // domain and mismatch errors
        assert!(gamma_check(&p.f(-1.0), &rule0).is_err());
        let rule3 = build_rule(&p.f(3.0), 10, p).unwrap();
        assert!(gamma_check(&p.f(0.5), &rule3).is_err());
    }

    #[test]
    fn alpha_at_or_below_minus_one_rejected() {
        let p = prec();
        assert!(build_rule(&p.f(-1.0), 10, p).is_err());
        assert!(build_rule(&p.f(-1.5), 10, p).is_err());
    }
}
