//! Exact polynomial containers: dense univariate polynomials, bivariate
//! (x, y) coefficient tables and p-variable coefficient tables.
//!
//! These hold the closed-form monomial expansions of the polynomial families
//! and support the coefficient-table routes of the identity checks
//! (differentiation, dilation, evaluation at rational points or at truncated
//! series arguments).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::fps::{series_pow, TruncatedSeries};
use crate::rational::{int, Rational};

/// Dense univariate polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly1 {
    coeffs: Vec<Rational>, // coeffs[k] multiplies t^k; may carry trailing zeros
}

impl Poly1 {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            Poly1 {
                coeffs: vec![Rational::zero()],
            }
        } else {
            Poly1 { coeffs }
        }
    }

    pub fn zero() -> Self {
        Poly1::new(vec![])
    }

    pub fn constant(c: Rational) -> Self {
        Poly1::new(vec![c])
    }

    /// Σ c_k t^(e_k) from sparse terms.
    pub fn from_terms(terms: &[(usize, Rational)]) -> Self {
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in terms {
            coeffs[*e] += c;
        }
        Poly1::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly1::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly1::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly1::new(coeffs)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Poly1::constant(Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        Poly1::new(
            (1..self.coeffs.len())
                .map(|k| &self.coeffs[k] * int(k as i64))
                .collect(),
        )
    }

    pub fn derivative_n(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Recenter: coefficients of p(t₀ + u) as a polynomial in u.
    pub fn shift(&self, t0: &Rational) -> Self {
        // Horner on p(t) with t = t0 + u, carried out over Q[u].
        let mut acc = Poly1::zero();
        let u_plus_t0 = Poly1::from_terms(&[(0, t0.clone()), (1, Rational::one())]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&u_plus_t0).add(&Poly1::constant(c.clone()));
        }
        acc
    }

    /// Promote to a truncated series of the given order (high-degree terms
    /// are cut off).
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let terms: Vec<(usize, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| (e, c.clone()))
            .collect();
        TruncatedSeries::from_terms(order, &terms)
    }
}

/// Bivariate polynomial as an exponent-pair → coefficient table.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyXY {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl PolyXY {
    pub fn zero() -> Self {
        PolyXY::default()
    }

    pub fn insert_add(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn from_terms(terms: &[(u32, u32, Rational)]) -> Self {
        let mut p = PolyXY::zero();
        for (i, j, c) in terms {
            p.insert_add(*i, *j, c.clone());
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for ((i, j), c) in &other.terms {
            p.insert_add(*i, *j, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PolyXY::zero();
        }
        PolyXY {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in &self.terms {
            acc += c
                * crate::rational::pow_u(x, *i as usize)
                * crate::rational::pow_u(y, *j as usize);
        }
        acc
    }

    /// r-th partial derivative in x.
    pub fn derivative_x(&self, r: u32) -> Self {
        let mut p = PolyXY::zero();
        for ((i, j), c) in &self.terms {
            if *i < r {
                continue;
            }
            let mut factor = Rational::one();
            for step in 0..r {
                factor *= int((*i - step) as i64);
            }
            p.insert_add(i - r, *j, c * factor);
        }
        p
    }

    /// Rebuild the table with each coefficient transformed as a function of
    /// its exponent pair (monomial-eigenvalue actions).
    pub fn map_coeffs(&self, f: impl Fn(u32, u32, &Rational) -> Rational) -> Self {
        let mut p = PolyXY::zero();
        for ((i, j), c) in &self.terms {
            p.insert_add(*i, *j, f(*i, *j, c));
        }
        p
    }

    /// Evaluate with truncated-series arguments for both variables.
    pub fn eval_series(
        &self,
        x: &TruncatedSeries,
        y: &TruncatedSeries,
    ) -> Result<TruncatedSeries> {
        let order = x.order();
        let mut acc = TruncatedSeries::zero(order);
        for ((i, j), c) in &self.terms {
            let xi = series_pow(x, *i as usize)?;
            let yj = series_pow(y, *j as usize)?;
            acc = acc.add(&xi.mul(&yj)?.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for PolyXY {
    /// Renders like `3/8 x^2 - 1/2 y`, higher total degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&(u32, u32), &Rational)> = self.terms.iter().collect();
        entries.sort_by(|a, b| {
            let da = a.0 .0 + a.0 .1;
            let db = b.0 .0 + b.0 .1;
            db.cmp(&da).then(b.0 .0.cmp(&a.0 .0))
        });
        for (idx, ((i, j), c)) in entries.into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            if *i > 0 {
                vars.push('x');
                if *i > 1 {
                    vars.push_str(&format!("^{i}"));
                }
            }
            if *j > 0 {
                if !vars.is_empty() {
                    vars.push(' ');
                }
                vars.push('y');
                if *j > 1 {
                    vars.push_str(&format!("^{j}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag} {vars}")?;
            }
        }
        Ok(())
    }
}

/// p-variable polynomial as an exponent-tuple → coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMulti {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyMulti {
    pub fn zero(arity: usize) -> Self {
        PolyMulti {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn insert_add(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.arity, "exponent tuple length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn eval(&self, xs: &[Rational]) -> Result<Rational> {
        if xs.len() != self.arity {
            return Err(crate::error::Error::usage(format!(
                "expected {} arguments, got {}",
                self.arity,
                xs.len()
            )));
        }
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, e) in xs.iter().zip(exps) {
                term *= crate::rational::pow_u(x, *e as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluate with a truncated series substituted for every variable.
    pub fn eval_series(&self, xs: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        if xs.len() != self.arity {
            return Err(crate::error::Error::usage(format!(
                "expected {} series arguments, got {}",
                self.arity,
                xs.len()
            )));
        }
        let order = xs
            .first()
            .map(TruncatedSeries::order)
            .unwrap_or(crate::fps::DEFAULT_ORDER);
        let mut acc = TruncatedSeries::zero(order);
        for (exps, c) in &self.terms {
            let mut term = TruncatedSeries::constant(order, c.clone());
            for (x, e) in xs.iter().zip(exps) {
                term = term.mul(&series_pow(x, *e as usize)?)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Exponent tuples (r₁, …, r_p) with Σ s·r_s = n: the index set of every
/// p-variable family in this crate.
pub fn weighted_tuples(n: usize, p: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, s: usize, p: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if s > p {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // r_s can absorb up to n/s of the remaining weight
        for r in 0..=(n / s) {
            cur.push(r as u32);
            go(n - s * r, s + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, 1, p, &mut Vec::new(), &mut out);
    out
}
