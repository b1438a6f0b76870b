//! Structured pass/fail records produced by the verification harness.
//!
//! Every identity check returns a [`VerificationReport`]: the identity name,
//! the parameter point, a pass/fail status, the maximum absolute deviation
//! between routes (exactly 0 for exact checks that pass), and per-index route
//! values. Reports serialize to the JSON shape
//! `{identity, params, status, deviation, details[]}`; exact rational
//! parameters are carried as `{"num", "den"}` string pairs, floats carry an
//! explicit precision field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rational::{to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A parameter value attached to a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Rational { num: String, den: String },
    Real { value: f64, precision_digits: u32 },
    Text(String),
}

impl ParamValue {
    pub fn rational(r: &Rational) -> Self {
        ParamValue::Rational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    pub fn parse_rational(&self) -> Option<Rational> {
        match self {
            ParamValue::Rational { num, den } => {
                let n = num.parse().ok()?;
                let d = den.parse().ok()?;
                Some(Rational::new(n, d))
            }
            ParamValue::Int(v) => Some(crate::rational::int(*v)),
            _ => None,
        }
    }

    /// Compact single-token rendering for CSV cells and human output.
    pub fn compact(&self) -> String {
        match self {
            ParamValue::Int(v) => v.to_string(),
            ParamValue::Rational { num, den } => {
                if den == "1" {
                    num.clone()
                } else {
                    format!("{num}/{den}")
                }
            }
            ParamValue::Real { value, .. } => format!("{value}"),
            ParamValue::Text(s) => s.clone(),
        }
    }
}

/// Route values for one compared index (a coefficient index, a degree, a
/// sample point, …).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RouteDetail {
    pub index: String,
    pub left: String,
    pub right: String,
    pub deviation: f64,
}

/// Outcome of one identity check at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, ParamValue>,
    pub status: Status,
    pub deviation: f64,
    pub details: Vec<RouteDetail>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Deterministic sort key: identity name, then the parameter map
    /// rendered compactly (the map iterates in key order).
    pub fn sort_key(&self) -> (String, String) {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", v.compact()))
            .collect::<Vec<_>>()
            .join(";");
        (self.identity.clone(), params)
    }
}

/// Incremental report builder shared by all the checks.
pub struct ReportBuilder {
    identity: String,
    params: BTreeMap<String, ParamValue>,
    details: Vec<RouteDetail>,
    max_deviation: f64,
    all_equal: bool,
    tolerance: Option<f64>,
}

impl ReportBuilder {
    pub fn new(identity: impl Into<String>) -> Self {
        ReportBuilder {
            identity: identity.into(),
            params: BTreeMap::new(),
            details: Vec::new(),
            max_deviation: 0.0,
            all_equal: true,
            tolerance: None,
        }
    }

    /// Declare a numeric tolerance; without one the report is exact
    /// (pass ⟺ every compared pair is structurally equal).
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn param(mut self, key: impl Into<String>, value: ParamValue) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn param_rational(self, key: impl Into<String>, r: &Rational) -> Self {
        self.param(key, ParamValue::rational(r))
    }

    pub fn param_int(self, key: impl Into<String>, v: i64) -> Self {
        self.param(key, ParamValue::Int(v))
    }

    /// Record an exact comparison of two rationals.
    pub fn compare_exact(&mut self, index: impl Into<String>, left: &Rational, right: &Rational) {
        let equal = left == right;
        let deviation = if equal {
            0.0
        } else {
            to_f64(&(left - right)).abs()
        };
        self.push(index.into(), left.to_string(), right.to_string(), deviation);
        if !equal {
            self.all_equal = false;
        }
    }

    /// Record a numeric comparison (judged against the tolerance at finish).
    pub fn compare_float(&mut self, index: impl Into<String>, left: f64, right: f64) {
        let deviation = (left - right).abs();
        self.push(
            index.into(),
            format!("{left:.17e}"),
            format!("{right:.17e}"),
            deviation,
        );
        if deviation != 0.0 {
            self.all_equal = false;
        }
    }

    /// Record a precomputed deviation with string route values.
    pub fn compare_raw(
        &mut self,
        index: impl Into<String>,
        left: String,
        right: String,
        deviation: f64,
    ) {
        self.push(index.into(), left, right, deviation);
        if deviation != 0.0 {
            self.all_equal = false;
        }
    }

    fn push(&mut self, index: String, left: String, right: String, deviation: f64) {
        if deviation.is_nan() {
            self.max_deviation = f64::NAN;
        } else if deviation > self.max_deviation {
            self.max_deviation = deviation;
        }
        self.details.push(RouteDetail {
            index,
            left,
            right,
            deviation,
        });
    }

    /// Close the report, deciding pass/fail from the recorded comparisons.
    pub fn finish(self) -> VerificationReport {
        let pass = match self.tolerance {
            None => self.all_equal,
            Some(tol) => !self.max_deviation.is_nan() && self.max_deviation <= tol,
        };
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: if pass { Status::Pass } else { Status::Fail },
            deviation: self.max_deviation,
            details: self.details,
        }
    }

    /// Close the report with an externally supplied verdict (monotonicity
    /// assertions and other non-pairwise criteria).
    pub fn finish_with(self, pass: bool) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: if pass { Status::Pass } else { Status::Fail },
            deviation: self.max_deviation,
            details: self.details,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn exact_report_pass_and_fail() {
        let mut b = ReportBuilder::new("demo").param_int("n", 3);
        b.compare_exact("0", &int(1), &int(1));
        b.compare_exact("1", &rat(1, 2), &rat(1, 2));
        let r = b.finish();
        assert!(r.passed());
        assert_eq!(r.deviation, 0.0);

        let mut b = ReportBuilder::new("demo");
        b.compare_exact("0", &int(1), &rat(3, 2));
        let r = b.finish();
        assert!(!r.passed());
        assert!((r.deviation - 0.5).abs() < 1e-15);
    }

    #[test]
    fn tolerance_report() {
        let mut b = ReportBuilder::new("demo").with_tolerance(1e-9);
        b.compare_float("0", 1.0, 1.0 + 1e-12);
        assert!(b.finish().passed());
        let mut b = ReportBuilder::new("demo").with_tolerance(1e-9);
        b.compare_float("0", 1.0, 1.1);
        assert!(!b.finish().passed());
    }

    #[test]
    fn rational_param_round_trip() {
        let v = ParamValue::rational(&rat(-3, 2));
        let json = serde_json::to_string(&v).unwrap();
        let back: ParamValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back.parse_rational().unwrap(), rat(-3, 2));
    }
}
