//! Core value types: certified values, evaluation points, configuration.

use serde::{Deserialize, Serialize};

use crate::constants::M_CAP;
use crate::error::{BetaError, Result};

/// Which computation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// Alternating series Σ (−1)^k/(k+x)^{m+1} with paired summation.
    Series,
    /// Adaptive quadrature of ∫₀¹ (ln t)^m t^{x−1}/(1+t) dt.
    QuadratureUnit,
    /// Adaptive quadrature of ∫₀^∞ t^m e^{−xt}/(1+e^{−t}) dt.
    QuadratureLaplace,
    /// Difference of polygamma values at half arguments.
    Polygamma,
    /// Argument-reduction recurrence folded over another backend.
    Recurrence,
    /// Closed form assembled from mathematical constants.
    ClosedForm,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Self::Series => "series",
            Self::QuadratureUnit => "quad-unit",
            Self::QuadratureLaplace => "quad-laplace",
            Self::Polygamma => "polygamma",
            Self::Recurrence => "recurrence",
            Self::ClosedForm => "closed-form",
        };
        f.write_str(s)
    }
}

/// A computed value with a certified absolute error bound.
///
/// Invariants (enforced by [`ValueWithError::new`]): `value` is finite and
/// `error_bound` is finite and nonnegative. NaN or ∞ surface as errors,
/// never as a `ValueWithError`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValueWithError {
    pub value: f64,
    pub error_bound: f64,
    pub method: Method,
    pub terms_or_nodes: u64,
}

impl ValueWithError {
    pub fn new(value: f64, error_bound: f64, method: Method, terms_or_nodes: u64) -> Result<Self> {
        if !value.is_finite() {
            return Err(BetaError::Domain(format!(
                "non-finite value {value} from {method} backend"
            )));
        }
        if !error_bound.is_finite() || error_bound < 0.0 {
            return Err(BetaError::Domain(format!(
                "invalid error bound {error_bound}"
            )));
        }
        Ok(Self {
            value,
            error_bound,
            method,
            terms_or_nodes,
        })
    }

    /// Exact closed-form value (zero error bound).
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            error_bound: 0.0,
            method: Method::ClosedForm,
            terms_or_nodes: 0,
        }
    }

    /// True when `other` lies within this value's certified interval
    /// widened by `other`'s own bound.
    pub fn agrees_with(&self, other: &ValueWithError) -> bool {
        (self.value - other.value).abs() <= self.error_bound + other.error_bound
    }
}

/// Arithmetic supported by [`combine_error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Sub,
    Mul,
    /// Multiply `a` by the exact scalar `b.value` (b's bound is ignored;
    /// pass an exact scalar).
    Scale,
}

/// First-order interval arithmetic on certified values.
///
/// Bounds follow the triangle inequality: `ea + eb` for Add/Sub and
/// `|a|·eb + |b|·ea + ea·eb` for Mul. Rounding of the combining operation
/// itself is the caller's concern; these are mathematical bounds.
pub fn combine_error(a: ValueWithError, b: ValueWithError, op: CombineOp) -> Result<ValueWithError> {
    let (value, error_bound) = match op {
        CombineOp::Add => (a.value + b.value, a.error_bound + b.error_bound),
        CombineOp::Sub => (a.value - b.value, a.error_bound + b.error_bound),
        CombineOp::Mul => (
            a.value * b.value,
            a.value.abs() * b.error_bound
                + b.value.abs() * a.error_bound
                + a.error_bound * b.error_bound,
        ),
        CombineOp::Scale => (a.value * b.value, a.error_bound * b.value.abs()),
    };
    ValueWithError::new(value, error_bound, a.method, a.terms_or_nodes + b.terms_or_nodes)
}

/// A point (x, m) at which β^(m)(x) is requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    x: f64,
    m: u32,
}

impl EvalPoint {
    /// Validates x > 0 (finite) and m ≤ [`M_CAP`].
    pub fn new(x: f64, m: u32) -> Result<Self> {
        if !x.is_finite() || x <= 0.0 {
            return Err(BetaError::Domain(format!("x must be > 0, got {x}")));
        }
        if m > M_CAP {
            return Err(BetaError::OrderTooLarge { m });
        }
        Ok(Self { x, m })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Backend selection policy for the evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BackendPolicy {
    /// Series when it can certify the tolerance within budget, polygamma
    /// otherwise.
    #[default]
    Auto,
    ForceSeries,
    ForceQuadUnit,
    ForceQuadLaplace,
    ForcePolygamma,
}

/// Tolerances and budgets for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Requested certified absolute error (≥ 1e-15, the double-precision floor).
    pub target_abs_tol: f64,
    /// Cap on alternating-series terms.
    pub max_terms: u64,
    /// Cap on quadrature nodes.
    pub max_nodes: u64,
    /// Argument-reduction cutoff X0: x below this is shifted up by the
    /// recurrence before backend dispatch.
    pub reduction_threshold: f64,
    pub backend_policy: BackendPolicy,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_abs_tol: 1e-12,
            max_terms: 10_000_000,
            max_nodes: 100_000,
            reduction_threshold: 1.0,
            backend_policy: BackendPolicy::Auto,
        }
    }
}

impl EvalConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            target_abs_tol: tol,
            ..Self::default()
        }
    }

    pub fn with_policy(policy: BackendPolicy) -> Self {
        Self {
            backend_policy: policy,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol >= 1e-15 && self.target_abs_tol.is_finite()) {
            return Err(BetaError::InvalidConfig(format!(
                "target_abs_tol must be ≥ 1e-15, got {:e}",
                self.target_abs_tol
            )));
        }
        if self.max_terms == 0 || self.max_nodes == 0 {
            return Err(BetaError::InvalidConfig(
                "max_terms and max_nodes must be positive".into(),
            ));
        }
        if !(self.reduction_threshold > 0.0 && self.reduction_threshold.is_finite()) {
            return Err(BetaError::InvalidConfig(
                "reduction_threshold must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(value: f64, eb: f64) -> ValueWithError {
        ValueWithError::new(value, eb, Method::Series, 1).unwrap()
    }

    #[test]
    fn add_sums_bounds() {
        let r = combine_error(v(1.0, 0.01), v(2.0, 0.02), CombineOp::Add).unwrap();
        assert_eq!(r.value, 3.0);
        assert!((r.error_bound - 0.03).abs() < 1e-18);
    }

    #[test]
    fn scale_is_exact() {
        let r = combine_error(v(1.5, 0.0), ValueWithError::exact(2.0), CombineOp::Scale).unwrap();
        assert_eq!(r.value, 3.0);
        assert_eq!(r.error_bound, 0.0);
    }

    #[test]
    fn mul_expands_product_bound() {
        let r = combine_error(v(1.0, 0.1), v(1.0, 0.1), CombineOp::Mul).unwrap();
        assert_eq!(r.value, 1.0);
        assert!((r.error_bound - 0.21).abs() < 1e-16);
    }

    #[test]
    fn non_finite_value_is_an_error() {
        assert!(ValueWithError::new(f64::NAN, 0.0, Method::Series, 0).is_err());
        assert!(ValueWithError::new(f64::INFINITY, 0.0, Method::Series, 0).is_err());
        assert!(ValueWithError::new(1.0, -1e-30, Method::Series, 0).is_err());
        let huge = v(1e308, 0.0);
        assert!(combine_error(huge, huge, CombineOp::Mul).is_err());
    }

    #[test]
    fn eval_point_domain() {
        assert!(EvalPoint::new(0.0, 0).is_err());
        assert!(EvalPoint::new(-1.0, 0).is_err());
        assert!(EvalPoint::new(f64::NAN, 0).is_err());
        assert!(matches!(
            EvalPoint::new(1.0, M_CAP + 1),
            Err(BetaError::OrderTooLarge { .. })
        ));
        assert!(EvalPoint::new(1.0, M_CAP).is_ok());
    }

    #[test]
    fn config_floor() {
        assert!(EvalConfig::with_tol(1e-16).validate().is_err());
        assert!(EvalConfig::with_tol(1e-15).validate().is_ok());
        assert!(EvalConfig::default().validate().is_ok());
    }
}
