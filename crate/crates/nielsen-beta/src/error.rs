//! Error type shared by all evaluation routines.

use std::fmt;

use crate::constants::M_CAP;

/// Errors from β-function evaluation and the verification harness.
#[derive(Debug, Clone, PartialEq)]
pub enum BetaError {
    /// Argument outside the function's domain (x ≤ 0, non-finite input, ...).
    Domain(String),
    /// Derivative order above [`M_CAP`].
    OrderTooLarge { m: u32 },
    /// The alternating series cannot certify the requested tolerance within
    /// the term budget; the caller should argument-reduce or switch backend.
    TermBudgetExceeded { needed: u64, budget: u64 },
    /// Adaptive quadrature exhausted its node budget before the error
    /// estimate dropped below target.
    NonConvergence { nodes: u64 },
    /// No backend can certify the requested absolute tolerance at this point.
    ToleranceUnreachable { requested: f64, achieved: f64 },
    /// Interval too short for a certified difference quotient.
    DegenerateInterval,
    /// Hölder exponent tuple with non-integer m/a + n/b.
    InadmissibleTuple(String),
    /// Invalid evaluation or grid configuration.
    InvalidConfig(String),
}

impl fmt::Display for BetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::OrderTooLarge { m } => {
                write!(f, "derivative order m = {m} exceeds cap {M_CAP}")
            }
            Self::TermBudgetExceeded { needed, budget } => write!(
                f,
                "series needs ~{needed} terms to certify the tolerance, budget is {budget}"
            ),
            Self::NonConvergence { nodes } => {
                write!(f, "quadrature did not converge within {nodes} nodes")
            }
            Self::ToleranceUnreachable { requested, achieved } => write!(
                f,
                "requested tolerance {requested:e} unreachable (achieved {achieved:e})"
            ),
            Self::DegenerateInterval => {
                write!(f, "interval too short: |b - a| must be at least 1e-8")
            }
            Self::InadmissibleTuple(msg) => write!(f, "inadmissible exponent tuple: {msg}"),
            Self::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

impl std::error::Error for BetaError {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, BetaError>;
