//! Mathematical constants and shared numeric limits.

/// ln 2 = β(1).
pub const LN2: f64 = std::f64::consts::LN_2;

/// π = 2·β(1/2).
pub const PI: f64 = std::f64::consts::PI;

/// Catalan's constant G = Σ (−1)^k/(2k+1)² = 0.915965594177...
///
/// Digits from the standard decimal expansion 0.9159655941772190150546...,
/// rounded to the nearest f64.
pub const CATALAN: f64 = 0.915_965_594_177_219_0;

/// ζ(2) = π²/6 = −2·β′(1)·... computed from PI so the identity holds to
/// machine precision.
pub const ZETA2: f64 = PI * PI / 6.0;

/// Largest derivative order accepted by the evaluator.
///
/// Beyond m = 12 the m!/x^{m+1} factors of the recurrence and the series
/// prefactor leave double precision for small x, so bounds stop being
/// meaningful. Enforced at the `EvalPoint` boundary.
pub const M_CAP: u32 = 12;

/// Polygamma order cap: the inequality checks need two orders above M_CAP.
pub const POLYGAMMA_ORDER_CAP: u32 = M_CAP + 2;

/// n! for n ≤ 14, all exactly representable in f64 (14! < 2^53).
pub const FACTORIALS: [f64; 15] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
];

/// n! as f64 for n ≤ 14.
#[inline]
pub fn factorial(n: u32) -> f64 {
    FACTORIALS[n as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_matches_published_digits() {
        assert!((CATALAN - 0.915965594177).abs() < 1e-12);
    }

    #[test]
    fn zeta2_is_pi_squared_over_six() {
        assert_eq!(ZETA2, PI * PI / 6.0);
        assert!((ZETA2 - 1.6449340668482264).abs() < 1e-15);
    }

    #[test]
    fn factorials_are_exact() {
        let mut f = 1.0_f64;
        for n in 1..=14u32 {
            f *= n as f64;
            assert_eq!(factorial(n), f);
        }
        assert_eq!(factorial(0), 1.0);
    }
}
