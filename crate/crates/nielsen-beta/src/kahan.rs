//! Compensated (Neumaier) summation with a running rounding bound.

/// Neumaier-compensated accumulator.
///
/// Tracks Σ|t| alongside the compensated sum so callers can bound the
/// accumulated rounding: for n terms the compensated result differs from
/// the exact sum by at most (2u + n·u²)·Σ|t| with u the unit roundoff.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
    count: u64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, t: f64) {
        let s = self.sum + t;
        if self.sum.abs() >= t.abs() {
            self.comp += (self.sum - s) + t;
        } else {
            self.comp += (t - s) + self.sum;
        }
        self.sum = s;
        self.abs_sum += t.abs();
        self.count += 1;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Sum of |t| over everything added so far.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Bound on the rounding error of [`value`](Self::value) relative to the
    /// exact sum of the terms as given.
    pub fn rounding_bound(&self) -> f64 {
        let u = 0.5 * f64::EPSILON;
        (2.0 * u + self.count as f64 * u * u) * self.abs_sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation_naive_summation_loses() {
        let mut acc = CompensatedSum::new();
        acc.add(1.0);
        acc.add(1e-16);
        acc.add(1e-16);
        acc.add(-1.0);
        assert_eq!(acc.value(), 2e-16);
    }

    #[test]
    fn rounding_bound_covers_harmonic_sum() {
        let mut acc = CompensatedSum::new();
        for k in 1..=100_000u64 {
            acc.add(1.0 / k as f64);
        }
        // Reference from one extra compensated pass in reverse order.
        let mut rev = CompensatedSum::new();
        for k in (1..=100_000u64).rev() {
            rev.add(1.0 / k as f64);
        }
        assert!((acc.value() - rev.value()).abs() <= acc.rounding_bound() + rev.rounding_bound());
    }
}
