//! Compensated floating-point accumulation.
//!
//! Summing probabilities and Boltzmann weights naively loses low-order bits
//! that the rest of the crate then amplifies (normalization loops, log-sums
//! near cancellation). Everything here uses Neumaier's variant of Kahan
//! summation: the correction term also captures the case where the incoming
//! term is larger than the running sum.

/// Running Neumaier-compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    correction: f64,
}

impl CompensatedSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Fold one term into the running sum.
    pub(crate) fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.correction += (self.sum - t) + value;
        } else {
            self.correction += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// The compensated total.
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.correction
    }
}

/// Compensated sum of an iterator of terms.
pub(crate) fn sum_compensated<I>(values: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}
