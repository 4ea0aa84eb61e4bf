//! Validated finite probability distributions.
//!
//! [`ProbDist`] is the classical state type: a non-empty vector of finite,
//! non-negative weights that sum to one. Construction is the only way to
//! obtain one, so every downstream operation may assume the invariants hold.
//!
//! Normalization is a fixed point, not a single division: after dividing by
//! the compensated sum the result is re-summed and divided again until the
//! sum is exactly `1.0` or the weights stop changing. In practice this takes
//! one or two passes and makes `ProbDist::new` idempotent — feeding the
//! weights of a `ProbDist` back in reproduces them bit for bit.

use crate::error::{Error, Result};
use crate::numeric::sum_compensated;

/// Weights this far below zero are treated as roundoff and clamped to zero;
/// anything lower is rejected as genuinely negative.
pub const NEGATIVITY_TOLERANCE: f64 = 1e-12;

/// Strict construction rejects inputs whose sum strays from 1 by more than
/// this before any renormalization.
pub const STRICT_SUM_TOLERANCE: f64 = 1e-9;

/// Upper bound on normalization passes; the fixed point is reached in one or
/// two in practice, so hitting this indicates a logic error, not bad data.
const MAX_NORMALIZE_PASSES: usize = 64;

/// A finite probability distribution: non-negative weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbDist {
    weights: Vec<f64>,
}

impl ProbDist {
    /// Build a distribution from raw weights, renormalizing their sum away.
    ///
    /// Entries must be finite and no lower than `-`[`NEGATIVITY_TOLERANCE`];
    /// slightly negative entries are clamped to zero before normalization.
    pub fn new(raw: &[f64]) -> Result<Self> {
        Self::build(raw, false)
    }

    /// Like [`ProbDist::new`], but additionally reject inputs whose raw sum
    /// differs from 1 by more than [`STRICT_SUM_TOLERANCE`].
    pub fn new_strict(raw: &[f64]) -> Result<Self> {
        Self::build(raw, true)
    }

    /// The uniform distribution on `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(&vec![1.0; n])
    }

    fn build(raw: &[f64], strict: bool) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value < -NEGATIVITY_TOLERANCE {
                return Err(Error::NegativeWeight { index, value });
            }
        }
        if strict {
            let sum = sum_compensated(raw.iter().copied());
            if (sum - 1.0).abs() > STRICT_SUM_TOLERANCE {
                return Err(Error::NotNormalized(sum));
            }
        }
        let mut weights: Vec<f64> = raw.iter().map(|&w| w.max(0.0)).collect();
        for _ in 0..MAX_NORMALIZE_PASSES {
            let sum = sum_compensated(weights.iter().copied());
            if !(sum > 0.0) || !sum.is_finite() {
                return Err(Error::NotNormalizable(sum));
            }
            if sum == 1.0 {
                return Ok(Self { weights });
            }
            let rescaled: Vec<f64> = weights.iter().map(|&w| w / sum).collect();
            if rescaled == weights {
                // Division no longer moves the weights; this is the fixed
                // point even though the sum is off by a final ulp.
                return Ok(Self { weights });
            }
            weights = rescaled;
        }
        Ok(Self { weights })
    }

    /// The normalized weights.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of outcomes (normalized or not, always at least one).
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Always false: empty distributions cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of weights strictly greater than `threshold`.
    ///
    /// With `threshold = 0.0` this is the exact support size; a small
    /// positive threshold counts "effective" support instead.
    pub fn support_size(&self, threshold: f64) -> usize {
        self.weights.iter().filter(|&&w| w > threshold).count()
    }

    /// The largest weight.
    pub fn max_weight(&self) -> f64 {
        self.weights.iter().copied().fold(f64::MIN, f64::max)
    }
}
