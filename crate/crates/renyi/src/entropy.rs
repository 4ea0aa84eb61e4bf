//! The Rényi entropy family.
//!
//! For a distribution `p` and order `q ∈ [0, ∞]` the Rényi entropy is
//!
//! ```text
//! S_q(p) = ln(Σ_i p_i^q) / (1 - q)          for finite q ∉ {0, 1}
//! S_0(p) = ln |{i : p_i > 0}|               (max-entropy / Hartley)
//! S_1(p) = -Σ_i p_i ln p_i                  (Shannon, the q → 1 limit)
//! S_∞(p) = -ln max_i p_i                    (min-entropy)
//! ```
//!
//! The family is non-increasing in `q` and bounded by `0 ≤ S_q ≤ ln n`.
//!
//! Orders are classified once, at the [`EntropyOrder`] boundary: `q` within
//! [`Q_ONE_THRESHOLD`] of 1 is routed to the Shannon limit rather than
//! through the `1/(1-q)` pole, and `q ∈ {0, ∞}` take their closed forms.
//! The finite-order power sum is evaluated in log space with the largest
//! weight factored out, so extreme orders neither underflow nor overflow:
//!
//! ```text
//! ln Σ p_i^q = q·ln p_max + ln Σ exp(q·(ln p_i - ln p_max))
//! ```

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::spectral::{validate_density, HermitianOperator};

/// Orders within this distance of 1 are treated as the Shannon limit; the
/// secant-based checks in [`crate::qcalc`] refuse the same window, so the
/// two modules agree on where the `q`-deformation degenerates.
pub const Q_ONE_THRESHOLD: f64 = 1e-6;

/// A validated entropy order `q ∈ [0, ∞]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EntropyOrder {
    /// `q = 0`: log of the support size.
    Zero,
    /// `q = 1` (or within [`Q_ONE_THRESHOLD`] of it): Shannon entropy.
    One,
    /// `q = ∞`: min-entropy.
    Infinity,
    /// Any other finite positive order.
    Finite(FiniteOrder),
}

/// A finite order `q > 0` with `|q - 1| > Q_ONE_THRESHOLD`, constructible
/// only through [`EntropyOrder::new`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiniteOrder(f64);

impl FiniteOrder {
    /// The underlying order.
    pub fn value(self) -> f64 {
        self.0
    }
}

impl EntropyOrder {
    /// Classify an order, rejecting NaN and negative values.
    pub fn new(q: f64) -> Result<Self> {
        if q.is_nan() || q < 0.0 {
            return Err(Error::InvalidOrder(q));
        }
        Ok(if q == 0.0 {
            EntropyOrder::Zero
        } else if q.is_infinite() {
            EntropyOrder::Infinity
        } else if (q - 1.0).abs() <= Q_ONE_THRESHOLD {
            EntropyOrder::One
        } else {
            EntropyOrder::Finite(FiniteOrder(q))
        })
    }

    /// The order as a float (`0`, `1`, `∞`, or the finite value).
    pub fn value(self) -> f64 {
        match self {
            EntropyOrder::Zero => 0.0,
            EntropyOrder::One => 1.0,
            EntropyOrder::Infinity => f64::INFINITY,
            EntropyOrder::Finite(q) => q.value(),
        }
    }
}

/// Rényi entropy of order `q`, clamped into its exact range `[0, ln n]`.
pub fn renyi(p: &ProbDist, order: EntropyOrder) -> f64 {
    let cap = (p.len() as f64).ln();
    let value = match order {
        EntropyOrder::Zero => (p.support_size(0.0) as f64).ln(),
        EntropyOrder::One => shannon(p),
        EntropyOrder::Infinity => -p.max_weight().ln(),
        EntropyOrder::Finite(q) => power_sum_log(p, q.value()) / (1.0 - q.value()),
    };
    value.clamp(0.0, cap)
}

/// Rényi entropy of a density matrix: classical entropy of its spectrum.
pub fn renyi_quantum(rho: &HermitianOperator, order: EntropyOrder) -> Result<f64> {
    Ok(renyi(&validate_density(rho)?, order))
}

/// Evaluate the entropy at several orders, pairing each with its value.
pub fn renyi_curve(p: &ProbDist, orders: &[f64]) -> Result<Vec<(f64, f64)>> {
    orders
        .iter()
        .map(|&q| EntropyOrder::new(q).map(|order| (q, renyi(p, order))))
        .collect()
}

fn shannon(p: &ProbDist) -> f64 {
    let mut acc = CompensatedSum::new();
    for &w in p.weights() {
        if w > 0.0 {
            acc.add(-w * w.ln());
        }
    }
    acc.value()
}

/// `ln Σ p_i^q`, shifted by the mode so the sum never under- or overflows.
fn power_sum_log(p: &ProbDist, q: f64) -> f64 {
    let ln_max = p.max_weight().ln();
    let mut acc = CompensatedSum::new();
    for &w in p.weights() {
        if w > 0.0 {
            acc.add((q * (w.ln() - ln_max)).exp());
        }
    }
    q * ln_max + acc.value().ln()
}
