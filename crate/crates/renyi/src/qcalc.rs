//! q-derivatives and the entropy/free-energy secant identity.
//!
//! The q-derivative of `f` at `x` replaces the limit of calculus with a
//! finite secant between `x` and the dilated point `qx`:
//!
//! ```text
//! (D_q f)(x) = (f(qx) - f(x)) / (qx - x)
//! ```
//!
//! Applied to free energy along `1/T`, it turns a statement about entropy
//! into a statement about two evaluations of the partition function. For a
//! spectrum with free energy `F(T) = -T ln Z(T)` and a reference
//! temperature `T₀`, setting `q = T₀/T`:
//!
//! ```text
//! S_q(gibbs(T₀)) = -(F(T) - F(T₀)) / (T - T₀)
//! ```
//!
//! — the Rényi entropy of order `q` of the Gibbs state at `T₀` is the
//! negative secant slope of free energy between the two temperatures. As
//! `T → T₀` (i.e. `q → 1`) the secant becomes the tangent `-dF/dT`, which
//! is the usual thermodynamic entropy.
//!
//! [`relation_check`] evaluates both sides independently: the left from the
//! Gibbs weights, the right as `(T ln Z(T) - T₀ ln Z(T₀)) / (T - T₀)` — an
//! algebraically identical form of the secant that avoids one layer of
//! cancellation. [`relation_limit_check`] probes the `q → 1` limit with a
//! ladder of explicit temperature steps. Orders within
//! [`Q_ONE_THRESHOLD`](crate::entropy::Q_ONE_THRESHOLD) of 1 are refused
//! ([`Error::DegenerateOrder`]) rather than silently switched to the
//! tangent; the limit checker is the honest tool for that regime.

use crate::entropy::{renyi, EntropyOrder, Q_ONE_THRESHOLD};
use crate::error::{Error, Result};
use crate::thermo::{
    check_temperature, gibbs_state, log_partition, von_neumann_from_temperature, EnergySpectrum,
};

/// Both sides of the secant identity at one `(T₀, q)` evaluation point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelationReport {
    t0: f64,
    t: f64,
    q: f64,
    lhs: f64,
    rhs: f64,
    residual: f64,
}

impl RelationReport {
    /// Reference temperature `T₀` (where the Gibbs state lives).
    pub fn t0(&self) -> f64 {
        self.t0
    }

    /// Probe temperature `T = T₀/q`.
    pub fn t(&self) -> f64 {
        self.t
    }

    /// Entropy order `q = T₀/T`.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// Left side: `S_q` of the Gibbs state at `T₀`.
    pub fn lhs(&self) -> f64 {
        self.lhs
    }

    /// Right side: `-(F(T) - F(T₀)) / (T - T₀)`.
    pub fn rhs(&self) -> f64 {
        self.rhs
    }

    /// `lhs - rhs` (signed).
    pub fn residual(&self) -> f64 {
        self.residual
    }
}

/// One rung of the `q → 1` ladder: a secant at step `delta` next to the
/// tangent it converges to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecantPoint {
    /// Temperature step `δ`; the secant runs from `T₀` to `T₀ + δ`.
    pub delta: f64,
    /// `-(F(T₀+δ) - F(T₀)) / δ`.
    pub secant: f64,
    /// `-dF/dT` at `T₀`, i.e. the Shannon entropy of the Gibbs state.
    pub tangent: f64,
    /// `secant - tangent` (signed).
    pub gap: f64,
}

fn check_order(q: f64) -> Result<()> {
    if !q.is_finite() || q <= 0.0 {
        return Err(Error::InvalidOrder(q));
    }
    if (q - 1.0).abs() <= Q_ONE_THRESHOLD {
        return Err(Error::DegenerateOrder(q));
    }
    Ok(())
}

/// The q-derivative `(f(qx) - f(x)) / (qx - x)`.
///
/// Requires `x ≠ 0` and a finite order `q > 0` outside the degeneracy
/// window around 1. Non-finite values coming out of `f` itself are the
/// caller's to interpret; they pass through untouched.
pub fn q_derivative<F>(f: F, x: f64, q: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    check_order(q)?;
    if x == 0.0 {
        return Err(Error::ZeroPoint);
    }
    let qx = q * x;
    let dx = qx - x;
    if dx == 0.0 {
        // Unreachable for normal x since |q - 1| > 1e-6, but subnormal x
        // can absorb the dilation entirely.
        return Err(Error::ZeroStep);
    }
    Ok((f(qx) - f(x)) / dx)
}

/// Evaluate both sides of the secant identity for a spectrum at `(T₀, q)`.
///
/// The left side is computed from the Gibbs weights at `T₀`, the right from
/// `ln Z` at the two temperatures; nothing is shared between the sides, so
/// a small residual is evidence, not bookkeeping.
pub fn relation_check(spectrum: &EnergySpectrum, t0: f64, q: f64) -> Result<RelationReport> {
    check_temperature(t0)?;
    check_order(q)?;
    let t = t0 / q;
    let order = EntropyOrder::new(q)?;
    let lhs = renyi(&gibbs_state(spectrum, t0)?, order);
    let ln_z_t = log_partition(spectrum, t)?;
    let ln_z_t0 = log_partition(spectrum, t0)?;
    let rhs = (t * ln_z_t - t0 * ln_z_t0) / (t - t0);
    Ok(RelationReport {
        t0,
        t,
        q,
        lhs,
        rhs,
        residual: lhs - rhs,
    })
}

/// Probe the `q → 1` limit: free-energy secants at the given temperature
/// steps, each next to the tangent `-dF/dT = S₁(gibbs(T₀))`.
///
/// Every step must be nonzero and keep `T₀ + δ` a valid temperature. As
/// `δ → 0` the gaps shrink linearly in `δ` (the secant of a smooth function
/// approaches its tangent at first order).
pub fn relation_limit_check(
    spectrum: &EnergySpectrum,
    t0: f64,
    deltas: &[f64],
) -> Result<Vec<SecantPoint>> {
    check_temperature(t0)?;
    let tangent = von_neumann_from_temperature(spectrum, t0)?;
    let g0 = t0 * log_partition(spectrum, t0)?;
    deltas
        .iter()
        .map(|&delta| {
            if delta == 0.0 {
                return Err(Error::ZeroStep);
            }
            let t1 = t0 + delta;
            check_temperature(t1)?;
            let dt = t1 - t0;
            if dt == 0.0 {
                // The step was real but rounding absorbed it into T₀.
                return Err(Error::ZeroStep);
            }
            let secant = (t1 * log_partition(spectrum, t1)? - g0) / dt;
            Ok(SecantPoint {
                delta,
                secant,
                tangent,
                gap: secant - tangent,
            })
        })
        .collect()
}

/// The quench functional: the free-energy secant slope between `T₀` and
/// `T = T₀/q`, i.e. the right side of [`relation_check`]. For an embedded
/// distribution (where `F(T₀) = 0`) this is `-F(T₀/q) / (T₀/q - T₀)`.
pub fn quench_ratio(spectrum: &EnergySpectrum, t0: f64, q: f64) -> Result<f64> {
    Ok(relation_check(spectrum, t0, q)?.rhs())
}
