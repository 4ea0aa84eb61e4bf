//! Gibbs ensembles, partition functions, and free energy.
//!
//! Sources are described by an [`EnergySpectrum`] — a list of energy levels
//! `E_i` in whatever order they come, in units where Boltzmann's constant
//! is 1. At temperature `T > 0`:
//!
//! ```text
//! Z(T)  = Σ_i e^{-E_i/T}            partition function
//! p_i   = e^{-E_i/T} / Z(T)         Gibbs state
//! F(T)  = -T ln Z(T)                free energy
//! ```
//!
//! All exponential sums are evaluated with the ground-state energy factored
//! out, `ln Z = -E_min/T + ln Σ e^{-(E_i - E_min)/T}`, so no level can
//! overflow the exponential and at least one term is exactly 1. A side
//! effect worth naming: shifting every level by a constant `c` changes the
//! Gibbs weights not at all (exactly, when `E_i + c` is computed without
//! rounding — e.g. on a dyadic grid) and changes free energy by exactly `+c`
//! up to roundoff, because only the differences `E_i - E_min` enter.
//!
//! The reverse direction is [`embed_distribution`]: any distribution with
//! full support is the Gibbs state of the levels `E_i = -T₀ ln p_i` at
//! temperature `T₀`, and that embedding pins `Z(T₀) = 1`, hence `F(T₀) = 0`.

use crate::dist::ProbDist;
use crate::entropy::{renyi, EntropyOrder};
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;
use crate::spectral::{assemble, eigh, HermitianOperator};

/// A finite list of energy levels (order preserved, duplicates allowed).
#[derive(Clone, Debug, PartialEq)]
pub struct EnergySpectrum {
    levels: Vec<f64>,
}

impl EnergySpectrum {
    /// Validate a list of levels: non-empty, every entry finite.
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in levels.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
        }
        Ok(Self { levels })
    }

    /// The energy levels in input order.
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Number of levels (always at least one).
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    /// Always false: empty spectra cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    fn ground_state(&self) -> f64 {
        self.levels.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// An evaluated thermodynamic state: temperature, `ln Z`, and `F`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalPoint {
    temperature: f64,
    ln_partition: f64,
    free_energy: f64,
}

impl ThermalPoint {
    /// The temperature this point was evaluated at.
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// `ln Z(T)`.
    pub fn ln_partition(&self) -> f64 {
        self.ln_partition
    }

    /// `Z(T)`, recovered by exponentiation (may overflow to `inf` for
    /// spectra deep below zero; `ln_partition` is the lossless form).
    pub fn partition_function(&self) -> f64 {
        self.ln_partition.exp()
    }

    /// `F(T) = -T ln Z(T)`.
    pub fn free_energy(&self) -> f64 {
        self.free_energy
    }
}

/// Reject temperatures that are zero, negative, NaN, or infinite.
pub(crate) fn check_temperature(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonpositiveTemperature(t));
    }
    Ok(())
}

/// `ln Z(T)` with the ground state factored out of the exponential sum.
pub fn log_partition(spectrum: &EnergySpectrum, t: f64) -> Result<f64> {
    check_temperature(t)?;
    let ground = spectrum.ground_state();
    let mut acc = CompensatedSum::new();
    for &e in spectrum.levels() {
        acc.add((-(e - ground) / t).exp());
    }
    Ok(-ground / t + acc.value().ln())
}

/// Evaluate `ln Z` and `F = -T ln Z` at one temperature.
pub fn free_energy(spectrum: &EnergySpectrum, t: f64) -> Result<ThermalPoint> {
    let ln_partition = log_partition(spectrum, t)?;
    Ok(ThermalPoint {
        temperature: t,
        ln_partition,
        free_energy: -(t * ln_partition),
    })
}

/// The Gibbs state `p_i ∝ e^{-E_i/T}` as a validated distribution.
///
/// Weights are formed as `exp(-(E_i - E_min)/T - ln Σ)`, which keeps every
/// intermediate in range; the result depends only on level differences, so
/// shifting the whole spectrum leaves it unchanged.
pub fn gibbs_state(spectrum: &EnergySpectrum, t: f64) -> Result<ProbDist> {
    check_temperature(t)?;
    let ground = spectrum.ground_state();
    let mut acc = CompensatedSum::new();
    for &e in spectrum.levels() {
        acc.add((-(e - ground) / t).exp());
    }
    let ln_sum = acc.value().ln();
    let weights: Vec<f64> = spectrum
        .levels()
        .iter()
        .map(|&e| (-(e - ground) / t - ln_sum).exp())
        .collect();
    ProbDist::new(&weights)
}

/// The Gibbs density matrix `e^{-H/T} / tr e^{-H/T}` of a Hamiltonian.
///
/// Diagonalizes `H`, forms the classical Gibbs weights of its eigenvalues,
/// and reassembles in the eigenbasis — so the result commutes with `H` and
/// its spectrum is exactly the classical Gibbs state of `spec(H)`.
pub fn gibbs_state_quantum(hamiltonian: &HermitianOperator, t: f64) -> Result<HermitianOperator> {
    let spectrum = eigh(hamiltonian)?;
    let levels = EnergySpectrum::new(spectrum.eigenvalues().to_vec())?;
    let weights = gibbs_state(&levels, t)?;
    Ok(assemble(weights.weights(), spectrum.eigenvectors()))
}

/// Realize a full-support distribution as a Gibbs state at temperature
/// `t0`: levels `E_i = -t0 ln p_i`, which make `Z(t0) = 1` and `F(t0) = 0`.
pub fn embed_distribution(p: &ProbDist, t0: f64) -> Result<EnergySpectrum> {
    check_temperature(t0)?;
    for (index, &w) in p.weights().iter().enumerate() {
        if w <= 0.0 {
            return Err(Error::ZeroProbability { index });
        }
    }
    EnergySpectrum::new(p.weights().iter().map(|&w| -(t0 * w.ln())).collect())
}

/// Shannon (von Neumann) entropy of the Gibbs state at temperature `t`.
pub fn von_neumann_from_temperature(spectrum: &EnergySpectrum, t: f64) -> Result<f64> {
    Ok(renyi(&gibbs_state(spectrum, t)?, EntropyOrder::One))
}
