//! Rényi entropies, Gibbs ensembles, and the secant identity that ties the
//! whole entropy family to free energy.
//!
//! The one-parameter family `S_q` interpolates between counting the support
//! (`q = 0`), Shannon entropy (`q = 1`), and the min-entropy of the most
//! likely outcome (`q = ∞`). This crate computes that family for classical
//! distributions ([`ProbDist`]) and for density matrices
//! ([`HermitianOperator`], reduced to their spectra by a built-in Jacobi
//! eigensolver), alongside the thermodynamic side of the same story:
//! partition functions, free energies, and Gibbs states of energy spectra.
//!
//! The bridge between the two sides is the secant identity. Any full-support
//! distribution is the Gibbs state of the levels `E_i = -T₀ ln p_i` at a
//! reference temperature `T₀`, with `F(T₀) = 0`; for every valid order
//! `q = T₀/T`,
//!
//! ```text
//! S_q(p) = -(F(T) - F(T₀)) / (T - T₀),
//! ```
//!
//! so Rényi entropy *is* minus the secant slope of free energy in
//! temperature, and the familiar `-dF/dT = S` is its `q → 1` limit. The
//! [`qcalc`] module evaluates both sides independently and reports the
//! residual; the library never assumes the identity it is asked to verify.
//!
//! # Example
//!
//! ```
//! use renyi::{embed_distribution, relation_check, EntropyOrder, ProbDist};
//!
//! let p = ProbDist::new(&[0.7, 0.2, 0.1])?;
//! let s2 = renyi::renyi(&p, EntropyOrder::new(2.0)?);
//!
//! // Realize p as a Gibbs state at T₀ = 1 and check the identity at q = 2.
//! let spectrum = embed_distribution(&p, 1.0)?;
//! let report = relation_check(&spectrum, 1.0, 2.0)?;
//! assert!((report.lhs() - s2).abs() <= 1e-12);
//! assert!(report.residual().abs() <= 1e-9);
//! # Ok::<(), renyi::Error>(())
//! ```

pub mod cli;
pub mod dist;
pub mod entropy;
pub mod error;
mod numeric;
pub mod qcalc;
pub mod spectral;
pub mod thermo;

pub use dist::ProbDist;
pub use entropy::{renyi, renyi_curve, renyi_quantum, EntropyOrder, FiniteOrder};
pub use error::{Error, Result};
pub use qcalc::{
    q_derivative, quench_ratio, relation_check, relation_limit_check, RelationReport, SecantPoint,
};
pub use spectral::{
    eigh, matrix_function, validate_density, validate_density_strict, HermitianOperator, Spectrum,
};
pub use thermo::{
    embed_distribution, free_energy, gibbs_state, gibbs_state_quantum, log_partition,
    von_neumann_from_temperature, EnergySpectrum, ThermalPoint,
};
