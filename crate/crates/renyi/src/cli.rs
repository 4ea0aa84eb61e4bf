//! Document schema and command implementations behind the `renyi` binary.
//!
//! Everything here is ordinary library code — commands take a parsed
//! [`InputDocument`] plus flags and return the exact text they would print,
//! so the whole surface is testable in-process. The binary in `main.rs`
//! only parses argv, reads the input, and maps [`CliError`] to an exit
//! code:
//!
//! | code | meaning                                    |
//! |------|--------------------------------------------|
//! | 0    | success                                    |
//! | 1    | operating-system I/O failure               |
//! | 2    | validation failure (schema, values, flags) |
//! | 3    | the identity check exceeded its tolerance  |
//!
//! Scalar results are printed with 12 significant digits; sweep output is
//! CSV with full-precision (shortest round-trip) numbers.

use std::fmt::Write as _;
use std::fs;
use std::io;

use serde::{Deserialize, Serialize};

use crate::dist::ProbDist;
use crate::entropy::{renyi, EntropyOrder, Q_ONE_THRESHOLD};
use crate::error::Error;
use crate::qcalc::relation_check;
use crate::spectral::{
    eigh, validate_density, validate_density_strict, HermitianOperator,
};
use crate::thermo::{
    embed_distribution, free_energy, gibbs_state, gibbs_state_quantum, log_partition,
    von_neumann_from_temperature, EnergySpectrum,
};

/// Scalar outputs carry this many significant digits.
pub const SIGNIFICANT_DIGITS: u32 = 12;

/// Errors at the command layer, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The operating system failed us (missing file, broken pipe): exit 1.
    #[error("{0}")]
    Io(#[from] io::Error),

    /// The input was not a valid document: exit 2.
    #[error("invalid document: {0}")]
    Parse(#[from] serde_json::Error),

    /// Flags or document contents violate a command's contract: exit 2.
    #[error("{0}")]
    Invalid(String),

    /// A numerical invariant was violated; message names it: exit 2.
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

/// Result alias for the command layer.
pub type CliResult<T> = std::result::Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

/// Matrix wire format: real and imaginary parts as nested row arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixPayload {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// The JSON document every command reads (and some write).
///
/// Exactly one of `probabilities`, `energies`, `matrix` must be present;
/// `temp0` and `label` are optional metadata. Unknown keys are rejected so
/// typos fail loudly instead of being ignored.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probabilities: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energies: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub temp0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// The one payload a document carries.
#[derive(Clone, Copy, Debug)]
pub enum Payload<'a> {
    Probabilities(&'a [f64]),
    Energies(&'a [f64]),
    Matrix(&'a MatrixPayload),
}

impl InputDocument {
    /// Enforce the exactly-one-payload rule.
    pub fn payload(&self) -> CliResult<Payload<'_>> {
        let mut found: Vec<Payload<'_>> = Vec::new();
        if let Some(p) = &self.probabilities {
            found.push(Payload::Probabilities(p));
        }
        if let Some(e) = &self.energies {
            found.push(Payload::Energies(e));
        }
        if let Some(m) = &self.matrix {
            found.push(Payload::Matrix(m));
        }
        match found.len() {
            1 => Ok(found[0]),
            0 => Err(invalid(
                "document must contain one of \"probabilities\", \"energies\", \"matrix\"",
            )),
            _ => Err(invalid(
                "document must contain exactly one of \"probabilities\", \"energies\", \"matrix\"",
            )),
        }
    }
}

/// Read a document from a file path, or from stdin when `path` is `-`.
pub fn read_document(path: &str) -> CliResult<InputDocument> {
    let text = if path == "-" {
        io::read_to_string(io::stdin())?
    } else {
        fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

/// Format a value with [`SIGNIFICANT_DIGITS`] significant digits in plain
/// fixed-point notation (no exponent), e.g. `0.693147180560`.
pub fn format_significant(value: f64) -> String {
    let digits = SIGNIFICANT_DIGITS as i32;
    if value == 0.0 {
        // Zero (either sign) prints like other sub-1 magnitudes.
        return format!("{:.*}", digits as usize, 0.0);
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, value)
}

/// Parse an order flag: a float, with `inf`/`infinity` accepted.
pub fn parse_order_flag(raw: &str) -> CliResult<EntropyOrder> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| invalid(format!("order '{raw}' is not a number or 'inf'")))?;
    Ok(EntropyOrder::new(value)?)
}

/// A sweep abscissa: which variable the grid runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Sweep the entropy order `q` at a fixed state.
    Order,
    /// Sweep the temperature `T` of a fixed spectrum.
    Temperature,
}

impl SweepMode {
    /// Parse the `--mode` flag (`q` or `T`, case-insensitive).
    pub fn parse(raw: &str) -> CliResult<Self> {
        match raw.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(SweepMode::Order),
            "t" => Ok(SweepMode::Temperature),
            _ => Err(invalid(format!("mode '{raw}' is not one of: q, T"))),
        }
    }
}

/// An inclusive evenly spaced grid `lo:hi:count`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RangeSpec {
    lo: f64,
    hi: f64,
    count: usize,
}

impl RangeSpec {
    /// Parse `lo:hi:count` with finite `lo < hi` and integer `count ≥ 2`.
    pub fn parse(raw: &str) -> CliResult<Self> {
        let parts: Vec<&str> = raw.split(':').collect();
        if parts.len() != 3 {
            return Err(invalid(format!("range '{raw}' is not of the form lo:hi:count")));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|_| invalid(format!("range start '{}' is not a number", parts[0])))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|_| invalid(format!("range end '{}' is not a number", parts[1])))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| invalid(format!("range count '{}' is not an integer", parts[2])))?;
        if !lo.is_finite() || !hi.is_finite() {
            return Err(invalid("range endpoints must be finite"));
        }
        if !(lo < hi) {
            return Err(invalid(format!("range needs lo < hi, got {lo}:{hi}")));
        }
        if count < 2 {
            return Err(invalid("range count must be at least 2"));
        }
        Ok(Self { lo, hi, count })
    }

    /// The grid points, endpoints exact, strictly increasing.
    pub fn grid(&self) -> CliResult<Vec<f64>> {
        let n = self.count;
        let step = (self.hi - self.lo) / ((n - 1) as f64);
        let points: Vec<f64> = (0..n)
            .map(|k| {
                if k == 0 {
                    self.lo
                } else if k == n - 1 {
                    self.hi
                } else {
                    self.lo + step * (k as f64)
                }
            })
            .collect();
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(invalid("range is too fine: adjacent grid points collide"));
        }
        Ok(points)
    }
}

fn resolve_temp0(flag: Option<f64>, doc: &InputDocument) -> Option<f64> {
    flag.or(doc.temp0)
}

fn require_temp0(flag: Option<f64>, doc: &InputDocument) -> CliResult<f64> {
    resolve_temp0(flag, doc)
        .ok_or_else(|| invalid("a reference temperature is required: pass --temp0 or put \"temp0\" in the document"))
}

/// The distribution a document denotes (probabilities directly, or the
/// spectrum of a density matrix).
fn dist_from(doc: &InputDocument, strict: bool) -> CliResult<ProbDist> {
    match doc.payload()? {
        Payload::Probabilities(p) => Ok(if strict {
            ProbDist::new_strict(p)?
        } else {
            ProbDist::new(p)?
        }),
        Payload::Matrix(m) => {
            let rho = HermitianOperator::from_parts(&m.re, &m.im)?;
            Ok(if strict {
                validate_density_strict(&rho)?
            } else {
                validate_density(&rho)?
            })
        }
        Payload::Energies(_) => Err(invalid(
            "this command needs \"probabilities\" or \"matrix\"; \
             run gibbs on the energies first",
        )),
    }
}

fn prob_dist(p: &[f64], strict: bool) -> CliResult<ProbDist> {
    Ok(if strict {
        ProbDist::new_strict(p)?
    } else {
        ProbDist::new(p)?
    })
}

/// `entropy --q <order>`: one scalar, the Rényi entropy of the input state.
pub fn cmd_entropy(doc: &InputDocument, order: EntropyOrder, strict: bool) -> CliResult<String> {
    let p = dist_from(doc, strict)?;
    Ok(format!("{}\n", format_significant(renyi(&p, order))))
}

/// What `relation` computed; the binary decides success vs exit 3 from
/// `within_tolerance`.
#[derive(Clone, Debug)]
pub struct RelationOutcome {
    /// The report text (one `key=value` line per quantity).
    pub text: String,
    /// Whether `|residual| ≤ tol`.
    pub within_tolerance: bool,
    /// The signed residual `lhs - rhs`.
    pub residual: f64,
    /// The tolerance compared against.
    pub tol: f64,
}

/// `relation --q <order> [--temp0 <T0>] [--tol <tol>]`: evaluate both sides
/// of the secant identity and report the residual.
pub fn cmd_relation(
    doc: &InputDocument,
    temp0: Option<f64>,
    q: f64,
    tol: f64,
    strict: bool,
) -> CliResult<RelationOutcome> {
    if !(tol >= 0.0) {
        return Err(invalid(format!("tolerance {tol} must be a non-negative number")));
    }
    let spectrum = match doc.payload()? {
        Payload::Energies(e) => EnergySpectrum::new(e.to_vec())?,
        Payload::Probabilities(p) => {
            let t0 = require_temp0(temp0, doc)?;
            embed_distribution(&prob_dist(p, strict)?, t0)?
        }
        Payload::Matrix(_) => {
            return Err(invalid(
                "relation needs \"probabilities\" or \"energies\", not a matrix",
            ))
        }
    };
    let t0 = require_temp0(temp0, doc)?;
    let report = relation_check(&spectrum, t0, q)?;
    let mut text = String::new();
    let _ = writeln!(text, "t0={}", format_significant(report.t0()));
    let _ = writeln!(text, "t={}", format_significant(report.t()));
    let _ = writeln!(text, "q={}", format_significant(report.q()));
    let _ = writeln!(text, "lhs={}", format_significant(report.lhs()));
    let _ = writeln!(text, "rhs={}", format_significant(report.rhs()));
    let _ = writeln!(text, "residual={}", format_significant(report.residual()));
    Ok(RelationOutcome {
        text,
        within_tolerance: report.residual().abs() <= tol,
        residual: report.residual(),
        tol,
    })
}

/// `embed --temp0 <T0>`: realize a distribution as an energy spectrum, as a
/// document with `energies` (and the reference temperature recorded).
pub fn cmd_embed(doc: &InputDocument, temp0: Option<f64>, strict: bool) -> CliResult<String> {
    let Payload::Probabilities(p) = doc.payload()? else {
        return Err(invalid("embed needs a document with \"probabilities\""));
    };
    let t0 = require_temp0(temp0, doc)?;
    let spectrum = embed_distribution(&prob_dist(p, strict)?, t0)?;
    let out = InputDocument {
        energies: Some(spectrum.levels().to_vec()),
        temp0: Some(t0),
        label: doc.label.clone(),
        ..InputDocument::default()
    };
    Ok(format!("{}\n", serde_json::to_string(&out)?))
}

/// `gibbs --temp <T>`: the Gibbs state of the input at temperature `T`; a
/// distribution for energies, a density matrix for a Hamiltonian. (`strict`
/// has nothing to check here: states are produced, not consumed.)
pub fn cmd_gibbs(doc: &InputDocument, temp: f64, _strict: bool) -> CliResult<String> {
    let out = match doc.payload()? {
        Payload::Energies(e) => {
            let p = gibbs_state(&EnergySpectrum::new(e.to_vec())?, temp)?;
            InputDocument {
                probabilities: Some(p.weights().to_vec()),
                label: doc.label.clone(),
                ..InputDocument::default()
            }
        }
        Payload::Matrix(m) => {
            let h = HermitianOperator::from_parts(&m.re, &m.im)?;
            let rho = gibbs_state_quantum(&h, temp)?;
            InputDocument {
                matrix: Some(MatrixPayload {
                    re: rho.real_parts(),
                    im: rho.imag_parts(),
                }),
                label: doc.label.clone(),
                ..InputDocument::default()
            }
        }
        Payload::Probabilities(_) => {
            return Err(invalid(
                "gibbs needs \"energies\" or \"matrix\"; probabilities are already a state",
            ))
        }
    };
    Ok(format!("{}\n", serde_json::to_string(&out)?))
}

/// `free-energy --temp <T>`: print `F` and `lnZ` at one temperature.
pub fn cmd_free_energy(doc: &InputDocument, temp: f64, _strict: bool) -> CliResult<String> {
    let spectrum = match doc.payload()? {
        Payload::Energies(e) => EnergySpectrum::new(e.to_vec())?,
        Payload::Matrix(m) => {
            let h = HermitianOperator::from_parts(&m.re, &m.im)?;
            EnergySpectrum::new(eigh(&h)?.eigenvalues().to_vec())?
        }
        Payload::Probabilities(_) => {
            return Err(invalid(
                "free-energy needs \"energies\" or \"matrix\"; embed probabilities first",
            ))
        }
    };
    let point = free_energy(&spectrum, temp)?;
    Ok(format!(
        "F={}\nlnZ={}\n",
        format_significant(point.free_energy()),
        format_significant(point.ln_partition())
    ))
}

/// `sweep --mode <q|T> --range lo:hi:count`: CSV over a grid.
///
/// * mode `q` — columns `q,S_q` for the input state (energies need a
///   `temp0` to pick the Gibbs state).
/// * mode `T` — columns `T,F,lnZ`; when a reference temperature is known
///   the free-energy secant against it and the tangent `S₁(gibbs(T₀))` are
///   appended as `secant,tangent`. Grid temperatures whose implied order
///   `T₀/T` falls in the degenerate window around 1 are refused rather
///   than silently switched to the tangent.
pub fn cmd_sweep(
    doc: &InputDocument,
    mode: SweepMode,
    range: RangeSpec,
    temp0: Option<f64>,
    strict: bool,
) -> CliResult<String> {
    let grid = range.grid()?;
    match mode {
        SweepMode::Order => sweep_orders(doc, &grid, temp0, strict),
        SweepMode::Temperature => sweep_temperatures(doc, &grid, temp0, strict),
    }
}

fn sweep_orders(
    doc: &InputDocument,
    grid: &[f64],
    temp0: Option<f64>,
    strict: bool,
) -> CliResult<String> {
    let p = match doc.payload()? {
        Payload::Energies(e) => {
            let t0 = resolve_temp0(temp0, doc).ok_or_else(|| {
                invalid("sweeping orders over \"energies\" needs --temp0 to pick the Gibbs state")
            })?;
            gibbs_state(&EnergySpectrum::new(e.to_vec())?, t0)?
        }
        _ => dist_from(doc, strict)?,
    };
    let mut out = String::from("q,S_q\n");
    for &q in grid {
        let order = EntropyOrder::new(q)?;
        let s = renyi(&p, order);
        push_row(&mut out, &[q, s])?;
    }
    Ok(out)
}

fn sweep_temperatures(
    doc: &InputDocument,
    grid: &[f64],
    temp0: Option<f64>,
    strict: bool,
) -> CliResult<String> {
    let spectrum = match doc.payload()? {
        Payload::Energies(e) => EnergySpectrum::new(e.to_vec())?,
        Payload::Probabilities(p) => {
            let t0 = require_temp0(temp0, doc)?;
            embed_distribution(&prob_dist(p, strict)?, t0)?
        }
        Payload::Matrix(m) => {
            let h = HermitianOperator::from_parts(&m.re, &m.im)?;
            EnergySpectrum::new(eigh(&h)?.eigenvalues().to_vec())?
        }
    };
    if let Some(first) = grid.first() {
        if !(*first > 0.0) {
            return Err(invalid(format!(
                "temperature sweep needs a positive range, got start {first}"
            )));
        }
    }
    let reference = resolve_temp0(temp0, doc);
    match reference {
        None => {
            let mut out = String::from("T,F,lnZ\n");
            for &t in grid {
                let point = free_energy(&spectrum, t)?;
                push_row(&mut out, &[t, point.free_energy(), point.ln_partition()])?;
            }
            Ok(out)
        }
        Some(t0) => {
            crate::thermo::check_temperature(t0).map_err(CliError::from)?;
            for &t in grid {
                // Degenerate when the implied order q = T₀/T is within the
                // entropy family's q→1 window.
                if (t0 - t).abs() <= Q_ONE_THRESHOLD * t {
                    return Err(invalid(format!(
                        "grid temperature {t} is degenerate with temp0 {t0} \
                         (order T0/T within {Q_ONE_THRESHOLD:e} of 1); \
                         adjust --range or --temp0"
                    )));
                }
            }
            let tangent = von_neumann_from_temperature(&spectrum, t0)?;
            let g0 = t0 * log_partition(&spectrum, t0)?;
            let mut out = String::from("T,F,lnZ,secant,tangent\n");
            for &t in grid {
                let point = free_energy(&spectrum, t)?;
                let secant = (t * point.ln_partition() - g0) / (t - t0);
                push_row(
                    &mut out,
                    &[t, point.free_energy(), point.ln_partition(), secant, tangent],
                )?;
            }
            Ok(out)
        }
    }
}

/// Append one CSV row of full-precision values, refusing non-finite cells.
fn push_row(out: &mut String, values: &[f64]) -> CliResult<()> {
    for (i, v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(invalid("sweep produced a non-finite value"));
        }
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
    Ok(())
}
