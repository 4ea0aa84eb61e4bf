//! Hermitian operators, eigendecomposition, and spectral calculus.
//!
//! The quantum side of the crate reduces every question about a density
//! matrix or Hamiltonian to a question about its eigenvalues. This module
//! owns that reduction:
//!
//! * [`HermitianOperator`] — a dense complex matrix validated and then
//!   symmetrized to satisfy `A = A†` exactly, so later stages never see an
//!   asymmetric bit.
//! * [`eigh`] — eigendecomposition by cyclic complex Jacobi rotations.
//! * [`validate_density`] — extracts the classical distribution hidden in a
//!   density matrix (eigenvalues clipped of roundoff negatives).
//! * [`matrix_function`] — applies a scalar function on the spectrum,
//!   `f(A) = V f(Λ) V†`.
//!
//! # The Jacobi step
//!
//! For a pivot pair `(p, q)` the 2×2 block is `[[α, β], [β̄, γ]]` with real
//! `α, γ`. Writing `β = r·e^{iφ}`, the phase is peeled off with the unitary
//! `D = diag(1, e^{-iφ})`, leaving the real block `[[α, r], [r, γ]]`; that
//! block is zeroed by the classical rotation whose tangent `t` is the
//! smaller root of `t² + 2θt - 1 = 0`, `θ = (γ - α) / 2r`. The combined
//! rotation `J = D·R` therefore has columns
//!
//! ```text
//! J = [[ c,      s     ],        w = e^{-iφ} = β̄ / r,
//!      [-w·s,   w·c    ]]        c = 1/√(1+t²), s = t·c
//! ```
//!
//! and the update `A ← J† A J` is applied as a column pass then a row pass.
//! The rotated diagonal is written in closed form (`α - t·r`, `γ + t·r`) and
//! the pivot pair is zeroed exactly, which keeps the iterate Hermitian to
//! the last bit throughout. Convergence is declared when the off-diagonal
//! Frobenius norm falls below `1e-12` times the Frobenius norm of the input;
//! the quadratic convergence of cyclic Jacobi reaches that within a handful
//! of sweeps for any size this crate targets.

use num_complex::Complex64;

use crate::dist::ProbDist;
use crate::error::{Error, Result};
use crate::numeric::sum_compensated;

/// Largest tolerated deviation of an input matrix from its own adjoint,
/// measured entrywise; inputs within it are symmetrized, beyond it rejected.
pub const HERMITICITY_TOLERANCE: f64 = 1e-9;

/// Density-matrix eigenvalues may undershoot zero by at most this much;
/// such roundoff negatives are clipped to zero, anything lower is an error.
pub const EIGEN_CLIP_TOLERANCE: f64 = 1e-8;

/// Strict density validation requires `|tr ρ - 1|` at or below this.
pub const TRACE_TOLERANCE: f64 = 1e-8;

/// Sweep budget for the Jacobi iteration; convergence is quadratic, so the
/// budget is generous by two orders of magnitude.
const JACOBI_MAX_SWEEPS: usize = 100;

/// Convergence target: off-diagonal Frobenius norm relative to the input's
/// full Frobenius norm.
const JACOBI_TARGET_FACTOR: f64 = 1e-12;

/// A dense Hermitian matrix, stored row-major and exactly self-adjoint.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianOperator {
    /// Validate and symmetrize a square complex matrix.
    ///
    /// Entries must be finite and the matrix must satisfy `A = A†` within
    /// [`HERMITICITY_TOLERANCE`] entrywise. The stored matrix is
    /// `(A + A†)/2`, which is Hermitian exactly (diagonal imaginary parts
    /// are dropped, off-diagonal pairs become exact conjugates).
    pub fn new(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyInput);
        }
        for (index, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    index,
                    len: row.len(),
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    let value = if z.re.is_finite() { z.im } else { z.re };
                    return Err(Error::NonFinite {
                        index: i * dim + j,
                        value,
                    });
                }
            }
        }
        let mut deviation = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                deviation = deviation.max((rows[i][j] - rows[j][i].conj()).norm());
            }
        }
        if deviation > HERMITICITY_TOLERANCE {
            return Err(Error::NotHermitian(deviation));
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(rows[i][i].re, 0.0);
            for j in (i + 1)..dim {
                let avg = (rows[i][j] + rows[j][i].conj()).scale(0.5);
                entries[i * dim + j] = avg;
                entries[j * dim + i] = avg.conj();
            }
        }
        Ok(Self { dim, entries })
    }

    /// Build from separate real and imaginary parts (the wire format used
    /// by the CLI). Both parts must be square and of equal shape.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::DimensionMismatch {
                expected: re.len(),
                found: im.len(),
            });
        }
        let mut rows = Vec::with_capacity(re.len());
        for (re_row, im_row) in re.iter().zip(im) {
            if re_row.len() != im_row.len() {
                return Err(Error::DimensionMismatch {
                    expected: re_row.len(),
                    found: im_row.len(),
                });
            }
            rows.push(
                re_row
                    .iter()
                    .zip(im_row)
                    .map(|(&x, &y)| Complex64::new(x, y))
                    .collect(),
            );
        }
        Self::new(&rows)
    }

    /// Build from a real symmetric matrix.
    pub fn from_real(rows: &[Vec<f64>]) -> Result<Self> {
        let complex_rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::new(&complex_rows)
    }

    /// The diagonal matrix with the given (finite) real values.
    pub fn diagonal(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = values.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            entries[index * dim + index] = Complex64::new(value, 0.0);
        }
        Ok(Self { dim, entries })
    }

    /// Wrap an entry table that is already Hermitian bit-for-bit. Callers
    /// must guarantee the symmetry; used by spectral reassembly.
    pub(crate) fn from_flat_hermitian(dim: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        debug_assert!((0..dim).all(|i| {
            (i..dim).all(|j| entries[i * dim + j] == entries[j * dim + i].conj())
        }));
        Self { dim, entries }
    }

    /// Matrix dimension (always at least 1).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`. Panics if either index is out of range.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        self.entries[i * self.dim + j]
    }

    /// The trace. Real because the stored diagonal is exactly real.
    pub fn trace(&self) -> f64 {
        sum_compensated((0..self.dim).map(|i| self.entries[i * self.dim + i].re))
    }

    /// Real parts as nested rows (wire format).
    pub fn real_parts(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.entries[i * self.dim + j].re).collect())
            .collect()
    }

    /// Imaginary parts as nested rows (wire format).
    pub fn imag_parts(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.entries[i * self.dim + j].im).collect())
            .collect()
    }
}

/// Result of an eigendecomposition: `A = V Λ V†`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<Complex64>>,
}

impl Spectrum {
    /// Eigenvalues sorted in non-increasing order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unit eigenvectors; `eigenvectors()[k]` pairs with `eigenvalues()[k]`.
    pub fn eigenvectors(&self) -> &[Vec<Complex64>] {
        &self.eigenvectors
    }
}

fn frobenius_norm(m: &[Complex64]) -> f64 {
    m.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            acc += 2.0 * m[p * n + q].norm_sqr();
        }
    }
    acc.sqrt()
}

/// One cyclic-Jacobi rotation zeroing the `(p, q)` pivot of `m`, with the
/// same rotation accumulated into the eigenvector matrix `v`.
fn rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let beta = m[p * n + q];
    let r = beta.norm();
    if r == 0.0 {
        return;
    }
    let alpha = m[p * n + p].re;
    let gamma = m[q * n + q].re;
    let w = beta.conj() / r;
    let theta = (gamma - alpha) / (2.0 * r);
    // Smaller-magnitude root of t² + 2θt - 1 = 0, kept stable for large |θ|.
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let rotated_alpha = alpha - t * r;
    let rotated_gamma = gamma + t * r;
    // Column pass: A ← A·J.
    for k in 0..n {
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        m[k * n + p] = akp.scale(c) - (w * akq).scale(s);
        m[k * n + q] = akp.scale(s) + (w * akq).scale(c);
    }
    // Row pass: A ← J†·A.
    let wc = w.conj();
    for k in 0..n {
        let apk = m[p * n + k];
        let aqk = m[q * n + k];
        m[p * n + k] = apk.scale(c) - (wc * aqk).scale(s);
        m[q * n + k] = apk.scale(s) + (wc * aqk).scale(c);
    }
    // The rotated block is known in closed form; writing it directly keeps
    // the pivot exactly zero and the diagonal exactly real.
    m[p * n + p] = Complex64::new(rotated_alpha, 0.0);
    m[q * n + q] = Complex64::new(rotated_gamma, 0.0);
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    // Accumulate: V ← V·J.
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp.scale(c) - (w * vkq).scale(s);
        v[k * n + q] = vkp.scale(s) + (w * vkq).scale(c);
    }
}

/// Eigendecomposition of a Hermitian operator by cyclic Jacobi rotations.
///
/// Returns eigenvalues in non-increasing order with matching unit
/// eigenvectors. Fails with [`Error::NoConvergence`] only if the sweep
/// budget is exhausted, which no finite input matrix should reach.
pub fn eigh(a: &HermitianOperator) -> Result<Spectrum> {
    let n = a.dim;
    let mut m = a.entries.clone();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let target = JACOBI_TARGET_FACTOR * frobenius_norm(&m);
    let mut converged = off_diagonal_norm(&m, n) <= target;
    let mut sweeps = 0;
    while !converged && sweeps < JACOBI_MAX_SWEEPS {
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&m, n) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].re.total_cmp(&m[i * n + i].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| m[k * n + k].re).collect();
    let eigenvectors: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i * n + k]).collect())
        .collect();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Rebuild `V f(Λ) V†` from eigenvalues already mapped through a function.
///
/// The assembled matrix is Hermitian by construction: the diagonal is a sum
/// of real terms and each off-diagonal pair is written as an exact
/// conjugate.
pub(crate) fn assemble(values: &[f64], vectors: &[Vec<Complex64>]) -> HermitianOperator {
    let n = vectors.len();
    debug_assert_eq!(values.len(), n);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let diagonal: f64 = (0..n).map(|k| values[k] * vectors[k][i].norm_sqr()).sum();
        entries[i * n + i] = Complex64::new(diagonal, 0.0);
        for j in (i + 1)..n {
            let mut z = Complex64::new(0.0, 0.0);
            for k in 0..n {
                z += (vectors[k][i] * vectors[k][j].conj()).scale(values[k]);
            }
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    HermitianOperator::from_flat_hermitian(n, entries)
}

/// Apply a scalar function to a Hermitian operator through its spectrum:
/// `f(A) = V f(Λ) V†`.
///
/// Fails with [`Error::DomainError`] if `f` returns a non-finite value at
/// any eigenvalue (for example `ln` on a singular positive-semidefinite
/// input).
pub fn matrix_function<F>(a: &HermitianOperator, f: F) -> Result<HermitianOperator>
where
    F: Fn(f64) -> f64,
{
    let spectrum = eigh(a)?;
    let mut values = Vec::with_capacity(spectrum.eigenvalues().len());
    for &ev in spectrum.eigenvalues() {
        let fv = f(ev);
        if !fv.is_finite() {
            return Err(Error::DomainError(ev));
        }
        values.push(fv);
    }
    Ok(assemble(&values, spectrum.eigenvectors()))
}

/// Extract the classical distribution of a density matrix.
///
/// Eigenvalues in `[-`[`EIGEN_CLIP_TOLERANCE`]`, 0)` are treated as roundoff
/// and clipped to zero; lower ones are rejected. The clipped spectrum is
/// renormalized into a [`ProbDist`] (sorted non-increasing).
pub fn validate_density(rho: &HermitianOperator) -> Result<ProbDist> {
    validate(rho, false)
}

/// Like [`validate_density`], but first require `|tr ρ - 1|` within
/// [`TRACE_TOLERANCE`].
pub fn validate_density_strict(rho: &HermitianOperator) -> Result<ProbDist> {
    validate(rho, true)
}

fn validate(rho: &HermitianOperator, strict: bool) -> Result<ProbDist> {
    if strict {
        let trace = rho.trace();
        if (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::TraceNotOne(trace));
        }
    }
    let spectrum = eigh(rho)?;
    for &ev in spectrum.eigenvalues() {
        if ev < -EIGEN_CLIP_TOLERANCE {
            return Err(Error::NegativeEigenvalue(ev));
        }
    }
    let clipped: Vec<f64> = spectrum.eigenvalues().iter().map(|&ev| ev.max(0.0)).collect();
    ProbDist::new(&clipped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn complex(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Max entrywise |A - V Λ V†|.
    fn reconstruction_error(a: &HermitianOperator, s: &Spectrum) -> f64 {
        let rebuilt = assemble(s.eigenvalues(), s.eigenvectors());
        let mut worst = 0.0f64;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                worst = worst.max((a.entry(i, j) - rebuilt.entry(i, j)).norm());
            }
        }
        worst
    }

    /// Max deviation of the eigenvector Gram matrix from the identity.
    fn orthonormality_error(s: &Spectrum) -> f64 {
        let vs = s.eigenvectors();
        let mut worst = 0.0f64;
        for (a, va) in vs.iter().enumerate() {
            for (b, vb) in vs.iter().enumerate() {
                let dot: Complex64 = va.iter().zip(vb).map(|(x, y)| x * y.conj()).sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - complex(expected, 0.0)).norm());
            }
        }
        worst
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> HermitianOperator {
        let rows: Vec<Vec<Complex64>> = (0..dim)
            .map(|_| {
                (0..dim)
                    .map(|_| complex(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect()
            })
            .collect();
        // Symmetrize by hand so the constructor's tolerance is irrelevant.
        let sym: Vec<Vec<Complex64>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| (rows[i][j] + rows[j][i].conj()).scale(0.5))
                    .collect()
            })
            .collect();
        HermitianOperator::new(&sym).unwrap()
    }

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let a = HermitianOperator::diagonal(&[0.3, 0.7]).unwrap();
        let s = eigh(&a).unwrap();
        assert_eq!(s.eigenvalues(), &[0.7, 0.3]);
        // Eigenvector for 0.7 is e₁, for 0.3 is e₀.
        assert_eq!(s.eigenvectors()[0], vec![complex(0.0, 0.0), complex(1.0, 0.0)]);
        assert_eq!(s.eigenvectors()[1], vec![complex(1.0, 0.0), complex(0.0, 0.0)]);
    }

    #[test]
    fn rank_one_projector_has_spectrum_one_zero() {
        let a = HermitianOperator::from_real(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let s = eigh(&a).unwrap();
        assert!((s.eigenvalues()[0] - 1.0).abs() <= 1e-12);
        assert!(s.eigenvalues()[1].abs() <= 1e-12);
        // Top eigenvector is (1,1)/√2 up to phase.
        let v = &s.eigenvectors()[0];
        let half = std::f64::consts::FRAC_1_SQRT_2;
        assert!((v[0].norm() - half).abs() <= 1e-12);
        assert!((v[1].norm() - half).abs() <= 1e-12);
        assert!(reconstruction_error(&a, &s) <= 1e-12);
    }

    #[test]
    fn imaginary_off_diagonal_block_splits_into_plus_minus_one() {
        // [[0, -i], [i, 0]] has characteristic polynomial λ² - 1.
        let a = HermitianOperator::new(&[
            vec![complex(0.0, 0.0), complex(0.0, -1.0)],
            vec![complex(0.0, 1.0), complex(0.0, 0.0)],
        ])
        .unwrap();
        let s = eigh(&a).unwrap();
        assert!((s.eigenvalues()[0] - 1.0).abs() <= 1e-12);
        assert!((s.eigenvalues()[1] + 1.0).abs() <= 1e-12);
        assert!(reconstruction_error(&a, &s) <= 1e-12);
        assert!(orthonormality_error(&s) <= 1e-12);
    }

    #[test]
    fn one_by_one_matrix_is_trivial() {
        let a = HermitianOperator::diagonal(&[2.5]).unwrap();
        let s = eigh(&a).unwrap();
        assert_eq!(s.eigenvalues(), &[2.5]);
        assert_eq!(s.eigenvectors()[0], vec![complex(1.0, 0.0)]);
    }

    #[test]
    fn random_matrices_reconstruct_and_stay_orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in [2, 3, 5, 8, 13] {
            let a = random_hermitian(&mut rng, dim);
            let s = eigh(&a).unwrap();
            assert!(
                reconstruction_error(&a, &s) <= 1e-12,
                "reconstruction failed at dim {dim}"
            );
            assert!(
                orthonormality_error(&s) <= 1e-12,
                "eigenvectors lost orthonormality at dim {dim}"
            );
            // Eigenvalue sum equals the trace.
            let sum: f64 = s.eigenvalues().iter().sum();
            assert!((sum - a.trace()).abs() <= 1e-10);
            // Sorted non-increasing.
            assert!(s.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn conjugation_by_a_rotation_preserves_eigenvalues() {
        // U D U† for the real rotation with cos 0.6, sin 0.8.
        let (c, s) = (0.6, 0.8);
        let (a, b) = (0.7, 0.3);
        let m = HermitianOperator::from_real(&[
            vec![c * c * a + s * s * b, c * s * (a - b)],
            vec![c * s * (a - b), s * s * a + c * c * b],
        ])
        .unwrap();
        let spectrum = eigh(&m).unwrap();
        assert!((spectrum.eigenvalues()[0] - 0.7).abs() <= 1e-12);
        assert!((spectrum.eigenvalues()[1] - 0.3).abs() <= 1e-12);
    }

    #[test]
    fn constructor_rejects_malformed_input() {
        assert_eq!(HermitianOperator::new(&[]), Err(Error::EmptyInput));
        assert!(matches!(
            HermitianOperator::new(&[vec![complex(0.0, 0.0)], vec![]]),
            Err(Error::NotSquare { rows: 2, index: 0, len: 1 })
        ));
        assert!(matches!(
            HermitianOperator::new(&[vec![complex(f64::NAN, 0.0)]]),
            Err(Error::NonFinite { index: 0, .. })
        ));
        // Asymmetric beyond tolerance.
        assert!(matches!(
            HermitianOperator::from_real(&[vec![0.0, 1.0], vec![0.0, 0.0]]),
            Err(Error::NotHermitian(_))
        ));
        // Imaginary diagonal is a Hermiticity violation too.
        assert!(matches!(
            HermitianOperator::new(&[vec![complex(0.0, 1.0)]]),
            Err(Error::NotHermitian(_))
        ));
        assert!(matches!(
            HermitianOperator::from_parts(&[vec![0.0]], &[vec![0.0], vec![0.0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn small_asymmetry_is_symmetrized_away() {
        let eps = 1e-12;
        let a = HermitianOperator::from_real(&[vec![1.0, 0.5 + eps], vec![0.5, 2.0]]).unwrap();
        assert_eq!(a.entry(0, 1), a.entry(1, 0).conj());
        assert!((a.entry(0, 1).re - (0.5 + eps / 2.0)).abs() <= 1e-15);
    }

    #[test]
    fn trace_sums_the_diagonal() {
        let a = HermitianOperator::diagonal(&[0.25, 0.5, 0.125]).unwrap();
        assert_eq!(a.trace(), 0.875);
    }

    #[test]
    fn matrix_function_applies_on_the_spectrum() {
        // Squaring a projector leaves it unchanged.
        let p = HermitianOperator::from_real(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let p2 = matrix_function(&p, |x| x * x).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((p2.entry(i, j) - p.entry(i, j)).norm() <= 1e-12);
            }
        }
        // exp on a diagonal matrix is entrywise exp of the diagonal, in the
        // original positions (sorting happens in the spectrum, not here).
        let d = HermitianOperator::diagonal(&[0.0, 1.0]).unwrap();
        let e = matrix_function(&d, f64::exp).unwrap();
        assert!((e.entry(0, 0).re - 1.0).abs() <= 1e-12);
        assert!((e.entry(1, 1).re - 1.0f64.exp()).abs() <= 1e-12);
        assert!(e.entry(0, 1).norm() <= 1e-15);
    }

    #[test]
    fn matrix_function_rejects_singular_logarithms() {
        let p = HermitianOperator::from_real(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        assert!(matches!(
            matrix_function(&p, f64::ln),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn density_validation_extracts_the_spectrum() {
        let rho = HermitianOperator::diagonal(&[0.1, 0.7, 0.2]).unwrap();
        let p = validate_density(&rho).unwrap();
        assert_eq!(p.weights(), &[0.7, 0.2, 0.1]);

        let projector = HermitianOperator::from_real(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let pure = validate_density(&projector).unwrap();
        assert!((pure.weights()[0] - 1.0).abs() <= 1e-12);
        assert!(pure.weights()[1].abs() <= 1e-12);
    }

    #[test]
    fn density_validation_clips_roundoff_but_rejects_real_negativity() {
        let nearly = HermitianOperator::diagonal(&[1.0, -1e-12]).unwrap();
        let p = validate_density(&nearly).unwrap();
        assert_eq!(p.weights(), &[1.0, 0.0]);

        let indefinite = HermitianOperator::diagonal(&[1.5, -0.5]).unwrap();
        assert!(matches!(
            validate_density(&indefinite),
            Err(Error::NegativeEigenvalue(_))
        ));
    }

    #[test]
    fn strict_density_validation_pins_the_trace() {
        let drifted = HermitianOperator::diagonal(&[0.6, 0.6]).unwrap();
        assert_eq!(
            validate_density_strict(&drifted),
            Err(Error::TraceNotOne(1.2))
        );
        // Non-strict accepts and renormalizes the same input.
        let p = validate_density(&drifted).unwrap();
        assert_eq!(p.weights(), &[0.5, 0.5]);
        // Within tolerance, strict accepts.
        let fine = HermitianOperator::diagonal(&[0.5 + 1e-9, 0.5]).unwrap();
        assert!(validate_density_strict(&fine).is_ok());
    }
}
