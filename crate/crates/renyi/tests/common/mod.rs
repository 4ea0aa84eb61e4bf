//! Shared generators for the integration suites: seeded distributions,
//! spectra, dyadic grids, and random unitaries.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use renyi::{EnergySpectrum, HermitianOperator, ProbDist};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random distribution over `dim` outcomes with every raw weight at least
/// `floor` (before normalization), so the support is full and no weight is
/// pathologically small.
pub fn random_dist(rng: &mut ChaCha8Rng, dim: usize, floor: f64) -> ProbDist {
    let raw: Vec<f64> = (0..dim).map(|_| rng.random_range(floor..1.0)).collect();
    ProbDist::new(&raw).expect("valid weights")
}

/// A random spectrum of `dim` levels drawn uniformly from `[lo, hi]`.
pub fn random_energies(rng: &mut ChaCha8Rng, dim: usize, lo: f64, hi: f64) -> EnergySpectrum {
    let levels: Vec<f64> = (0..dim).map(|_| rng.random_range(lo..hi)).collect();
    EnergySpectrum::new(levels).expect("valid levels")
}

/// A log-uniform order in `[0.1, 10]` kept at least `gap` away from 1.
pub fn random_order(rng: &mut ChaCha8Rng, gap: f64) -> f64 {
    loop {
        let q = 10f64.powf(rng.random_range(-1.0..1.0));
        if (q - 1.0).abs() > gap {
            return q;
        }
    }
}

/// A value on the dyadic grid `k · 2⁻²⁰` with `|value| ≤ magnitude`.
/// Sums and differences of such values (up to ~2³² grid steps) are exact in
/// f64, which makes shift-invariance claims bitwise-checkable.
pub fn random_dyadic(rng: &mut ChaCha8Rng, magnitude: f64) -> f64 {
    let steps = (magnitude * (1u64 << 20) as f64) as i64;
    let k = rng.random_range(-steps..=steps);
    (k as f64) / (1u64 << 20) as f64
}

/// A Haar-ish random unitary built as a product of random complex Givens
/// rotations (enough of them to mix every pair of coordinates well).
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Vec<Complex64>> {
    let mut u: Vec<Vec<Complex64>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();
    if dim < 2 {
        return u;
    }
    let rounds = 3 * dim * dim;
    for _ in 0..rounds {
        let p = rng.random_range(0..dim);
        let mut q = rng.random_range(0..dim - 1);
        if q >= p {
            q += 1;
        }
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let (s, c) = theta.sin_cos();
        let e_plus = Complex64::from_polar(1.0, phi);
        let e_minus = e_plus.conj();
        for row in u.iter_mut() {
            let a = row[p];
            let b = row[q];
            row[p] = a.scale(c) - (e_minus * b).scale(s);
            row[q] = (e_plus * a).scale(s) + b.scale(c);
        }
    }
    u
}

/// `U diag(values) U†` as a Hermitian operator.
pub fn conjugate_diagonal(u: &[Vec<Complex64>], values: &[f64]) -> HermitianOperator {
    let dim = values.len();
    let rows: Vec<Vec<Complex64>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    (0..dim)
                        .map(|k| (u[i][k] * u[j][k].conj()).scale(values[k]))
                        .sum()
                })
                .collect()
        })
        .collect();
    HermitianOperator::new(&rows).expect("conjugation preserves Hermiticity")
}
