//! Seeded random generators for test matrices and majorisation pairs.
//!
//! All draws go through ChaCha8. Independent trials use the same seed on
//! distinct streams, so trial `t` of a run is reproducible on its own.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::spectra::{Matrix, C64};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Entries `(g + i h)/√2` with independent standard normals `g, h`.
pub fn complex_gaussian(n: usize, rng: &mut impl Rng) -> Matrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let data = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        C64::new(re * scale, im * scale)
    });
    Matrix::new(data).expect("gaussian entries are finite")
}

/// Rank-one `u v*` with complex Gaussian factors.
pub fn rank_one(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut draw = || -> Vec<C64> {
        (0..n)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                C64::new(re, im)
            })
            .collect()
    };
    let u = draw();
    let v = draw();
    Matrix::new(DMatrix::from_fn(n, n, |i, j| u[i] * v[j].conj())).expect("finite")
}

/// Haar-distributed unitary: the Q factor of a complex Gaussian matrix with
/// the phases of R's diagonal divided out.
pub fn unitary(n: usize, rng: &mut impl Rng) -> Matrix {
    let g = complex_gaussian(n, rng).into_dmatrix();
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    Matrix::new(q).expect("finite")
}

/// Nonnegative vector with exponential entries, some of them zeroed.
pub fn nonnegative_vector(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let zero_rate = rng.random_range(0.0..0.5);
    (0..n)
        .map(|_| {
            if rng.random::<f64>() < zero_rate {
                0.0
            } else {
                Exp1.sample(rng)
            }
        })
        .collect()
}

/// Applies `steps` random T-transforms `(y_i, y_j) ← (t y_i + (1-t) y_j,
/// (1-t) y_i + t y_j)`. The product is doubly stochastic, so the output is
/// majorised by the input.
pub fn t_transforms(y: &[f64], steps: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut out = y.to_vec();
    let n = out.len();
    if n < 2 {
        return out;
    }
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let t: f64 = rng.random();
        let (a, b) = (out[i], out[j]);
        out[i] = t * a + (1.0 - t) * b;
        out[j] = (1.0 - t) * a + t * b;
    }
    out
}

/// `(d, lam)` with `d ≺ lam`; `d` is in random order.
pub fn majorised_pair(n: usize, rng: &mut impl Rng) -> (Vec<f64>, Vec<f64>) {
    let lam = nonnegative_vector(n, rng);
    let steps = rng.random_range(0..=3 * n);
    let d = t_transforms(&lam, steps, rng);
    (d, lam)
}

/// `(y, x)` with `y = θ · D x`, `θ ∈ (0, 1]`, `D` a product of T-transforms,
/// so `y ≺≺ x`.
pub fn submajorised_pair(n: usize, rng: &mut impl Rng) -> (Vec<f64>, Vec<f64>) {
    let (mixed, x) = majorised_pair(n, rng);
    let theta = if rng.random::<f64>() < 0.2 {
        1.0
    } else {
        1.0 - rng.random::<f64>()
    };
    (mixed.iter().map(|v| v * theta).collect(), x)
}
