//! Constructive Schur–Horn: a real symmetric matrix with a prescribed
//! spectrum and a prescribed diagonal, built from `n - 1` plane rotations.
//!
//! Starting from `diag(λ)`, targets are placed largest first. Each step picks
//! two adjacent entries `α ≥ t ≥ β` of the (still diagonal) unplaced block,
//! rotates so that one of them becomes `t` exactly and the other becomes
//! `α + β - t`, and retires the placed index. The unplaced block stays
//! diagonal and nonincreasing, and the remaining targets stay majorised by
//! it, so the recursion never gets stuck. The last entry is fixed by the
//! trace.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::major::{self, intermediate, RealSeq};
use crate::spectra::{diag_extract, singular_values, Matrix};

/// A target diagonal `d` and spectrum `lam` with `d ≺ lam`.
#[derive(Clone, Debug)]
pub struct SpectrumDiagonalPair {
    d: RealSeq,
    lam: RealSeq,
}

impl SpectrumDiagonalPair {
    pub fn new(d: RealSeq, lam: RealSeq) -> Result<Self> {
        if d.len() != lam.len() {
            return Err(Error::input(format!(
                "diagonal has length {}, spectrum has length {}",
                d.len(),
                lam.len()
            )));
        }
        if d.is_empty() {
            return Err(Error::input("empty target"));
        }
        let tol = d.tolerance().max(lam.tolerance());
        if let Some(prefix) = major::first_violation(d.values(), lam.values(), tol) {
            return Err(Error::Infeasible { prefix });
        }
        if !major::majorised(d.values(), lam.values(), tol) {
            // prefix sums pass but the totals differ
            return Err(Error::Infeasible { prefix: d.len() });
        }
        Ok(SpectrumDiagonalPair { d, lam })
    }

    pub fn diagonal(&self) -> &RealSeq {
        &self.d
    }

    pub fn spectrum(&self) -> &RealSeq {
        &self.lam
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }
}

/// `H ← Gᵀ H G` with `G` the identity except on the `(i, j)` plane, where
/// it is `[[cos, sin], [-sin, cos]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlaneRotation {
    pub i: usize,
    pub j: usize,
    pub cos: f64,
    pub sin: f64,
}

impl PlaneRotation {
    pub fn is_identity(&self) -> bool {
        self.sin == 0.0
    }

    fn apply(&self, h: &mut DMatrix<f64>) {
        let (i, j, c, s) = (self.i, self.j, self.cos, self.sin);
        let n = h.nrows();
        for k in 0..n {
            let (hi, hj) = (h[(i, k)], h[(j, k)]);
            h[(i, k)] = c * hi - s * hj;
            h[(j, k)] = s * hi + c * hj;
        }
        for k in 0..n {
            let (hi, hj) = (h[(k, i)], h[(k, j)]);
            h[(k, i)] = c * hi - s * hj;
            h[(k, j)] = s * hi + c * hj;
        }
    }
}

/// Output of [`schur_horn_rotations`]: the matrix and the schedule that built it.
#[derive(Clone, Debug)]
pub struct Construction {
    pub matrix: Matrix,
    /// Always `n - 1` entries; zero-angle placements are kept.
    pub rotations: Vec<PlaneRotation>,
}

pub fn schur_horn_construct(pair: &SpectrumDiagonalPair) -> Result<Matrix> {
    Ok(schur_horn_rotations(pair)?.matrix)
}

/// Same as [`schur_horn_construct`], also returning the rotation schedule.
///
/// Rotation indices refer to the internal working frame, in which slot `s`
/// starts out holding `lam↓[s]`.
pub fn schur_horn_rotations(pair: &SpectrumDiagonalPair) -> Result<Construction> {
    let n = pair.n();
    let lam = pair.lam.rearranged();

    // targets in placement order, largest first; stable on ties
    let mut order: Vec<usize> = (0..n).collect();
    let d = pair.d.values();
    order.sort_by(|&a, &b| d[b].total_cmp(&d[a]));

    let mut h = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(lam));
    // unplaced slots, kept in nonincreasing order of their diagonal entries
    let mut active: Vec<usize> = (0..n).collect();
    // slot -> caller index
    let mut owner = vec![0usize; n];
    let mut rotations = Vec::with_capacity(n.saturating_sub(1));

    for &target_idx in &order[..n - 1] {
        let t = d[target_idx];
        let above = active.iter().take_while(|&&s| h[(s, s)] >= t).count();
        let k = above.saturating_sub(1).min(active.len() - 2);
        let (hi, lo) = (active[k], active[k + 1]);
        let (alpha, beta) = (h[(hi, hi)], h[(lo, lo)]);
        let gap = alpha - beta;
        let cos2 = if gap > 0.0 {
            ((t - beta) / gap).clamp(0.0, 1.0)
        } else {
            1.0
        };
        let rot = PlaneRotation {
            i: hi,
            j: lo,
            cos: cos2.sqrt(),
            sin: (1.0 - cos2).sqrt(),
        };
        if !rot.is_identity() {
            rot.apply(&mut h);
        }
        rotations.push(rot);
        owner[hi] = target_idx;
        active.remove(k);
    }
    owner[active[0]] = order[n - 1];

    let h = (&h + h.transpose()) * 0.5;
    let mut out = DMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            out[(owner[a], owner[b])] = h[(a, b)];
        }
    }
    Ok(Construction {
        matrix: Matrix::from_real(&out)?,
        rotations,
    })
}

/// A positive semidefinite `V` of dimension `n` with `diag(V) = y` (padded
/// with zeros) and `μ(V) ≤ x↓` entrywise, for `y ≺≺ x`.
///
/// The spectrum is the intermediate sequence `x'` with `y ≺ x' ≤ x↓`, so the
/// witness is as close to `x` as the diagonal allows.
pub fn kaftal_weiss_witness(y: &RealSeq, x: &RealSeq, n: usize) -> Result<Matrix> {
    if n < y.len() {
        return Err(Error::param(format!(
            "dimension {n} is smaller than the diagonal length {}",
            y.len()
        )));
    }
    if n == 0 {
        return Err(Error::param("dimension must be positive"));
    }
    let y = y.padded(n);
    let spectrum = intermediate(&y, x)?;
    let mut lam = spectrum.rearranged();
    // entries past n are zero: the prefix sums of x'↓ reach sum(y) by index n
    if lam[n..].iter().any(|&v| v > 0.0) {
        return Err(Error::Internal("intermediate sequence has support beyond n".into()));
    }
    lam.truncate(n);
    let lam = RealSeq::with_tolerance(lam, spectrum.tolerance())?;
    schur_horn_construct(&SpectrumDiagonalPair::new(y, lam)?)
}

/// Deviations of a constructed witness from its targets, measured with an
/// eigensolver and SVD independent of the construction.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub diag_error: f64,
    /// `max_k (μ_k(V) - x↓_k)`, positive when the bound is violated.
    pub spectrum_excess: f64,
    pub min_eigenvalue: f64,
    pub submajorised: bool,
}

pub fn verify_witness(v: &Matrix, y: &RealSeq, x: &RealSeq) -> Result<WitnessReport> {
    let n = v.n();
    let y = y.padded(n);
    let diag_error = diag_extract(v)
        .iter()
        .zip(y.values())
        .map(|(z, t)| (z - t).norm())
        .fold(0.0, f64::max);
    let mu = singular_values(v)?;
    let xs = x.rearranged();
    let spectrum_excess = mu
        .as_slice()
        .iter()
        .enumerate()
        .map(|(k, m)| m - xs.get(k).copied().unwrap_or(0.0))
        .fold(f64::NEG_INFINITY, f64::max);
    let min_eigenvalue = v.hermitian_eigenvalues()[0];
    Ok(WitnessReport {
        n,
        diag_error,
        spectrum_excess,
        min_eigenvalue,
        submajorised: major::is_submajorised(&y, x),
    })
}
