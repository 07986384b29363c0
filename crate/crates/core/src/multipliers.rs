//! Schur (entrywise) multipliers, lower bounds on their norms, and the
//! blow-up experiments for diagonal, Toeplitz and lacunary Hankel patterns.
//!
//! Every multiplier norm reported here is a lower bound: the ratio
//! `‖T_m A‖ / ‖A‖` for some explicit `m` and `A`.

use nalgebra::DMatrix;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::major::RealSeq;
use crate::patterns::{extract_monotone_diagonal, Cell, Pattern};
use crate::random;
use crate::schur_horn::kaftal_weiss_witness;
use crate::spectra::{ideal_norm, IdealNorm, Matrix, C64};

/// A symbol `m` with `sup |m| ≤ 1`, vanishing off its support pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierSymbol {
    values: DMatrix<C64>,
    support: Pattern,
}

impl MultiplierSymbol {
    /// Rescales `values` to sup-modulus 1 if it exceeds 1.
    pub fn new(values: DMatrix<C64>, support: Pattern) -> Result<Self> {
        let n = support.n();
        if values.nrows() != n || values.ncols() != n {
            return Err(Error::input(format!(
                "symbol is {}x{} but its support lives in a {n}x{n} box",
                values.nrows(),
                values.ncols()
            )));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::input("symbol has non-finite entries"));
        }
        for i in 0..n {
            for j in 0..n {
                if !support.contains((i, j)) && values[(i, j)] != C64::new(0.0, 0.0) {
                    return Err(Error::input(format!("symbol is nonzero at ({i}, {j}) outside its support")));
                }
            }
        }
        let sup = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let values = if sup > 1.0 { values / C64::new(sup, 0.0) } else { values };
        Ok(MultiplierSymbol { values, support })
    }

    pub fn indicator(support: &Pattern) -> Self {
        let n = support.n();
        let mut values = DMatrix::zeros(n, n);
        for (i, j) in support.cells() {
            values[(i, j)] = C64::new(1.0, 0.0);
        }
        MultiplierSymbol {
            values,
            support: support.clone(),
        }
    }

    /// `m ≡ 1` on the whole box.
    pub fn ones(n: usize) -> Self {
        MultiplierSymbol::indicator(&Pattern::full(n))
    }

    /// Independent uniform ±1 on each cell of the support.
    pub fn random_signs(support: &Pattern, rng: &mut impl Rng) -> Self {
        let n = support.n();
        let mut values = DMatrix::zeros(n, n);
        for (i, j) in support.cells() {
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            values[(i, j)] = C64::new(sign, 0.0);
        }
        MultiplierSymbol {
            values,
            support: support.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.support.n()
    }

    pub fn support(&self) -> &Pattern {
        &self.support
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.values[(i, j)]
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Pointwise product; `T_{m m'} = T_m ∘ T_{m'}`.
    pub fn product(&self, other: &MultiplierSymbol) -> Result<MultiplierSymbol> {
        if self.n() != other.n() {
            return Err(Error::input("symbols have different dimensions"));
        }
        let values = self.values.component_mul(&other.values);
        let n = self.n();
        let support = Pattern::new(
            n,
            self.support.cells().filter(|&c| other.support.contains(c)),
        )?;
        Ok(MultiplierSymbol { values, support })
    }
}

/// `T_m(A) = {m(j,k) A[j,k]}`.
pub fn apply(m: &MultiplierSymbol, a: &Matrix) -> Result<Matrix> {
    if m.n() != a.n() {
        return Err(Error::input(format!(
            "symbol dimension {} does not match matrix dimension {}",
            m.n(),
            a.n()
        )));
    }
    Matrix::new(m.values.component_mul(a.as_dmatrix()))
}

/// `‖T_m A‖ / ‖A‖`, a lower bound on the multiplier norm of `m` for `norm`.
pub fn multiplier_ratio(m: &MultiplierSymbol, a: &Matrix, norm: IdealNorm) -> Result<f64> {
    let denom = ideal_norm(a, norm)?;
    if denom == 0.0 {
        return Err(Error::Degenerate("test matrix has zero norm".into()));
    }
    Ok(ideal_norm(&apply(m, a)?, norm)? / denom)
}

/// The rank-one witness `J_L / L` (`L = cells.len()`) moved onto the rows
/// and columns of a strictly increasing chain of cells by the partial
/// isometries `e_k ↦ e_{row_k}`, `e_k ↦ e_{col_k}`.
///
/// Restricting it to the chain cells keeps the diagonal `(1/L) I_L` of the
/// original witness, so the ratio on Schatten `p` is `L^{1/p - 1}`.
pub fn transferred_witness(chain: &[Cell], n: usize) -> Result<Matrix> {
    let len = chain.len();
    if len == 0 {
        return Err(Error::Degenerate("empty chain carries no witness".into()));
    }
    if chain.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 >= w[1].1) {
        return Err(Error::input("chain must be strictly increasing in both coordinates"));
    }
    if chain.iter().any(|&(r, c)| r >= n || c >= n) {
        return Err(Error::input("chain leaves the box"));
    }
    let w = uniform_diagonal_witness(len)?;
    let u_rows = DMatrix::from_fn(n, len, |r, k| if chain[k].0 == r { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    let u_cols = DMatrix::from_fn(n, len, |c, k| if chain[k].1 == c { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    Matrix::new(&u_rows * w.as_dmatrix() * u_cols.adjoint())
}

/// `V` with diagonal `(1/n, …, 1/n)` and `μ(V) ≤ (1, 0, …, 0)`; this is `J_n / n`.
fn uniform_diagonal_witness(n: usize) -> Result<Matrix> {
    let y = RealSeq::new(vec![1.0 / n as f64; n])?;
    let mut x = vec![0.0; n];
    x[0] = 1.0;
    kaftal_weiss_witness(&y, &RealSeq::new(x)?, n)
}

/// Deterministic part of [`estimate_multiplier_norm`]: the ratio of the
/// indicator of a longest monotone diagonal of `pattern` on the transferred
/// witness. Monotone under pattern inclusion. Zero for the empty pattern.
pub fn witness_lower_bound(pattern: &Pattern, norm: IdealNorm) -> Result<f64> {
    norm.validate()?;
    let chain = extract_monotone_diagonal(pattern);
    if chain.is_empty() {
        return Ok(0.0);
    }
    let v = transferred_witness(&chain, pattern.n())?;
    let support = Pattern::new(pattern.n(), chain)?;
    multiplier_ratio(&MultiplierSymbol::indicator(&support), &v, norm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Witness,
    Gaussian,
    RankOne,
}

const FAMILIES: [Family; 3] = [Family::Witness, Family::Gaussian, Family::RankOne];

/// Monte-Carlo lower bound on the multiplier norm over symbols supported on
/// `pattern`: the largest ratio over `trials` draws.
///
/// Trial `t` draws from `trial_rng(seed, t)` and uses family `t mod 3`:
/// random ±1 signs on a longest monotone diagonal against the transferred
/// witness, random ±1 signs on the whole pattern against a complex Gaussian
/// matrix, and the same against a rank-one `u v*`. Trial 0 is therefore
/// always the witness.
pub fn estimate_multiplier_norm(pattern: &Pattern, norm: IdealNorm, trials: usize, seed: u64) -> Result<f64> {
    norm.validate()?;
    if trials == 0 {
        return Err(Error::param("at least one trial is required"));
    }
    if pattern.is_empty() {
        return Ok(0.0);
    }
    let n = pattern.n();
    let chain = extract_monotone_diagonal(pattern);
    let chain_pattern = Pattern::new(n, chain.iter().copied())?;
    let witness = transferred_witness(&chain, n)?;

    let mut best: f64 = 0.0;
    for t in 0..trials {
        let mut rng = random::trial_rng(seed, t as u64);
        let ratio = match FAMILIES[t % FAMILIES.len()] {
            Family::Witness => {
                let m = MultiplierSymbol::random_signs(&chain_pattern, &mut rng);
                multiplier_ratio(&m, &witness, norm)?
            }
            Family::Gaussian => {
                let a = random::complex_gaussian(n, &mut rng);
                let m = MultiplierSymbol::random_signs(pattern, &mut rng);
                multiplier_ratio(&m, &a, norm)?
            }
            Family::RankOne => {
                let a = random::rank_one(n, &mut rng);
                let m = MultiplierSymbol::random_signs(pattern, &mut rng);
                multiplier_ratio(&m, &a, norm)?
            }
        };
        best = best.max(ratio);
    }
    Ok(best)
}

/// Ratios of a multiplier family across sizes, with the least-squares slope
/// of `log ratio` against `log n`.
#[derive(Clone, Debug, Serialize)]
pub struct BlowupReport {
    pub norm: IdealNorm,
    pub sizes: Vec<usize>,
    pub ratios: Vec<f64>,
    /// `None` when fewer than two sizes have a positive ratio.
    pub fit_exponent: Option<f64>,
}

impl BlowupReport {
    pub fn new(norm: IdealNorm, sizes: Vec<usize>, ratios: Vec<f64>) -> Self {
        let fit_exponent = fit_exponent(&sizes, &ratios);
        BlowupReport {
            norm,
            sizes,
            ratios,
            fit_exponent,
        }
    }
}

/// Ordinary least-squares slope of `ln ratio` on `ln n`, over the points
/// with positive ratio.
pub fn fit_exponent(sizes: &[usize], ratios: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = sizes
        .iter()
        .zip(ratios)
        .filter(|(&n, &r)| n > 0 && r > 0.0)
        .map(|(&n, &r)| ((n as f64).ln(), r.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::param("no sizes given"));
    }
    if sizes.contains(&0) {
        return Err(Error::param("sizes must be positive"));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param("sizes must be strictly increasing"));
    }
    Ok(())
}

/// For each `n`, the ratio of the diagonal indicator on the witness
/// `V = J_n / n` (diagonal `1/n`, singular values `(1, 0, …, 0)`) in
/// Schatten `p`. The ratio is `n^{1/p - 1}`: unbounded for `p < 1`, constant
/// `1` at `p = 1`.
pub fn diagonal_blowup(p: f64, sizes: &[usize]) -> Result<BlowupReport> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::param(format!("exponent must lie in (0, 1], got {p}")));
    }
    check_sizes(sizes)?;
    let norm = IdealNorm::Schatten(p);
    let ratios = sizes
        .iter()
        .map(|&n| {
            let v = uniform_diagonal_witness(n)?;
            multiplier_ratio(&MultiplierSymbol::indicator(&Pattern::diagonal(n)), &v, norm)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(BlowupReport::new(norm, sizes.to_vec(), ratios))
}

/// Moves the diagonal witness of size `n - |d|` onto the Toeplitz line
/// `{(j, k) : j - k = d}` by partial-isometry conjugation and returns the
/// ratio of that line's indicator in Schatten `p`.
pub fn toeplitz_transfer_check(d: i64, p: f64, n: usize) -> Result<f64> {
    let norm = IdealNorm::schatten(p)?;
    if d.unsigned_abs() >= n as u64 {
        return Err(Error::param(format!("offset {d} does not fit in a {n}x{n} box")));
    }
    let len = n - d.unsigned_abs() as usize;
    let row_shift = d.max(0) as usize;
    let col_shift = (-d).max(0) as usize;
    let rows: Vec<usize> = (0..len).map(|i| i + row_shift).collect();
    let cols: Vec<usize> = (0..len).map(|i| i + col_shift).collect();

    let line = Pattern::diagonal(len).transform(&rows, &cols, n)?;
    if line != Pattern::toeplitz(&[d], n) {
        return Err(Error::Internal(format!("shifted diagonal is not the Toeplitz line {d}")));
    }
    let chain: Vec<Cell> = rows.into_iter().zip(cols).collect();
    let v = transferred_witness(&chain, n)?;
    multiplier_ratio(&MultiplierSymbol::indicator(&line), &v, norm)
}

/// [`estimate_multiplier_norm`] on `lacunary_hankel(q, n)` across sizes.
#[derive(Clone, Debug, Serialize)]
pub struct HankelReport {
    pub q: f64,
    pub trials: usize,
    pub seed: u64,
    #[serde(flatten)]
    pub report: BlowupReport,
    pub cells: Vec<usize>,
    /// Longest monotone diagonal inside each truncated pattern.
    pub lis_lengths: Vec<usize>,
    /// `max/min < 4` over the positive ratios. A heuristic, not a bound.
    pub bounded_heuristic: bool,
}

pub fn hankel_probe(q: f64, norm: IdealNorm, sizes: &[usize], trials: usize, seed: u64) -> Result<HankelReport> {
    norm.validate()?;
    check_sizes(sizes)?;
    let mut ratios = Vec::with_capacity(sizes.len());
    let mut cells = Vec::with_capacity(sizes.len());
    let mut lis_lengths = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let pattern = Pattern::lacunary_hankel(q, n)?;
        cells.push(pattern.len());
        lis_lengths.push(extract_monotone_diagonal(&pattern).len());
        ratios.push(estimate_multiplier_norm(&pattern, norm, trials, seed)?);
    }
    let positive: Vec<f64> = ratios.iter().copied().filter(|&r| r > 0.0).collect();
    let bounded_heuristic = match (
        positive.iter().copied().reduce(f64::max),
        positive.iter().copied().reduce(f64::min),
    ) {
        (Some(hi), Some(lo)) => hi / lo < 4.0,
        _ => true,
    };
    Ok(HankelReport {
        q,
        trials,
        seed,
        report: BlowupReport::new(norm, sizes.to_vec(), ratios),
        cells,
        lis_lengths,
        bounded_heuristic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{diag_average, singular_values};

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn identity_symbol_is_identity() {
        let mut rng = random::rng(0);
        let a = random::complex_gaussian(5, &mut rng);
        assert_eq!(apply(&MultiplierSymbol::ones(5), &a).unwrap(), a);
        assert!((multiplier_ratio(&MultiplierSymbol::ones(5), &a, IdealNorm::Schatten(0.5)).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_indicator_matches_averaging() {
        let mut rng = random::rng(1);
        let a = random::complex_gaussian(7, &mut rng);
        let m = MultiplierSymbol::indicator(&Pattern::diagonal(7));
        assert!(apply(&m, &a).unwrap().max_abs_diff(&diag_average(&a)) < 1e-12);
    }

    #[test]
    fn random_signs_on_identity_keep_singular_values() {
        let mut rng = random::rng(2);
        let m = MultiplierSymbol::random_signs(&Pattern::full(6), &mut rng);
        let out = apply(&m, &Matrix::identity(6)).unwrap();
        assert!(singular_values(&out).unwrap().as_slice().iter().all(|s| (s - 1.0).abs() < 1e-14));
        for k in 0..6 {
            assert_eq!(out.get(k, k).norm(), 1.0);
        }
    }

    #[test]
    fn symbols_are_normalised_and_supported() {
        let support = Pattern::diagonal(2);
        let values = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![C64::new(4.0, 0.0), C64::new(2.0, 0.0)]));
        let m = MultiplierSymbol::new(values, support.clone()).unwrap();
        assert_eq!(m.sup_norm(), 1.0);
        assert_eq!(m.get(1, 1).re, 0.5);
        let off = DMatrix::from_element(2, 2, C64::new(0.5, 0.0));
        assert!(MultiplierSymbol::new(off, support).is_err());
    }

    #[test]
    fn composition_is_the_pointwise_product() {
        let mut rng = random::rng(4);
        let a = random::complex_gaussian(4, &mut rng);
        let m1 = MultiplierSymbol::random_signs(&Pattern::random(4, 0.6, 1).unwrap(), &mut rng);
        let m2 = MultiplierSymbol::random_signs(&Pattern::random(4, 0.6, 2).unwrap(), &mut rng);
        let lhs = apply(&m1, &apply(&m2, &a).unwrap()).unwrap();
        let rhs = apply(&m1.product(&m2).unwrap(), &a).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn dimension_mismatch_and_zero_denominator() {
        let m = MultiplierSymbol::ones(3);
        assert!(matches!(apply(&m, &Matrix::identity(2)), Err(Error::InvalidInput(_))));
        assert!(matches!(
            multiplier_ratio(&m, &Matrix::zeros(3), IdealNorm::trace()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn diagonal_ratio_on_the_projection() {
        for n in [2usize, 4, 8, 16] {
            let v = Matrix::ones(n).scale(1.0 / n as f64);
            let m = MultiplierSymbol::indicator(&Pattern::diagonal(n));
            for p in [1.0 / 3.0, 0.5, 2.0 / 3.0] {
                let r = multiplier_ratio(&m, &v, IdealNorm::Schatten(p)).unwrap();
                assert!(close(r, (n as f64).powf(1.0 / p - 1.0), 1e-10), "n={n} p={p}: {r}");
            }
            let r = multiplier_ratio(&m, &v, IdealNorm::trace()).unwrap();
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn blowup_examples() {
        let r = diagonal_blowup(1.0, &[2, 4, 8]).unwrap();
        assert!(r.ratios.iter().all(|&x| (x - 1.0).abs() < 1e-9));
        assert!(r.fit_exponent.unwrap().abs() < 0.01);
        let r = diagonal_blowup(0.5, &[2, 4, 8, 16]).unwrap();
        for (x, n) in r.ratios.iter().zip([2.0, 4.0, 8.0, 16.0]) {
            assert!(close(*x, n, 1e-8));
        }
        assert!((r.fit_exponent.unwrap() - 1.0).abs() < 0.01);
        let r = diagonal_blowup(1.0 / 3.0, &[8]).unwrap();
        assert!(close(r.ratios[0], 64.0, 1e-8));
        assert!(r.fit_exponent.is_none());
        assert!(diagonal_blowup(1.5, &[2]).is_err());
        assert!(diagonal_blowup(0.0, &[2]).is_err());
        assert!(diagonal_blowup(0.5, &[4, 2]).is_err());
    }

    #[test]
    fn toeplitz_examples() {
        let d0 = toeplitz_transfer_check(0, 0.5, 6).unwrap();
        assert!(close(d0, diagonal_blowup(0.5, &[6]).unwrap().ratios[0], 1e-12));
        assert!(close(toeplitz_transfer_check(1, 0.5, 5).unwrap(), 4.0, 1e-10));
        assert!(close(toeplitz_transfer_check(-2, 0.5, 5).unwrap(), 3.0, 1e-10));
        assert!(close(toeplitz_transfer_check(4, 0.5, 5).unwrap(), 1.0, 1e-12));
        assert!(toeplitz_transfer_check(5, 0.5, 5).is_err());
        assert!(toeplitz_transfer_check(0, -1.0, 5).is_err());
    }

    #[test]
    fn estimate_examples() {
        let half = IdealNorm::Schatten(0.5);
        assert_eq!(estimate_multiplier_norm(&Pattern::empty(4), half, 5, 0).unwrap(), 0.0);
        for n in [4usize, 9] {
            let est = estimate_multiplier_norm(&Pattern::diagonal(n), half, 1, 0).unwrap();
            assert!(est >= n as f64 * (1.0 - 1e-9));
        }
        let hs = estimate_multiplier_norm(&Pattern::full(6), IdealNorm::Schatten(2.0), 12, 3).unwrap();
        assert!(hs <= 1.0 + 1e-9);
        assert!(estimate_multiplier_norm(&Pattern::full(2), half, 0, 0).is_err());
    }

    #[test]
    fn estimates_are_reproducible() {
        let p = Pattern::random(6, 0.4, 11).unwrap();
        let norm = IdealNorm::Schatten(0.5);
        let a = estimate_multiplier_norm(&p, norm, 9, 42).unwrap();
        assert_eq!(a.to_bits(), estimate_multiplier_norm(&p, norm, 9, 42).unwrap().to_bits());
    }

    #[test]
    fn fit_handles_degenerate_inputs() {
        assert_eq!(fit_exponent(&[2], &[1.0]), None);
        assert_eq!(fit_exponent(&[2, 4], &[0.0, 1.0]), None);
        assert!((fit_exponent(&[2, 4, 8], &[4.0, 16.0, 64.0]).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hankel_probe_reports_lis_and_cells() {
        let r = hankel_probe(2.0, IdealNorm::Schatten(0.5), &[4, 8], 3, 0).unwrap();
        assert_eq!(r.cells.len(), 2);
        assert_eq!(r.lis_lengths.len(), 2);
        for (ratio, lis) in r.report.ratios.iter().zip(&r.lis_lengths) {
            assert!(*ratio >= *lis as f64 * (1.0 - 1e-9));
        }
        let empty = hankel_probe(2.0, IdealNorm::operator(), &[1], 3, 0).unwrap();
        assert_eq!(empty.report.ratios, vec![0.0]);
    }
}
