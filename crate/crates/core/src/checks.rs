//! Randomized cross-module property suites.
//!
//! Each check draws `cases` seeded instances, compares an implementation
//! against an independent route (brute force, a second algorithm, or a
//! closed form) and counts disagreements beyond the tolerance.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::major::{self, RealSeq};
use crate::multipliers::{self, MultiplierSymbol};
use crate::patterns::{self, Pattern};
use crate::random;
use crate::schur_horn::{self, SpectrumDiagonalPair};
use crate::spectra::{self, IdealNorm, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Spectra,
    Major,
    SchurHorn,
    Patterns,
    Multipliers,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "spectra" => Suite::Spectra,
            "major" => Suite::Major,
            "schur-horn" | "schur_horn" => Suite::SchurHorn,
            "patterns" => Suite::Patterns,
            "multipliers" => Suite::Multipliers,
            _ => return Err(Error::param(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Spectra => "spectra",
            Suite::Major => "major",
            Suite::SchurHorn => "schur-horn",
            Suite::Patterns => "patterns",
            Suite::Multipliers => "multipliers",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    pub cases: usize,
    pub tol: f64,
    /// Largest random matrix dimension.
    pub max_n: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            cases: 200,
            tol: 1e-9,
            max_n: 24,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Largest observed violation (or 0 for boolean checks).
    pub worst: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    suite: Suite,
    name: &'static str,
    cases: usize,
    failures: usize,
    worst: f64,
}

impl Tally {
    fn new(suite: Suite, name: &'static str) -> Self {
        Tally {
            suite,
            name,
            cases: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    /// Records `excess ≤ 0` as a pass and tracks the largest excess.
    fn excess(&mut self, excess: f64) {
        self.worst = self.worst.max(excess);
        self.record(excess <= 0.0);
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            suite: self.suite.to_string(),
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            worst: self.worst,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    Ok(match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Spectra,
                Suite::Major,
                Suite::SchurHorn,
                Suite::Patterns,
                Suite::Multipliers,
            ] {
                out.extend(run_suite(s, cfg)?);
            }
            out
        }
        Suite::Spectra => spectra_checks(cfg)?,
        Suite::Major => major_checks(cfg)?,
        Suite::SchurHorn => schur_horn_checks(cfg)?,
        Suite::Patterns => pattern_checks(cfg),
        Suite::Multipliers => multiplier_checks(cfg)?,
    })
}

fn dim(rng: &mut impl Rng, cfg: &CheckConfig) -> usize {
    rng.random_range(1..=cfg.max_n.max(1))
}

fn abs_diag(a: &Matrix) -> Vec<f64> {
    spectra::diag_extract(a).iter().map(|z| z.norm()).collect()
}

fn spectra_checks(cfg: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let s = Suite::Spectra;
    let mut eq1 = Tally::new(s, "diag_submajorised_by_singular_values");
    let mut avg = Tally::new(s, "diag_average_exact");
    let mut unitary = Tally::new(s, "unitary_invariance");
    let mut quasi = Tally::new(s, "schatten_quasi_triangle");
    let mut eckart = Tally::new(s, "eckart_young");
    for case in 0..cfg.cases {
        let mut rng = random::trial_rng(cfg.seed, case as u64);
        let n = dim(&mut rng, cfg);
        let a = random::complex_gaussian(n, &mut rng);
        let mu = spectra::singular_values(&a)?;

        eq1.record(major::submajorised(&abs_diag(&a), mu.as_slice(), cfg.tol));

        let d = spectra::diag_average(&a);
        let want = spectra::diag_embed(&spectra::diag_extract(&a))?;
        avg.excess(d.max_abs_diff(&want) - 1e-12);

        let u = random::unitary(n, &mut rng);
        let v = random::unitary(n, &mut rng);
        let rotated = spectra::singular_values(&(&(&u * &a) * &v))?;
        let drift = rotated
            .as_slice()
            .iter()
            .zip(mu.as_slice())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        unitary.excess(drift - cfg.tol * mu.mu(0).max(1.0));

        let b = random::complex_gaussian(n, &mut rng);
        let p = rng.random_range(0.1..3.0);
        let norm = IdealNorm::Schatten(p);
        let (na, nb, nab) = (
            spectra::ideal_norm(&a, norm)?,
            spectra::ideal_norm(&b, norm)?,
            spectra::ideal_norm(&(&a + &b), norm)?,
        );
        let gap = if p <= 1.0 {
            nab.powf(p) - na.powf(p) - nb.powf(p)
        } else {
            nab - na - nb
        };
        quasi.excess(gap - cfg.tol * nab.max(1.0));

        // best rank-k error in operator norm is μ(k)
        let k = rng.random_range(0..n);
        let svd = a.as_dmatrix().clone().svd(true, true);
        let (uu, vt) = (svd.u.unwrap(), svd.v_t.unwrap());
        let mut approx = nalgebra::DMatrix::zeros(n, n);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
        for &i in order.iter().take(k) {
            approx += uu.column(i) * vt.row(i) * spectra::C64::new(svd.singular_values[i], 0.0);
        }
        let residual = Matrix::new(a.as_dmatrix() - approx)?;
        let err = spectra::ideal_norm(&residual, IdealNorm::operator())?;
        eckart.excess((err - mu.mu(k)).abs() - cfg.tol * mu.mu(0).max(1.0));
    }
    Ok(vec![eq1.finish(), avg.finish(), unitary.finish(), quasi.finish(), eckart.finish()])
}

fn major_checks(cfg: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let s = Suite::Major;
    let mut kyfan = Tally::new(s, "ky_fan_matrix_inequality");
    let mut inter = Tally::new(s, "intermediate_postconditions");
    let mut dist = Tally::new(s, "distortion_growth");
    let mut trans = Tally::new(s, "transitivity");
    for case in 0..cfg.cases {
        let mut rng = random::trial_rng(cfg.seed, case as u64);
        let n = dim(&mut rng, cfg);
        let a = random::complex_gaussian(n, &mut rng);
        let b = random::complex_gaussian(n, &mut rng);
        let sum = spectra::singular_values(&(&a + &b))?;
        let sa = spectra::singular_values(&a)?;
        let sb = spectra::singular_values(&b)?;
        let bound: Vec<f64> = sa.as_slice().iter().zip(sb.as_slice()).map(|(x, y)| x + y).collect();
        kyfan.record(major::submajorised(sum.as_slice(), &bound, cfg.tol));

        let (y, x) = random::submajorised_pair(n, &mut rng);
        let (y, x) = (RealSeq::new(y)?, RealSeq::new(x)?);
        let ok = match major::intermediate(&y, &x) {
            Ok(xp) => {
                let xs = x.rearranged();
                major::is_majorised(&y, &xp)
                    && xp.values().iter().zip(&xs).all(|(a, b)| *a >= 0.0 && *a <= *b)
            }
            Err(_) => false,
        };
        inter.record(ok);

        let bseq = RealSeq::new(random::nonnegative_vector(n, &mut rng))?;
        let p = rng.random_range(0.1..3.0);
        let norm = IdealNorm::Schatten(p);
        let d1 = major::distortion(&bseq, norm, n)?;
        let d2 = major::distortion(&bseq, norm, 2 * n)?;
        let own = norm.evaluate(bseq.values())?;
        let shape_ok = if p < 1.0 { d2 >= d1 } else { (d2 - d1).abs() <= cfg.tol * d1.max(1.0) };
        dist.record(shape_ok && d1 >= own * (1.0 - cfg.tol));

        let z = random::nonnegative_vector(n, &mut rng);
        let yv = random::t_transforms(&z, 2 * n, &mut rng);
        let xv = random::t_transforms(&yv, 2 * n, &mut rng);
        trans.record(
            major::submajorised(&xv, &yv, cfg.tol)
                && major::submajorised(&yv, &z, cfg.tol)
                && major::submajorised(&xv, &z, cfg.tol),
        );
    }
    Ok(vec![kyfan.finish(), inter.finish(), dist.finish(), trans.finish()])
}

fn schur_horn_checks(cfg: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let s = Suite::SchurHorn;
    let mut round = Tally::new(s, "schur_horn_round_trip");
    let mut count = Tally::new(s, "rotation_count");
    let mut kw = Tally::new(s, "kaftal_weiss_witness");
    for case in 0..cfg.cases {
        let mut rng = random::trial_rng(cfg.seed, case as u64);
        let n = dim(&mut rng, cfg);
        let (d, lam) = random::majorised_pair(n, &mut rng);
        let pair = SpectrumDiagonalPair::new(RealSeq::new(d.clone())?, RealSeq::new(lam.clone())?)?;
        let built = schur_horn::schur_horn_rotations(&pair)?;
        let h = &built.matrix;
        let scale = lam.iter().copied().fold(1.0, f64::max);
        let mut lam_sorted = lam.clone();
        lam_sorted.sort_by(f64::total_cmp);
        let eig_err = h
            .hermitian_eigenvalues()
            .iter()
            .zip(&lam_sorted)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let diag_err = spectra::diag_extract(h)
            .iter()
            .zip(&d)
            .map(|(z, t)| (z - t).norm())
            .fold(0.0, f64::max);
        round.excess(eig_err.max(diag_err) - 1e-8 * scale);
        count.record(built.rotations.len() == n - 1);

        let (y, x) = random::submajorised_pair(n, &mut rng);
        let (y, x) = (RealSeq::new(y)?, RealSeq::new(x)?);
        let v = schur_horn::kaftal_weiss_witness(&y, &x, n)?;
        let rep = schur_horn::verify_witness(&v, &y, &x)?;
        let excess = rep
            .diag_error
            .max(rep.spectrum_excess)
            .max(-rep.min_eigenvalue);
        kw.excess(excess - 1e-8 * scale);
    }
    Ok(vec![round.finish(), count.finish(), kw.finish()])
}

/// Exhaustive search over all `2^|P|` assignments for patterns of at most
/// 16 cells. Returns the set of budget pairs `(r, c)`, `r, c ≤ max_budget`,
/// for which some assignment fits.
pub fn brute_force_feasible(pattern: &Pattern, max_budget: usize) -> Vec<Vec<bool>> {
    let cells: Vec<_> = pattern.cells().collect();
    assert!(cells.len() <= 20, "brute force is exponential in the cell count");
    let n = pattern.n();
    let m = max_budget + 1;
    // best_c[r]: smallest max column load over assignments with max row load r
    let mut best_c = vec![usize::MAX; cells.len() + 1];
    let mut rows = vec![0usize; n];
    let mut cols = vec![0usize; n];
    for mask in 0u32..(1u32 << cells.len()) {
        rows.iter_mut().for_each(|x| *x = 0);
        cols.iter_mut().for_each(|x| *x = 0);
        for (b, &(r, c)) in cells.iter().enumerate() {
            if mask >> b & 1 == 1 {
                cols[c] += 1;
            } else {
                rows[r] += 1;
            }
        }
        let rmax = rows.iter().copied().max().unwrap_or(0);
        let cmax = cols.iter().copied().max().unwrap_or(0);
        best_c[rmax] = best_c[rmax].min(cmax);
    }
    let mut out = vec![vec![false; m]; m];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = best_c.iter().take(r + 1).any(|&bc| bc <= c);
        }
    }
    out
}

/// Minimum line cover by trying every set of rows and covering the rest by
/// columns.
pub fn brute_force_cover(pattern: &Pattern) -> usize {
    let n = pattern.n();
    assert!(n <= 20);
    let cells: Vec<_> = pattern.cells().collect();
    (0u32..(1 << n))
        .map(|rows| {
            let mut cols = 0u32;
            for &(r, c) in &cells {
                if rows >> r & 1 == 0 {
                    cols |= 1 << c;
                }
            }
            (rows.count_ones() + cols.count_ones()) as usize
        })
        .min()
        .unwrap_or(0)
}

/// Longest chain by checking every subset of cells.
pub fn brute_force_chain(pattern: &Pattern) -> usize {
    let cells: Vec<_> = pattern.cells().collect();
    assert!(cells.len() <= 20);
    let mut best = 0;
    for mask in 0u32..(1u32 << cells.len()) {
        let chosen: Vec<_> = (0..cells.len()).filter(|b| mask >> b & 1 == 1).map(|b| cells[b]).collect();
        // cells come sorted by (row, col), so a chain must be increasing in list order
        if chosen.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1) {
            best = best.max(chosen.len());
        }
    }
    best
}

fn pattern_checks(cfg: &CheckConfig) -> Vec<CheckOutcome> {
    let s = Suite::Patterns;
    let mut dd = Tally::new(s, "dd_decompose_vs_exhaustive");
    let mut cover = Tally::new(s, "minimal_cover_vs_brute_force");
    let mut chain = Tally::new(s, "monotone_diagonal_vs_brute_force");
    let mut toeplitz = Tally::new(s, "toeplitz_contains_diagonal");
    for case in 0..cfg.cases {
        let mut rng = random::trial_rng(cfg.seed, case as u64);
        let mut mask = 0u64;
        while mask.count_ones() < 12 && rng.random::<f64>() < 0.9 {
            mask |= 1 << rng.random_range(0..16);
        }
        let p = Pattern::from_mask(4, mask);
        let brute = brute_force_feasible(&p, 2);
        let mut agree = true;
        for (r, row) in brute.iter().enumerate() {
            for (c, &want) in row.iter().enumerate() {
                let got = patterns::dd_decompose(&p, r, c);
                agree &= got.is_some() == want && got.is_none_or(|d| d.is_valid_for(&p));
            }
        }
        dd.record(agree);

        let density = rng.random_range(0.0..0.6);
        let q = Pattern::random(5, density, rng.random()).expect("density in range");
        let lines = patterns::minimal_cover(&q);
        cover.record(lines.covers(&q) && lines.len() == brute_force_cover(&q));

        let mut mask = 0u64;
        while mask.count_ones() < 15 && rng.random::<f64>() < 0.93 {
            mask |= 1 << rng.random_range(0..64);
        }
        let r = Pattern::from_mask(8, mask);
        let found = patterns::extract_monotone_diagonal(&r);
        let valid = found.iter().all(|&c| r.contains(c))
            && found.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        chain.record(valid && found.len() == brute_force_chain(&r));

        let n = rng.random_range(1..=16usize);
        let d = rng.random_range(-(n as i64 - 1)..=(n as i64 - 1));
        let t = Pattern::toeplitz(&[d], n);
        toeplitz.record(patterns::extract_monotone_diagonal(&t).len() == n - d.unsigned_abs() as usize);
    }
    vec![dd.finish(), cover.finish(), chain.finish(), toeplitz.finish()]
}

fn multiplier_checks(cfg: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    let s = Suite::Multipliers;
    let mut c2 = Tally::new(s, "hilbert_schmidt_contraction");
    let mut avg = Tally::new(s, "diagonal_symbol_is_averaging");
    let mut eq1 = Tally::new(s, "diagonal_symbol_submajorised");
    let mut blow = Tally::new(s, "diagonal_blowup_closed_form");
    for case in 0..cfg.cases {
        let mut rng = random::trial_rng(cfg.seed, case as u64);
        let n = dim(&mut rng, cfg);
        let a = random::complex_gaussian(n, &mut rng);
        let support = Pattern::random(n, rng.random(), rng.random())?;
        let m = MultiplierSymbol::random_signs(&support, &mut rng);
        let ratio = multipliers::multiplier_ratio(&m, &a, IdealNorm::Schatten(2.0))?;
        c2.excess(ratio - 1.0 - cfg.tol);

        let diag = MultiplierSymbol::random_signs(&Pattern::diagonal(n), &mut rng);
        let ind = MultiplierSymbol::indicator(&Pattern::diagonal(n));
        let out = multipliers::apply(&ind, &a)?;
        avg.excess(out.max_abs_diff(&spectra::diag_average(&a)) - 1e-12);
        let signed = multipliers::apply(&diag, &a)?;
        eq1.record(major::submajorised(
            spectra::singular_values(&signed)?.as_slice(),
            spectra::singular_values(&a)?.as_slice(),
            cfg.tol,
        ));
    }
    let sizes = [1usize, 2, 3, 5, 8, 13, 21, 34, 64];
    for p in [1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0] {
        let rep = multipliers::diagonal_blowup(p, &sizes)?;
        for (&n, &r) in sizes.iter().zip(&rep.ratios) {
            let want = (n as f64).powf(1.0 / p - 1.0);
            blow.excess((r - want).abs() / want - 1e-8);
        }
    }
    Ok(vec![c2.finish(), avg.finish(), eq1.finish(), blow.finish()])
}
