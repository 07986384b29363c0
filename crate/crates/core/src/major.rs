//! Hardy–Littlewood–Pólya majorisation on finite nonnegative sequences.
//!
//! Sequences of different lengths are compared after zero-padding, and every
//! predicate works on nonincreasing rearrangements. Comparisons are one-sided:
//! a partial sum may exceed its bound by at most `tolerance * max(1, total)`,
//! where `total` is the sum of the dominating sequence.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{IdealNorm, SingularValues};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Finite nonnegative sequence with a comparison slack.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RealSeq {
    values: Vec<f64>,
    #[serde(skip)]
    tolerance: f64,
}

impl RealSeq {
    /// Entries in `[-DEFAULT_TOLERANCE, 0)` are clamped to zero; anything
    /// more negative is rejected.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        RealSeq::with_tolerance(values, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(mut values: Vec<f64>, tolerance: f64) -> Result<Self> {
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(Error::param(format!("tolerance must be finite and >= 0, got {tolerance}")));
        }
        for v in &mut values {
            if !v.is_finite() {
                return Err(Error::input("sequence entries must be finite"));
            }
            if *v < -tolerance {
                return Err(Error::input(format!("negative entry {v} in a nonnegative sequence")));
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        Ok(RealSeq { values, tolerance })
    }

    /// Parses an inline comma-separated list such as `0.5,0.5` or `1/3,2/3`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(crate::spectra::parse_exponent)
            .collect::<Result<Vec<f64>>>()
            .map_err(|_| Error::input(format!("bad number list {s:?}")))?;
        RealSeq::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc + v)
    }

    /// Nonincreasing rearrangement.
    pub fn rearranged(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn padded(&self, n: usize) -> RealSeq {
        let mut values = self.values.clone();
        if values.len() < n {
            values.resize(n, 0.0);
        }
        RealSeq {
            values,
            tolerance: self.tolerance,
        }
    }
}

impl<'de> Deserialize<'de> for RealSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<f64>::deserialize(deserializer)?;
        RealSeq::new(values).map_err(serde::de::Error::custom)
    }
}

impl From<SingularValues> for RealSeq {
    fn from(s: SingularValues) -> Self {
        RealSeq {
            values: s.into_vec(),
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl From<&SingularValues> for RealSeq {
    fn from(s: &SingularValues) -> Self {
        RealSeq::from(s.clone())
    }
}

/// Sum of the `k` largest entries (the total when `k` exceeds the length).
pub fn ky_fan_sum(x: &RealSeq, k: usize) -> f64 {
    x.rearranged().iter().take(k).fold(0.0, |acc, v| acc + v)
}

fn prefix_sums(mut v: Vec<f64>, len: usize) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v.resize(len, 0.0);
    v.iter()
        .scan(0.0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// First prefix length `k` (1-based) at which `Σ_{i<k} x↓_i` exceeds
/// `Σ_{i<k} y↓_i` by more than the slack, or `None` when `x ≺≺ y`.
pub fn first_violation(x: &[f64], y: &[f64], tol: f64) -> Option<usize> {
    let len = x.len().max(y.len());
    let px = prefix_sums(x.to_vec(), len);
    let py = prefix_sums(y.to_vec(), len);
    let slack = tol * py.last().copied().unwrap_or(0.0).max(1.0);
    px.iter().zip(&py).position(|(a, b)| *a > b + slack).map(|k| k + 1)
}

/// `x ≺≺ y` on raw slices.
pub fn submajorised(x: &[f64], y: &[f64], tol: f64) -> bool {
    first_violation(x, y, tol).is_none()
}

/// `x ≺ y` on raw slices.
pub fn majorised(x: &[f64], y: &[f64], tol: f64) -> bool {
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    submajorised(x, y, tol) && (sx - sy).abs() <= tol * sy.max(1.0)
}

fn pair_tolerance(x: &RealSeq, y: &RealSeq) -> f64 {
    x.tolerance.max(y.tolerance)
}

pub fn is_submajorised(x: &RealSeq, y: &RealSeq) -> bool {
    submajorised(&x.values, &y.values, pair_tolerance(x, y))
}

pub fn is_majorised(x: &RealSeq, y: &RealSeq) -> bool {
    majorised(&x.values, &y.values, pair_tolerance(x, y))
}

/// Given `y ≺≺ x`, returns `x'` with `0 ≤ x' ≤ x↓` entrywise and `y ≺ x'`.
///
/// The candidate drains mass from the tail of `x↓` until the totals agree.
/// It is checked against all three postconditions before being returned; if
/// the check fails, `y↓` itself (when it fits under `x↓`) and a
/// compensated-summation rerun of the drain are tried in turn.
pub fn intermediate(y: &RealSeq, x: &RealSeq) -> Result<RealSeq> {
    let tol = pair_tolerance(y, x);
    if let Some(prefix) = first_violation(&y.values, &x.values, tol) {
        return Err(Error::Infeasible { prefix });
    }
    let len = x.len().max(y.len());
    let mut xs = x.rearranged();
    xs.resize(len, 0.0);
    let mut ys = y.rearranged();
    ys.resize(len, 0.0);
    let target = y.sum();

    let accept = |cand: &[f64]| {
        cand.iter().zip(&xs).all(|(c, u)| *c >= 0.0 && *c <= *u)
            && cand.windows(2).all(|w| w[0] >= w[1])
            && majorised(&ys, cand, tol)
    };

    let greedy = drain_tail(&xs, target, false);
    if accept(&greedy) {
        return RealSeq::with_tolerance(greedy, tol);
    }
    if ys.iter().zip(&xs).all(|(a, b)| a <= b) {
        return RealSeq::with_tolerance(ys, tol);
    }
    let compensated = drain_tail(&xs, target, true);
    if accept(&compensated) {
        return RealSeq::with_tolerance(compensated, tol);
    }
    Err(Error::Internal(format!(
        "no intermediate sequence passed verification for y = {:?}, x = {:?}",
        y.values, x.values
    )))
}

fn drain_tail(xs: &[f64], target: f64, compensated: bool) -> Vec<f64> {
    let total = if compensated {
        kahan_sum(xs)
    } else {
        xs.iter().sum()
    };
    let mut out = xs.to_vec();
    let mut excess = total - target;
    for v in out.iter_mut().rev() {
        if excess <= 0.0 {
            break;
        }
        let take = v.min(excess);
        *v -= take;
        excess -= take;
    }
    out
}

fn kahan_sum(xs: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for &x in xs {
        let y = x - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `sup { N(a) : a ∈ R^n_{≥0}, a ≺≺ b }`, the n-dimensional truncation of
/// the smallest fully symmetric renorming of `N` evaluated at `b`.
///
/// For fully symmetric norms the supremum is `N(b)`: every feasible `a` has
/// `N(a) ≤ N(b)`. For Schatten `p < 1`, `a ↦ Σ a_i^p` is Schur-concave, so
/// on the polytope `{a ≺≺ b}` it is maximised by the flattest admissible
/// point, the constant vector `‖b‖₁/n`. That vector is feasible because the
/// prefix averages of a nonincreasing sequence dominate its global average.
pub fn distortion(b: &RealSeq, norm: IdealNorm, n: usize) -> Result<f64> {
    norm.validate()?;
    if n < b.len() {
        return Err(Error::param(format!(
            "dimension {n} is smaller than the sequence length {}",
            b.len()
        )));
    }
    match norm {
        IdealNorm::Schatten(p) if p < 1.0 => {
            if n == 0 {
                return Ok(0.0);
            }
            Ok(b.sum() * (n as f64).powf(1.0 / p - 1.0))
        }
        IdealNorm::KyFan(k) => Ok(ky_fan_sum(b, k)),
        IdealNorm::Schatten(_) => norm.evaluate(b.values()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[f64]) -> RealSeq {
        RealSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction_clamps_small_negatives() {
        assert_eq!(seq(&[1.0, -1e-12]).values(), &[1.0, 0.0]);
        assert!(RealSeq::new(vec![1.0, -0.1]).is_err());
        assert!(RealSeq::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn parses_inline_lists() {
        assert_eq!(RealSeq::parse_list("0.5, 0.5").unwrap().values(), &[0.5, 0.5]);
        assert_eq!(RealSeq::parse_list("1/4,3/4").unwrap().values(), &[0.25, 0.75]);
        assert!(RealSeq::parse_list("1,x").is_err());
    }

    #[test]
    fn ky_fan_examples() {
        assert_eq!(ky_fan_sum(&seq(&[3.0, 1.0, 2.0]), 2), 5.0);
        assert_eq!(ky_fan_sum(&seq(&[3.0, 1.0, 2.0]), 0), 0.0);
        assert_eq!(ky_fan_sum(&seq(&[3.0, 1.0, 2.0]), 10), 6.0);
    }

    #[test]
    fn submajorisation_examples() {
        assert!(is_submajorised(&seq(&[0.5, 0.5]), &seq(&[1.0, 0.0])));
        assert!(!is_submajorised(&seq(&[1.0, 0.0]), &seq(&[0.5, 0.5])));
        assert_eq!(first_violation(&[1.0, 0.0], &[0.5, 0.5], 1e-10), Some(1));
        // zero padding
        assert!(is_submajorised(&seq(&[0.25; 4]), &seq(&[1.0])));
    }

    #[test]
    fn majorisation_examples() {
        assert!(is_majorised(&seq(&[0.5, 0.5]), &seq(&[1.0, 0.0])));
        assert!(!is_majorised(&seq(&[0.4, 0.4]), &seq(&[1.0, 0.0])));
    }

    #[test]
    fn tolerance_absorbs_rounding_only() {
        let noisy = seq(&[0.5 + 1e-13, 0.5]);
        assert!(is_majorised(&noisy, &seq(&[1.0, 0.0])));
        let off = seq(&[0.5 + 1e-6, 0.5]);
        assert!(!is_majorised(&off, &seq(&[1.0, 0.0])));
    }

    #[test]
    fn intermediate_examples() {
        let out = intermediate(&seq(&[0.5, 0.5]), &seq(&[1.0, 0.0])).unwrap();
        assert_eq!(out.values(), &[1.0, 0.0]);
        let out = intermediate(&seq(&[0.6, 0.3]), &seq(&[1.0, 0.0])).unwrap();
        assert!((out.values()[0] - 0.9).abs() < 1e-15);
        assert_eq!(out.values()[1], 0.0);
    }

    #[test]
    fn intermediate_rejects_infeasible_pairs() {
        let err = intermediate(&seq(&[1.0, 0.0]), &seq(&[0.5, 0.5])).unwrap_err();
        assert!(matches!(err, Error::Infeasible { prefix: 1 }));
    }

    #[test]
    fn intermediate_pads_to_the_longer_sequence() {
        let out = intermediate(&seq(&[0.1, 0.1, 0.1]), &seq(&[1.0])).unwrap();
        assert_eq!(out.len(), 3);
        assert!((out.sum() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn distortion_closed_forms() {
        let e1 = seq(&[1.0, 0.0, 0.0, 0.0]);
        let half = IdealNorm::Schatten(0.5);
        assert!((distortion(&e1, half, 4).unwrap() - 4.0).abs() < 1e-12);
        let b = seq(&[2.0, 1.0]);
        assert!((distortion(&b, IdealNorm::Schatten(2.0), 2).unwrap() - 5f64.sqrt()).abs() < 1e-12);
        assert!((distortion(&b, IdealNorm::trace(), 17).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(distortion(&b, IdealNorm::operator(), 5).unwrap(), 2.0);
        assert_eq!(distortion(&b, IdealNorm::KyFan(1), 5).unwrap(), 2.0);
        assert!(distortion(&b, half, 1).is_err());
        assert!(distortion(&b, IdealNorm::Schatten(0.0), 2).is_err());
    }
}
