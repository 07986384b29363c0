//! Dense spectral primitives: the [`Matrix`] operand, singular values,
//! Schatten and Ky Fan norms, diagonal extraction and the discrete
//! diagonal-averaging identity.
//!
//! Everything here is a pure function of its inputs.

use std::fmt;
use std::io::Read;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen, SVD};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use nalgebra::Complex;

/// Complex double-precision scalar.
pub type C64 = Complex<f64>;

/// Singular values below `ZERO_CLAMP * values[0]` are set to exactly zero.
pub const ZERO_CLAMP: f64 = 1e-12;

/// Default cap on the dimension accepted by the dense routines.
pub const DEFAULT_MAX_DIM: usize = 1024;

/// Dense square complex matrix with finite entries.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    data: DMatrix<C64>,
}

impl Matrix {
    pub fn new(data: DMatrix<C64>) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::input(format!(
                "matrix must be square, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        if data.nrows() == 0 {
            return Err(Error::input("matrix dimension must be positive"));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::input("matrix has non-finite entries"));
        }
        Ok(Matrix { data })
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::input(format!(
                "row {bad} has length {}, expected {n}",
                rows[bad].len()
            )));
        }
        Matrix::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Matrix::from_rows(&rows)
    }

    /// Builds a matrix from separate real and imaginary parts.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let n = re.len();
        if im.len() != n || re.iter().chain(im).any(|r| r.len() != n) {
            return Err(Error::input("real and imaginary parts must both be n x n"));
        }
        Matrix::new(DMatrix::from_fn(n, n, |i, j| C64::new(re[i][j], im[i][j])))
    }

    pub fn from_real(data: &DMatrix<f64>) -> Result<Self> {
        Matrix::new(data.map(|x| C64::new(x, 0.0)))
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            data: DMatrix::identity(n, n),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Matrix {
            data: DMatrix::zeros(n, n),
        }
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        Matrix {
            data: DMatrix::from_element(n, n, C64::new(1.0, 0.0)),
        }
    }

    pub fn from_diagonal(values: &[C64]) -> Result<Self> {
        let n = values.len();
        Matrix::new(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                values[i]
            } else {
                C64::new(0.0, 0.0)
            }
        }))
    }

    pub fn from_real_diagonal(values: &[f64]) -> Result<Self> {
        let values: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Matrix::from_diagonal(&values)
    }

    pub fn n(&self) -> usize {
        self.data.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[(i, j)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.data
    }

    pub fn into_dmatrix(self) -> DMatrix<C64> {
        self.data
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix {
            data: self.data.adjoint(),
        }
    }

    pub fn scale(&self, factor: f64) -> Matrix {
        Matrix {
            data: self.data.map(|z| z * factor),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.n(), other.n(), "dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest modulus among the off-diagonal entries.
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.n();
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for i in 0..n {
                if i != j {
                    worst = worst.max(self.data[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.n();
        (0..n).all(|i| (i..n).all(|j| (self.data[(i, j)] - self.data[(j, i)].conj()).norm() <= tol))
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.data + self.data.adjoint()) * C64::new(0.5, 0.0);
        let mut eig: Vec<f64> = SymmetricEigen::new(herm).eigenvalues.iter().copied().collect();
        eig.sort_by(f64::total_cmp);
        eig
    }

    pub fn is_positive_semidefinite(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && self.hermitian_eigenvalues().first().is_none_or(|&l| l >= -tol)
    }

    /// `U A U*`.
    pub fn conjugate_by(&self, u: &Matrix) -> Matrix {
        Matrix {
            data: &u.data * &self.data * u.data.adjoint(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix {
            data: &self.data + &rhs.data,
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix {
            data: &self.data - &rhs.data,
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix {
            data: &self.data * &rhs.data,
        }
    }
}

/// Singular values `μ(0) ≥ μ(1) ≥ … ≥ 0`, one per row of the source matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SingularValues(Vec<f64>);

impl SingularValues {
    /// Wraps an arbitrary nonnegative sequence, sorting it nonincreasing.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::input("singular values must be finite and nonnegative"));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(SingularValues(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ(k)`; zero past the end.
    pub fn mu(&self, k: usize) -> f64 {
        self.0.get(k).copied().unwrap_or(0.0)
    }

    /// Number of nonzero singular values after clamping.
    pub fn rank(&self) -> usize {
        self.0.iter().take_while(|&&v| v > 0.0).count()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SvdOptions {
    pub max_dim: usize,
    /// Relative threshold below which singular values become exact zeros.
    pub zero_clamp: f64,
}

impl Default for SvdOptions {
    fn default() -> Self {
        SvdOptions {
            max_dim: DEFAULT_MAX_DIM,
            zero_clamp: ZERO_CLAMP,
        }
    }
}

pub fn singular_values(a: &Matrix) -> Result<SingularValues> {
    singular_values_with(a, SvdOptions::default())
}

pub fn singular_values_with(a: &Matrix, opts: SvdOptions) -> Result<SingularValues> {
    if a.n() > opts.max_dim {
        return Err(Error::input(format!(
            "dimension {} exceeds the configured cap {}",
            a.n(),
            opts.max_dim
        )));
    }
    let svd = SVD::try_new(a.data.clone(), false, false, f64::EPSILON, 0)
        .ok_or_else(|| Error::Internal("SVD did not converge".into()))?;
    let mut values: Vec<f64> = svd.singular_values.iter().map(|v| v.abs()).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    let cutoff = values.first().copied().unwrap_or(0.0) * opts.zero_clamp;
    for v in &mut values {
        if *v <= cutoff {
            *v = 0.0;
        }
    }
    Ok(SingularValues(values))
}

/// A symmetric (quasi-)norm, evaluated on singular values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IdealNorm {
    /// `(Σ μ_k^p)^{1/p}`; `p = ∞` is the operator norm.
    Schatten(f64),
    /// Sum of the `k` largest singular values.
    KyFan(usize),
}

impl IdealNorm {
    pub fn schatten(p: f64) -> Result<Self> {
        let norm = IdealNorm::Schatten(p);
        norm.validate()?;
        Ok(norm)
    }

    pub fn operator() -> Self {
        IdealNorm::Schatten(f64::INFINITY)
    }

    pub fn trace() -> Self {
        IdealNorm::Schatten(1.0)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            IdealNorm::Schatten(p) if p.is_nan() || p <= 0.0 => {
                Err(Error::param(format!("Schatten exponent must be positive, got {p}")))
            }
            IdealNorm::KyFan(0) => Err(Error::param("Ky Fan index must be at least 1")),
            _ => Ok(()),
        }
    }

    /// True for the norms under which submajorisation implies norm domination.
    pub fn is_fully_symmetric(&self) -> bool {
        match *self {
            IdealNorm::Schatten(p) => p >= 1.0,
            IdealNorm::KyFan(_) => true,
        }
    }

    /// Constant `C` in `‖a + b‖ ≤ C (‖a‖ + ‖b‖)`.
    pub fn quasi_triangle_constant(&self) -> f64 {
        match *self {
            IdealNorm::Schatten(p) if p < 1.0 => 2f64.powf(1.0 / p - 1.0),
            _ => 1.0,
        }
    }

    /// Evaluates the norm on a nonnegative sequence (any order).
    pub fn evaluate(&self, values: &[f64]) -> Result<f64> {
        self.validate()?;
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::input("norm arguments must be finite and nonnegative"));
        }
        let top = values.iter().copied().fold(0.0, f64::max);
        Ok(match *self {
            IdealNorm::Schatten(p) if p.is_infinite() => top,
            IdealNorm::Schatten(_) if top == 0.0 => 0.0,
            IdealNorm::Schatten(p) => {
                // factor out the largest entry so that no power overflows
                let sum: f64 = values.iter().map(|v| (v / top).powf(p)).sum();
                top * sum.powf(1.0 / p)
            }
            IdealNorm::KyFan(k) => {
                let mut sorted = values.to_vec();
                sorted.sort_by(|a, b| b.total_cmp(a));
                sorted.iter().take(k).sum()
            }
        })
    }
}

impl fmt::Display for IdealNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IdealNorm::Schatten(p) if p.is_infinite() => write!(f, "schatten:inf"),
            IdealNorm::Schatten(p) => write!(f, "schatten:{p}"),
            IdealNorm::KyFan(k) => write!(f, "kyfan:{k}"),
        }
    }
}

impl FromStr for IdealNorm {
    type Err = Error;

    /// Accepts `schatten:P`, `schatten:inf`, `op`, `trace` and `kyfan:K`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let norm = match s.split_once(':') {
            None if s == "op" || s == "operator" => IdealNorm::operator(),
            None if s == "trace" => IdealNorm::trace(),
            Some(("schatten", p)) => {
                let p = match p {
                    "inf" | "infinity" => f64::INFINITY,
                    p => parse_exponent(p)?,
                };
                IdealNorm::Schatten(p)
            }
            Some(("kyfan", k)) => IdealNorm::KyFan(
                k.parse()
                    .map_err(|_| Error::param(format!("bad Ky Fan index {k:?}")))?,
            ),
            _ => return Err(Error::param(format!("unknown norm {s:?}"))),
        };
        norm.validate()?;
        Ok(norm)
    }
}

/// Parses `0.5` or a fraction such as `1/3`.
pub fn parse_exponent(s: &str) -> Result<f64> {
    let bad = || Error::param(format!("bad exponent {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            Ok(num / den)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

impl Serialize for IdealNorm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IdealNorm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn ideal_norm(a: &Matrix, norm: IdealNorm) -> Result<f64> {
    norm.validate()?;
    norm.evaluate(singular_values(a)?.as_slice())
}

/// `(A[0,0], …, A[n-1,n-1])`.
pub fn diag_extract(a: &Matrix) -> Vec<C64> {
    a.data.diagonal().iter().copied().collect()
}

/// Right inverse of [`diag_extract`].
pub fn diag_embed(values: &[C64]) -> Result<Matrix> {
    Matrix::from_diagonal(values)
}

/// `(1/n) Σ_k U_k A U_k*` with `U_k = diag(ω^{jk})`, `ω = exp(2πi/n)`.
///
/// Entry `(j, l)` of `U_k A U_k*` is `ω^{(j-l)k} A[j,l]`, so the average
/// multiplies each entry by the mean of the `n` phases for its residue
/// `(j - l) mod n`. Those means vanish except on the diagonal, which is what
/// makes the n-point average equal the diagonal part of `A`.
pub fn diag_average(a: &Matrix) -> Matrix {
    let n = a.n();
    let phase_mean: Vec<C64> = (0..n)
        .map(|delta| {
            let total: C64 = (0..n)
                .map(|k| {
                    // reduce the exponent first so the angle stays in [0, 2π)
                    let e = (delta * k) % n;
                    C64::from_polar(1.0, std::f64::consts::TAU * e as f64 / n as f64)
                })
                .sum();
            total / n as f64
        })
        .collect();
    let data = DMatrix::from_fn(n, n, |j, l| a.data[(j, l)] * phase_mean[(j + n - l) % n]);
    Matrix { data }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.n();
        MatrixJson {
            n,
            re: (0..n).map(|i| (0..n).map(|j| self.data[(i, j)].re).collect()).collect(),
            im: (0..n).map(|i| (0..n).map(|j| self.data[(i, j)].im).collect()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.re.len() != raw.n {
            return Err(serde::de::Error::custom(format!(
                "declared n = {} but found {} rows",
                raw.n,
                raw.re.len()
            )));
        }
        Matrix::from_parts(&raw.re, &raw.im).map_err(serde::de::Error::custom)
    }
}

impl Matrix {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialisation is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Whitespace-separated text: `n` followed by `n²` `(re, im)` pairs, row-major.
    pub fn to_text(&self) -> String {
        let n = self.n();
        let mut out = format!("{n}\n");
        for i in 0..n {
            let row: Vec<String> = (0..n)
                .map(|j| {
                    let z = self.data[(i, j)];
                    format!("{:e} {:e}", z.re, z.im)
                })
                .collect();
            out.push_str(&row.join("  "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::input("empty matrix text"))?
            .parse()
            .map_err(|_| Error::input("matrix text must start with the dimension"))?;
        let numbers = tokens
            .map(|t| t.parse::<f64>().map_err(|_| Error::input(format!("bad number {t:?}"))))
            .collect::<Result<Vec<f64>>>()?;
        if numbers.len() != 2 * n * n {
            return Err(Error::input(format!(
                "expected {} numbers for n = {n}, found {}",
                2 * n * n,
                numbers.len()
            )));
        }
        Matrix::new(DMatrix::from_fn(n, n, |i, j| {
            let k = 2 * (i * n + j);
            C64::new(numbers[k], numbers[k + 1])
        }))
    }

    /// Reads either format, deciding by the first non-blank character.
    pub fn read_any(mut reader: impl Read) -> Result<Self> {
        let mut buf = String::new();
        reader.read_to_string(&mut buf)?;
        if buf.trim_start().starts_with('{') {
            Matrix::from_json(&buf)
        } else {
            Matrix::from_text(&buf)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn rejects_non_square_and_non_finite() {
        assert!(matches!(
            Matrix::new(DMatrix::zeros(2, 3)),
            Err(Error::InvalidInput(_))
        ));
        assert!(Matrix::from_real_rows(&[vec![1.0, f64::NAN], vec![0.0, 1.0]]).is_err());
        assert!(Matrix::from_real_rows(&[vec![1.0, 2.0], vec![0.0]]).is_err());
    }

    #[test]
    fn projection_has_single_unit_singular_value() {
        let j3 = Matrix::ones(3).scale(1.0 / 3.0);
        let s = singular_values(&j3).unwrap();
        assert!((s.mu(0) - 1.0).abs() < 1e-14);
        assert_eq!(&s.as_slice()[1..], &[0.0, 0.0]);
    }

    #[test]
    fn diagonal_singular_values_are_sorted_moduli() {
        let a = Matrix::from_real_diagonal(&[3.0, 1.0, 2.0]).unwrap();
        let s = singular_values(&a).unwrap();
        for (got, want) in s.as_slice().iter().zip([3.0, 2.0, 1.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let opts = SvdOptions {
            max_dim: 2,
            ..SvdOptions::default()
        };
        assert!(singular_values_with(&Matrix::identity(3), opts).is_err());
    }

    #[test]
    fn schatten_examples() {
        let half = IdealNorm::schatten(0.5).unwrap();
        assert!((ideal_norm(&Matrix::identity(2), half).unwrap() - 4.0).abs() < 1e-12);
        let quarter = Matrix::from_real_diagonal(&[0.25; 4]).unwrap();
        assert!((ideal_norm(&quarter, half).unwrap() - 4.0).abs() < 1e-12);
        for n in [2, 5, 9] {
            let proj = Matrix::ones(n).scale(1.0 / n as f64);
            for p in [0.3, 0.5, 1.0, 2.0, f64::INFINITY] {
                let v = ideal_norm(&proj, IdealNorm::Schatten(p)).unwrap();
                assert!((v - 1.0).abs() < 1e-12, "n={n} p={p} -> {v}");
            }
        }
    }

    #[test]
    fn invalid_exponents_are_rejected() {
        assert!(matches!(IdealNorm::schatten(0.0), Err(Error::InvalidParameter(_))));
        assert!(ideal_norm(&Matrix::identity(2), IdealNorm::Schatten(-1.0)).is_err());
        assert!(ideal_norm(&Matrix::identity(2), IdealNorm::KyFan(0)).is_err());
    }

    #[test]
    fn schatten_accumulation_does_not_overflow() {
        let big = Matrix::from_real_diagonal(&[1e200, 1e200]).unwrap();
        let v = ideal_norm(&big, IdealNorm::Schatten(0.5)).unwrap();
        assert!((v / 4e200 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ky_fan_norm() {
        let a = Matrix::from_real_diagonal(&[3.0, 1.0, 2.0]).unwrap();
        assert!((ideal_norm(&a, IdealNorm::KyFan(2)).unwrap() - 5.0).abs() < 1e-12);
        assert!((ideal_norm(&a, IdealNorm::KyFan(7)).unwrap() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn norm_parsing_round_trips() {
        for s in ["schatten:0.5", "schatten:inf", "kyfan:3", "schatten:2"] {
            let norm: IdealNorm = s.parse().unwrap();
            assert_eq!(norm.to_string(), s);
        }
        assert_eq!("schatten:1/2".parse::<IdealNorm>().unwrap(), IdealNorm::Schatten(0.5));
        assert_eq!("op".parse::<IdealNorm>().unwrap(), IdealNorm::operator());
        assert!("schatten:0".parse::<IdealNorm>().is_err());
        assert!("frobenius".parse::<IdealNorm>().is_err());
    }

    #[test]
    fn diag_extract_and_embed() {
        let a = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(diag_extract(&a), vec![c(1.0), c(4.0)]);
        let v = vec![C64::new(1.0, -2.0), c(0.5)];
        assert_eq!(diag_extract(&diag_embed(&v).unwrap()), v);
    }

    #[test]
    fn diag_average_two_by_two() {
        let a = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let avg = diag_average(&a);
        let want = Matrix::from_real_diagonal(&[1.0, 4.0]).unwrap();
        assert!(avg.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn diag_average_fixes_diagonal_matrices() {
        let d = Matrix::from_diagonal(&[c(2.0), C64::new(0.0, 1.0), c(-3.0)]).unwrap();
        assert!(diag_average(&d).max_abs_diff(&d) < 1e-15);
    }

    #[test]
    fn psd_and_hermitian_predicates() {
        let proj = Matrix::ones(3).scale(1.0 / 3.0);
        assert!(proj.is_hermitian(1e-12));
        assert!(proj.is_positive_semidefinite(1e-12));
        let flip = Matrix::from_real_diagonal(&[1.0, -1.0]).unwrap();
        assert!(!flip.is_positive_semidefinite(1e-12));
        let skew = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        assert!(!skew.is_hermitian(1e-12));
    }

    #[test]
    fn json_and_text_formats() {
        let a = Matrix::from_rows(&[
            vec![C64::new(1.0, 0.5), c(2.0)],
            vec![c(-3.0), C64::new(0.0, 4.25)],
        ])
        .unwrap();
        let json = a.to_json();
        assert!(json.starts_with("{\"n\":2,\"re\":"));
        assert_eq!(Matrix::from_json(&json).unwrap(), a);
        assert_eq!(Matrix::from_text(&a.to_text()).unwrap(), a);
        assert_eq!(Matrix::read_any(a.to_text().as_bytes()).unwrap(), a);
        assert_eq!(Matrix::read_any(json.as_bytes()).unwrap(), a);
        assert!(Matrix::from_text("2 1 0 0 0").is_err());
        assert!(Matrix::from_json(r#"{"n":3,"re":[[1]],"im":[[0]]}"#).is_err());
    }
}
