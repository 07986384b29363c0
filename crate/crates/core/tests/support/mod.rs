//! Reference implementations used as test oracles. None of these call into
//! the library's numerical or combinatorial code; they are deliberately
//! naive so that agreement means something.

#![allow(dead_code)]

use schurpat::{Matrix, C64};

/// Eigenvalues of a real symmetric matrix (row-major, `n*n`) by cyclic
/// Jacobi rotations, ascending.
pub fn jacobi_symmetric(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    let idx = |i: usize, j: usize| i * n + j;
    let frob: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[idx(i, j)] * a[idx(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * frob.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigenvalues of a Hermitian matrix, ascending. Real inputs go straight to
/// Jacobi; complex ones through the real `2n × 2n` embedding
/// `[[Re, -Im], [Im, Re]]`, whose spectrum is the original one doubled.
pub fn hermitian_eigenvalues(m: &Matrix) -> Vec<f64> {
    let n = m.n();
    let real = (0..n).all(|i| (0..n).all(|j| m.get(i, j).im == 0.0));
    if real {
        let a = (0..n * n).map(|k| m.get(k / n, k % n).re).collect();
        return jacobi_symmetric(a, n);
    }
    let big = 2 * n;
    let mut a = vec![0.0; big * big];
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            a[i * big + j] = z.re;
            a[(i + n) * big + j + n] = z.re;
            a[i * big + j + n] = -z.im;
            a[(i + n) * big + j] = z.im;
        }
    }
    jacobi_symmetric(a, big).into_iter().step_by(2).collect()
}

/// Singular values as square roots of the eigenvalues of `A* A`,
/// nonincreasing.
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    let n = m.n();
    let mut gram = vec![vec![C64::new(0.0, 0.0); n]; n];
    for (i, row) in gram.iter_mut().enumerate() {
        for (j, g) in row.iter_mut().enumerate() {
            *g = (0..n).map(|k| m.get(k, i).conj() * m.get(k, j)).sum();
        }
    }
    let g = Matrix::from_rows(&gram).unwrap();
    let mut sv: Vec<f64> = hermitian_eigenvalues(&g).into_iter().map(|e| e.max(0.0).sqrt()).collect();
    sv.reverse();
    sv
}

fn sorted_desc(x: &[f64], len: usize) -> Vec<f64> {
    let mut v = x.to_vec();
    v.resize(len.max(x.len()), 0.0);
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Largest amount by which a prefix sum of `x` exceeds that of `y`
/// (both rearranged, zero-padded); `<= 0` means `x ≺≺ y` exactly.
pub fn submajorisation_excess(x: &[f64], y: &[f64]) -> f64 {
    let len = x.len().max(y.len());
    let (xs, ys) = (sorted_desc(x, len), sorted_desc(y, len));
    let mut worst = f64::NEG_INFINITY;
    let (mut sx, mut sy) = (0.0, 0.0);
    for k in 0..len {
        sx += xs[k];
        sy += ys[k];
        worst = worst.max(sx - sy);
    }
    worst
}

/// Schatten quasi-norm by the defining formula.
pub fn schatten(values: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return values.iter().copied().fold(0.0, f64::max);
    }
    values.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Frobenius norm straight from the entries.
pub fn frobenius(m: &Matrix) -> f64 {
    let n = m.n();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| m.get(i, j).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Sup of `schatten(a, p)` over nonincreasing `a ≥ 0` on the grid
/// `(1/steps) Z^n` with `a ≺≺ b`, by exhaustive enumeration.
pub fn grid_distortion(b: &[f64], p: f64, n: usize, steps: usize) -> f64 {
    let bs = sorted_desc(b, n);
    let prefix: Vec<f64> = bs
        .iter()
        .scan(0.0, |s, v| {
            *s += v;
            Some(*s)
        })
        .collect();
    let h = 1.0 / steps as f64;
    let top = (bs[0] / h).floor() as usize;
    let mut best = 0.0;
    let mut current = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cap: usize,
        sum: f64,
        n: usize,
        h: f64,
        p: f64,
        prefix: &[f64],
        current: &mut Vec<f64>,
        best: &mut f64,
    ) {
        if k == n {
            *best = f64::max(*best, schatten(current, p));
            return;
        }
        for i in 0..=cap {
            let v = i as f64 * h;
            if sum + v > prefix[k] + 1e-12 {
                break;
            }
            current.push(v);
            rec(k + 1, i, sum + v, n, h, p, prefix, current, best);
            current.pop();
        }
    }
    rec(0, top, 0.0, n, h, p, &prefix, &mut current, &mut best);
    best
}

/// Bitmask pattern in a `n × n` box: bit `r * n + c`.
pub struct MaskPattern {
    pub n: usize,
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
    pub cells: Vec<(usize, usize)>,
}

impl MaskPattern {
    pub fn new(n: usize, mask: u64) -> Self {
        let mut rows = vec![0u32; n];
        let mut cols = vec![0u32; n];
        let mut cells = Vec::new();
        for b in 0..n * n {
            if mask >> b & 1 == 1 {
                let (r, c) = (b / n, b % n);
                rows[r] |= 1 << c;
                cols[c] |= 1 << r;
                cells.push((r, c));
            }
        }
        MaskPattern { n, rows, cols, cells }
    }
}

/// Feasibility table `[r][c]` for `r, c <= max_budget`, by trying every
/// R/C assignment of the cells.
pub fn exhaustive_decompositions(p: &MaskPattern, max_budget: usize) -> Vec<Vec<bool>> {
    let k = p.cells.len();
    let mut table = vec![vec![false; max_budget + 1]; max_budget + 1];
    let mut row_r = vec![0usize; p.n];
    let mut col_c = vec![0usize; p.n];
    for assign in 0u32..(1 << k) {
        row_r.iter_mut().for_each(|v| *v = 0);
        col_c.iter_mut().for_each(|v| *v = 0);
        for (i, &(r, c)) in p.cells.iter().enumerate() {
            if assign >> i & 1 == 1 {
                row_r[r] += 1;
            } else {
                col_c[c] += 1;
            }
        }
        let need_r = row_r.iter().copied().max().unwrap_or(0);
        let need_c = col_c.iter().copied().max().unwrap_or(0);
        for row in table.iter_mut().skip(need_r) {
            for cell in row.iter_mut().skip(need_c) {
                *cell = true;
            }
        }
    }
    table
}

/// Minimum number of lines covering the pattern: try every row subset and
/// cover what remains by columns.
pub fn exhaustive_cover(p: &MaskPattern) -> usize {
    (0u32..1 << p.n)
        .map(|chosen| {
            let cols = (0..p.n)
                .filter(|r| chosen >> r & 1 == 0)
                .fold(0u32, |acc, r| acc | p.rows[r]);
            chosen.count_ones() as usize + cols.count_ones() as usize
        })
        .min()
        .unwrap_or(0)
}

/// Longest chain strictly increasing in both coordinates, over all subsets.
pub fn exhaustive_chain(cells: &[(usize, usize)]) -> usize {
    let k = cells.len();
    (0u32..1 << k)
        .filter(|&s| {
            let mut chosen: Vec<_> = (0..k).filter(|i| s >> i & 1 == 1).map(|i| cells[i]).collect();
            chosen.sort();
            chosen.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Calls `f` on every `bits`-bit mask with at most `max_ones` set bits.
pub fn for_each_mask(bits: usize, max_ones: usize, mut f: impl FnMut(u64)) {
    for ones in 0..=max_ones.min(bits) {
        if ones == 0 {
            f(0);
            continue;
        }
        // Gosper's hack: next integer with the same popcount.
        let mut m: u64 = (1 << ones) - 1;
        let limit: u64 = 1 << bits;
        while m < limit {
            f(m);
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
}
