//! Finite patterns (sets of matrix positions) and the combinatorial decisions
//! on them: row/column-bounded decomposition by max-flow, minimum line cover
//! by König's theorem, and monotone-diagonal extraction by longest increasing
//! subsequence.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::Dinic;
use crate::random;

pub type Cell = (usize, usize);

/// A set of cells inside the `n × n` box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Pattern {
    pub fn new(n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(&(r, c)) = cells.iter().find(|&&(r, c)| r >= n || c >= n) {
            return Err(Error::input(format!("cell ({r}, {c}) lies outside the {n}x{n} box")));
        }
        Ok(Pattern { n, cells })
    }

    pub fn empty(n: usize) -> Self {
        Pattern {
            n,
            cells: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Pattern {
            n,
            cells: (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect(),
        }
    }

    /// `{(k, k)}`.
    pub fn diagonal(n: usize) -> Self {
        Pattern {
            n,
            cells: (0..n).map(|k| (k, k)).collect(),
        }
    }

    /// `{(j, k) : j - k ∈ offsets}`.
    pub fn toeplitz(offsets: &[i64], n: usize) -> Self {
        let offsets: BTreeSet<i64> = offsets.iter().copied().collect();
        let cells = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .filter(|&(j, k)| offsets.contains(&(j as i64 - k as i64)))
            .collect();
        Pattern { n, cells }
    }

    /// `{(j, k) : j + k ∈ sums}`.
    pub fn hankel(sums: &[usize], n: usize) -> Self {
        let sums: BTreeSet<usize> = sums.iter().copied().collect();
        let cells = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .filter(|&(j, k)| sums.contains(&(j + k)))
            .collect();
        Pattern { n, cells }
    }

    /// The geometric sums `⌊q^m⌋ < 2n - 1`, `m = 0, 1, …`, used by
    /// [`Pattern::lacunary_hankel`].
    pub fn lacunary_sums(q: f64, n: usize) -> Result<Vec<usize>> {
        if !(q > 1.0 && q.is_finite()) {
            return Err(Error::param(format!("lacunary base must exceed 1, got {q}")));
        }
        let bound = (2 * n).saturating_sub(1) as f64;
        let mut sums = Vec::new();
        let mut power = 1.0f64;
        while power.floor() < bound {
            let s = power.floor() as usize;
            if sums.last() != Some(&s) {
                sums.push(s);
            }
            power *= q;
        }
        Ok(sums)
    }

    pub fn lacunary_hankel(q: f64, n: usize) -> Result<Self> {
        Ok(Pattern::hankel(&Pattern::lacunary_sums(q, n)?, n))
    }

    /// Each cell independently with probability `density`.
    pub fn random(n: usize, density: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::param(format!("density must lie in [0, 1], got {density}")));
        }
        let mut rng = random::rng(seed);
        let mut cells = BTreeSet::new();
        for r in 0..n {
            for c in 0..n {
                if rng.random::<f64>() < density {
                    cells.insert((r, c));
                }
            }
        }
        Ok(Pattern { n, cells })
    }

    /// Pattern whose cells are the set bits of `mask`, bit `r * n + c`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n * n <= 64, "mask patterns need n*n <= 64");
        let cells = (0..n * n)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| (b / n, b % n))
            .collect();
        Pattern { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn is_subset(&self, other: &Pattern) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Union inside the larger of the two boxes.
    pub fn union(&self, other: &Pattern) -> Pattern {
        Pattern {
            n: self.n.max(other.n),
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn row_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(r, _) in &self.cells {
            deg[r] += 1;
        }
        deg
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, c) in &self.cells {
            deg[c] += 1;
        }
        deg
    }

    /// `{(a(j), b(k)) : (j, k) ∈ P}` inside the `image_n × image_n` box.
    /// Coinciding images collapse to one cell.
    pub fn transform(&self, a: &[usize], b: &[usize], image_n: usize) -> Result<Pattern> {
        if a.len() < self.n || b.len() < self.n {
            return Err(Error::param(format!(
                "index maps must be defined on all {} indices",
                self.n
            )));
        }
        let mut cells = BTreeSet::new();
        for &(j, k) in &self.cells {
            let (r, c) = (a[j], b[k]);
            if r >= image_n || c >= image_n {
                return Err(Error::param(format!(
                    "({j}, {k}) maps to ({r}, {c}), outside the {image_n}x{image_n} box"
                )));
            }
            cells.insert((r, c));
        }
        Ok(Pattern { n: image_n, cells })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PatternJson::from(self)).expect("pattern serialisation is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PatternJson = serde_json::from_str(s)?;
        Pattern::new(raw.n, raw.cells.into_iter().map(|[r, c]| (r, c)))
    }

    pub fn read_json(mut reader: impl Read) -> Result<Self> {
        let mut buf = String::new();
        reader.read_to_string(&mut buf)?;
        Pattern::from_json(&buf)
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    cells: Vec<[usize; 2]>,
}

impl From<&Pattern> for PatternJson {
    fn from(p: &Pattern) -> Self {
        PatternJson {
            n: p.n,
            cells: p.cells.iter().map(|&(r, c)| [r, c]).collect(),
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson::from(self).serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    /// Counted against the per-row budget.
    #[serde(rename = "R")]
    Row,
    /// Counted against the per-column budget.
    #[serde(rename = "C")]
    Column,
}

/// Split of a pattern into `R` (at most `r_budget` cells in each row) and
/// `C` (at most `c_budget` cells in each column).
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub r_budget: usize,
    pub c_budget: usize,
    cells: BTreeMap<Cell, Part>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            r_budget: usize,
            c_budget: usize,
            #[serde(rename = "R")]
            rows: Vec<[usize; 2]>,
            #[serde(rename = "C")]
            columns: Vec<[usize; 2]>,
        }
        Wire {
            r_budget: self.r_budget,
            c_budget: self.c_budget,
            rows: self.cells_in(Part::Row).map(|(r, c)| [r, c]).collect(),
            columns: self.cells_in(Part::Column).map(|(r, c)| [r, c]).collect(),
        }
        .serialize(s)
    }
}

impl Decomposition {
    pub fn from_assignment(cells: BTreeMap<Cell, Part>, r_budget: usize, c_budget: usize) -> Self {
        Decomposition {
            r_budget,
            c_budget,
            cells,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn part(&self, cell: Cell) -> Option<Part> {
        self.cells.get(&cell).copied()
    }

    pub fn cells_in(&self, part: Part) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().filter(move |(_, &p)| p == part).map(|(&c, _)| c)
    }

    /// Checks coverage of exactly `pattern` and both per-line budgets.
    pub fn is_valid_for(&self, pattern: &Pattern) -> bool {
        if self.cells.len() != pattern.len() || !pattern.cells().all(|c| self.cells.contains_key(&c)) {
            return false;
        }
        let mut rows = vec![0; pattern.n()];
        let mut cols = vec![0; pattern.n()];
        for (&(r, c), &p) in &self.cells {
            match p {
                Part::Row => rows[r] += 1,
                Part::Column => cols[c] += 1,
            }
        }
        rows.iter().all(|&k| k <= self.r_budget) && cols.iter().all(|&k| k <= self.c_budget)
    }

    /// Decomposition of the union of the two underlying patterns with summed
    /// budgets; shared cells keep `self`'s part.
    pub fn merge(&self, other: &Decomposition) -> Decomposition {
        let mut cells = other.cells.clone();
        cells.extend(self.cells.iter().map(|(&c, &p)| (c, p)));
        Decomposition::from_assignment(
            cells,
            self.r_budget + other.r_budget,
            self.c_budget + other.c_budget,
        )
    }
}

/// Decides whether `pattern = R ∪ C` with at most `r` cells of `R` per row
/// and at most `c` cells of `C` per column, returning a witness if so.
///
/// Row `i` of degree `d_i` must push at least `max(0, d_i - r)` of its cells
/// into `C`. The network `source → row_i` (capacity `d_i - r`),
/// `row_i → col_j` (capacity 1 per cell), `col_j → sink` (capacity `c`)
/// saturates its source edges exactly when such a choice respects the
/// column budgets; the saturated cell edges are the `C` part.
pub fn dd_decompose(pattern: &Pattern, r: usize, c: usize) -> Option<Decomposition> {
    let n = pattern.n();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Dinic::new(2 * n + 2);
    let mut demand = 0u64;
    for (row, &deg) in pattern.row_degrees().iter().enumerate() {
        if deg > r {
            let need = (deg - r) as u32;
            net.add_edge(source, row, need);
            demand += u64::from(need);
        }
    }
    let cell_edges: Vec<_> = pattern
        .cells()
        .map(|(row, col)| ((row, col), net.add_edge(row, n + col, 1)))
        .collect();
    for col in 0..n {
        net.add_edge(n + col, sink, c.min(n) as u32);
    }
    if net.max_flow(source, sink) != demand {
        return None;
    }
    let cells = cell_edges
        .into_iter()
        .map(|(cell, e)| (cell, if net.flow(e) > 0 { Part::Column } else { Part::Row }))
        .collect();
    Some(Decomposition::from_assignment(cells, r, c))
}

/// A set of rows and columns whose union contains every cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LineCover {
    pub rows: BTreeSet<usize>,
    pub columns: BTreeSet<usize>,
}

impl LineCover {
    pub fn len(&self) -> usize {
        self.rows.len() + self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn covers(&self, pattern: &Pattern) -> bool {
        pattern.cells().all(|(r, c)| self.rows.contains(&r) || self.columns.contains(&c))
    }
}

/// Minimum set of lines covering the pattern: a minimum vertex cover of the
/// row/column incidence graph, read off a maximum matching (König).
///
/// With `Z` the vertices reachable from the source in the residual network,
/// the cover is the rows outside `Z` together with the columns inside `Z`.
pub fn minimal_cover(pattern: &Pattern) -> LineCover {
    let n = pattern.n();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Dinic::new(2 * n + 2);
    for row in 0..n {
        net.add_edge(source, row, 1);
    }
    for (row, col) in pattern.cells() {
        net.add_edge(row, n + col, 1);
    }
    for col in 0..n {
        net.add_edge(n + col, sink, 1);
    }
    net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let deg_r = pattern.row_degrees();
    let deg_c = pattern.col_degrees();
    LineCover {
        rows: (0..n).filter(|&r| !reach[r] && deg_r[r] > 0).collect(),
        columns: (0..n).filter(|&c| reach[n + c] && deg_c[c] > 0).collect(),
    }
}

/// A longest chain of cells strictly increasing in both coordinates.
///
/// Cells are ordered by row, ties broken by descending column, so that a
/// strictly increasing run of columns never reuses a row; patience sorting
/// then finds the longest such run.
pub fn extract_monotone_diagonal(pattern: &Pattern) -> Vec<Cell> {
    let mut cells: Vec<Cell> = pattern.cells().collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    // tails[k]: index of the smallest possible last cell of a chain of length k + 1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; cells.len()];
    for (i, &(_, col)) in cells.iter().enumerate() {
        let pos = tails.partition_point(|&t| cells[t].1 < col);
        if pos > 0 {
            prev[i] = Some(tails[pos - 1]);
        }
        if pos == tails.len() {
            tails.push(i);
        } else {
            tails[pos] = i;
        }
    }
    let mut chain = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        chain.push(cells[i]);
        cur = prev[i];
    }
    chain.reverse();
    chain
}
