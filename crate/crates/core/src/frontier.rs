//! Sparse shortest-prefix ("frontier") tables and prefix LCS queries over them.
//!
//! For strings `X`, `Y` with `ell = lcs(X, Y)`, cell `(s, i)` holds the length
//! of the shortest prefix of `Y` whose LCS with `X[1..i]` is `s`. Only the
//! first `|X| - ell + 1` diagonals are materialized, each cut at its first
//! infinite cell and capped at row `ell`. Everything else reads as
//! [`CellValue::Undef`].
//!
//! A single table cannot answer every `lcs(X[1..i], Y[1..j])`: the answer row
//! may sit in the undefined region above a column. In that case the answer is
//! always visible in the transposed table built over `(Y, X)`, which is what
//! [`prefix_lcs_query`] falls back to.

use std::fmt::Write as _;

const INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellValue {
    Finite(usize),
    Inf,
    Undef,
}

impl CellValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            CellValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_undef(self) -> bool {
        self == CellValue::Undef
    }
}

/// Least position `p > after` holding a given symbol.
pub trait NextOccurrence {
    fn next_after(&self, c: u8, after: usize) -> Option<usize>;
}

/// Per-symbol sorted position lists over `Y`, stored as one bucketed array.
#[derive(Clone, Debug)]
pub struct OccurrenceIndex {
    starts: Vec<u32>,
    positions: Vec<u32>,
}

impl OccurrenceIndex {
    pub fn build(y: &[u8]) -> Self {
        let mut starts = vec![0u32; 257];
        for &c in y {
            starts[c as usize + 1] += 1;
        }
        for k in 1..257 {
            starts[k] += starts[k - 1];
        }
        let mut fill = starts.clone();
        let mut positions = vec![0u32; y.len()];
        for (p, &c) in y.iter().enumerate() {
            positions[fill[c as usize] as usize] = p as u32 + 1;
            fill[c as usize] += 1;
        }
        OccurrenceIndex { starts, positions }
    }

    /// Sorted 1-based positions of `c`.
    pub fn positions(&self, c: u8) -> &[u32] {
        &self.positions[self.starts[c as usize] as usize..self.starts[c as usize + 1] as usize]
    }
}

impl NextOccurrence for OccurrenceIndex {
    fn next_after(&self, c: u8, after: usize) -> Option<usize> {
        let list = self.positions(c);
        let k = list.partition_point(|&p| (p as usize) <= after);
        list.get(k).map(|&p| p as usize)
    }
}

pub fn build_occurrence_index(y: &[u8]) -> OccurrenceIndex {
    OccurrenceIndex::build(y)
}

/// `Finite(p)` for the least `p > after` with `Y[p] = c`, else `Inf`.
pub fn next_occurrence(index: &impl NextOccurrence, c: u8, after: usize) -> CellValue {
    match index.next_after(c, after) {
        Some(p) => CellValue::Finite(p),
        None => CellValue::Inf,
    }
}

/// Dense next-occurrence table over the symbols that occur in `Y`:
/// `O(|Y|·σ')` space, constant-time lookups.
#[derive(Clone, Debug)]
pub struct DenseNextTable {
    rank: [u16; 256],
    sigma: usize,
    // next[after * sigma + rank] = least position > after, 0 if none
    next: Vec<u32>,
}

const NO_RANK: u16 = u16::MAX;

impl DenseNextTable {
    pub fn build(y: &[u8]) -> Self {
        let mut rank = [NO_RANK; 256];
        let mut sigma = 0usize;
        for &c in y {
            if rank[c as usize] == NO_RANK {
                rank[c as usize] = sigma as u16;
                sigma += 1;
            }
        }
        let n = y.len();
        let mut next = vec![0u32; (n + 1) * sigma];
        for after in (0..n).rev() {
            let (head, tail) = next.split_at_mut((after + 1) * sigma);
            head[after * sigma..].copy_from_slice(&tail[..sigma]);
            head[after * sigma + rank[y[after] as usize] as usize] = after as u32 + 1;
        }
        DenseNextTable { rank, sigma, next }
    }

    pub fn cell_count(&self) -> usize {
        self.next.len()
    }
}

impl NextOccurrence for DenseNextTable {
    fn next_after(&self, c: u8, after: usize) -> Option<usize> {
        let r = self.rank[c as usize];
        if r == NO_RANK {
            return None;
        }
        match self.next[after * self.sigma + r as usize] {
            0 => None,
            p => Some(p as usize),
        }
    }
}

/// How `build_frontier_with` finds next occurrences in `Y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OccurrenceStrategy {
    /// Binary search in per-symbol position lists.
    #[default]
    Sorted,
    /// Precomputed dense next-occurrence table.
    Dense,
}

/// The sparse frontier table of `X` against `Y`, stored diagonal by diagonal.
#[derive(Clone, Debug)]
pub struct FrontierTable {
    x_len: usize,
    y_len: usize,
    ell: usize,
    // diagonal d (1-based) occupies cells[offsets[d - 1]..offsets[d]]
    offsets: Vec<usize>,
    cells: Vec<u32>,
}

pub fn build_frontier(x: &[u8], y: &[u8], ell: usize) -> FrontierTable {
    build_frontier_with(x, y, ell, OccurrenceStrategy::Sorted)
}

pub fn build_frontier_with(
    x: &[u8],
    y: &[u8],
    ell: usize,
    strategy: OccurrenceStrategy,
) -> FrontierTable {
    match strategy {
        OccurrenceStrategy::Sorted => FrontierTable::build(x, y, ell, &OccurrenceIndex::build(y)),
        OccurrenceStrategy::Dense => FrontierTable::build(x, y, ell, &DenseNextTable::build(y)),
    }
}

impl FrontierTable {
    /// Fills the table with `f(s, i) = min(f(s, i-1), next occurrence of X[i]
    /// after f(s-1, i-1))`, treating row 0 as all zeros.
    ///
    /// `ell` must equal `lcs(x, y)`.
    pub fn build(x: &[u8], y: &[u8], ell: usize, index: &impl NextOccurrence) -> Self {
        let x_len = x.len();
        assert!(
            ell <= x_len.min(y.len()),
            "ell = {ell} exceeds string lengths"
        );
        assert!(y.len() < INF as usize, "string too long");
        let diagonals = if ell == 0 { 0 } else { x_len - ell + 1 };
        let mut offsets = Vec::with_capacity(diagonals + 1);
        offsets.push(0);
        let mut cells: Vec<u32> = Vec::new();
        for d in 1..=diagonals {
            let start = cells.len();
            let (prev_start, prev_len) = if d > 1 {
                (offsets[d - 2], start - offsets[d - 2])
            } else {
                (0, 0)
            };
            let rows = ell.min(x_len - d + 1);
            for s in 1..=rows {
                let i = d + s - 1;
                let after = if s == 1 {
                    0
                } else {
                    cells[start + s - 2] as usize
                };
                let left = if s <= prev_len {
                    cells[prev_start + s - 1]
                } else {
                    INF
                };
                let jump = index.next_after(x[i - 1], after).map_or(INF, |p| p as u32);
                let v = left.min(jump);
                cells.push(v);
                if v == INF {
                    break;
                }
            }
            offsets.push(cells.len());
        }
        FrontierTable {
            x_len,
            y_len: y.len(),
            ell,
            offsets,
            cells,
        }
    }

    pub fn x_len(&self) -> usize {
        self.x_len
    }

    pub fn y_len(&self) -> usize {
        self.y_len
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of materialized diagonals, `|X| - ell + 1` (0 when `ell = 0`).
    pub fn diagonals(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Stored cells, including the infinite cell that ends a diagonal.
    pub fn stored_cells(&self) -> usize {
        self.cells.len()
    }

    /// `(ell + 1)(|X| - ell + 1) + |X|`.
    pub fn space_bound(&self) -> usize {
        (self.ell + 1) * (self.x_len - self.ell + 1) + self.x_len
    }

    pub fn cell(&self, s: usize, i: usize) -> CellValue {
        if s == 0 || s > i || i > self.x_len {
            return CellValue::Undef;
        }
        let d = i - s + 1;
        if d > self.diagonals() {
            return CellValue::Undef;
        }
        let (lo, hi) = (self.offsets[d - 1], self.offsets[d]);
        if s > hi - lo {
            return CellValue::Undef;
        }
        match self.cells[lo + s - 1] {
            INF => CellValue::Inf,
            v => CellValue::Finite(v as usize),
        }
    }

    #[inline]
    fn finite_within(&self, s: usize, i: usize, bound: usize) -> bool {
        matches!(self.cell(s, i), CellValue::Finite(v) if v <= bound)
    }

    /// Smallest row of column `i` not excluded by the diagonal limit.
    pub fn top_defined_row(&self, i: usize) -> usize {
        (i + self.ell).saturating_sub(self.x_len).max(1)
    }

    /// Largest row holding a finite value anywhere in the table.
    pub fn bottom_finite_row(&self) -> usize {
        (1..=self.diagonals())
            .flat_map(|d| (1..=self.ell).map(move |s| (s, d + s - 1)))
            .filter(|&(s, i)| self.cell(s, i).finite().is_some())
            .map(|(s, _)| s)
            .max()
            .unwrap_or(0)
    }

    /// Text rendering: one line per row `s`, one column per `i`, entries as
    /// integers, `∞` for infinite cells and `·` for undefined ones.
    pub fn render(&self) -> String {
        let width = self.y_len.max(self.x_len).to_string().len().max(1);
        let mut out = String::new();
        let _ = write!(out, "{:>w$} |", "s\\i", w = width.max(3));
        for i in 1..=self.x_len {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        for s in 1..=self.ell {
            let _ = write!(out, "{:>w$} |", s, w = width.max(3));
            for i in 1..=self.x_len {
                let text = match self.cell(s, i) {
                    CellValue::Finite(v) => v.to_string(),
                    CellValue::Inf => "∞".to_string(),
                    CellValue::Undef => "·".to_string(),
                };
                let _ = write!(out, " {:>width$}", text);
            }
            out.push('\n');
        }
        out
    }
}

/// Monotone row cursors for one batch of queries against a fixed column.
///
/// `ka1`/`kb1` resume ascending prefix scans in the `X` and `Y` tables;
/// `ka2`/`kb2` resume descending suffix scans. `probes` counts table reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanCursors {
    pub ka1: usize,
    pub kb1: usize,
    pub ka2: usize,
    pub kb2: usize,
    pub probes: usize,
}

impl ScanCursors {
    pub fn new(ell: usize) -> Self {
        ScanCursors {
            ka1: 1,
            kb1: 1,
            ka2: ell,
            kb2: ell,
            probes: 0,
        }
    }

    /// Resets the row cursors, keeping the probe count.
    pub fn reset(&mut self, ell: usize) {
        self.ka1 = 1;
        self.kb1 = 1;
        self.ka2 = ell;
        self.kb2 = ell;
    }
}

/// `lcs(X[1..i], Y[1..j])` from the table of `X` against `Y` (`fx`) and of
/// `Y` against `X` (`fy`).
///
/// Calls sharing `cur` must keep `i` fixed and pass non-decreasing `j`.
pub fn prefix_lcs_query(
    fx: &FrontierTable,
    fy: &FrontierTable,
    i: usize,
    j: usize,
    cur: &mut ScanCursors,
) -> usize {
    debug_assert!(i <= fx.x_len && j <= fy.x_len);
    let ell = fx.ell;
    if i == 0 || j == 0 || ell == 0 {
        return 0;
    }
    let top = fx.top_defined_row(i);
    cur.probes += 1;
    if fx.finite_within(top, i, j) {
        // answer at or below the top of column i of fx
        let mut s = cur.ka1.max(top);
        while s < ell {
            cur.probes += 1;
            if !fx.finite_within(s + 1, i, j) {
                break;
            }
            s += 1;
        }
        cur.ka1 = s;
        s
    } else {
        // answer lies above the defined part of column i; read column j of fy
        let mut s = cur.kb1.max(fy.top_defined_row(j));
        cur.probes += 1;
        if !fy.finite_within(s, j, i) {
            return 0;
        }
        while s < ell {
            cur.probes += 1;
            if !fy.finite_within(s + 1, j, i) {
                break;
            }
            s += 1;
        }
        cur.kb1 = s;
        s
    }
}

/// `lcs(X[p..], Y[q..])` from the tables built over the reversed strings:
/// `fxr` for `X^R` against `Y^R` and `fyr` for `Y^R` against `X^R`.
///
/// Calls sharing `cur` must keep `p` fixed and pass non-decreasing `q`.
pub fn suffix_lcs_query(
    fxr: &FrontierTable,
    fyr: &FrontierTable,
    p: usize,
    q: usize,
    cur: &mut ScanCursors,
) -> usize {
    debug_assert!(p >= 1 && p <= fxr.x_len + 1 && q >= 1 && q <= fyr.x_len + 1);
    let ell = fxr.ell;
    let i = fxr.x_len + 1 - p;
    let j = fyr.x_len + 1 - q;
    if i == 0 || j == 0 || ell == 0 {
        return 0;
    }
    let top = fxr.top_defined_row(i);
    cur.probes += 1;
    if fxr.finite_within(top, i, j) {
        let mut s = cur.ka2.clamp(top, ell);
        loop {
            cur.probes += 1;
            if fxr.finite_within(s, i, j) {
                break;
            }
            s -= 1;
        }
        cur.ka2 = s;
        s
    } else {
        if cur.kb2 == 0 {
            return 0;
        }
        let top_y = fyr.top_defined_row(j);
        let mut s = cur.kb2.min(top - 1);
        loop {
            if s < top_y {
                cur.kb2 = 0;
                return 0;
            }
            cur.probes += 1;
            if fyr.finite_within(s, j, i) {
                break;
            }
            s -= 1;
        }
        cur.kb2 = s;
        s
    }
}

/// Tables of `X` against `Y` in both directions, for prefix queries.
#[derive(Clone, Debug)]
pub struct FrontierPair {
    pub x: FrontierTable,
    pub y: FrontierTable,
}

impl FrontierPair {
    pub fn build(x: &[u8], y: &[u8], ell: usize, strategy: OccurrenceStrategy) -> Self {
        FrontierPair {
            x: build_frontier_with(x, y, ell, strategy),
            y: build_frontier_with(y, x, ell, strategy),
        }
    }

    pub fn stored_cells(&self) -> usize {
        self.x.stored_cells() + self.y.stored_cells()
    }
}
