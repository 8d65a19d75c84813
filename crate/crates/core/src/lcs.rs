//! Baseline LCS machinery: the quadratic table, the two-row length
//! computation and Hirschberg's linear-space reconstruction.

/// True iff `pattern` can be obtained from `text` by deleting symbols.
pub fn is_subsequence(pattern: &[u8], text: &[u8]) -> bool {
    let mut rest = text.iter();
    pattern.iter().all(|c| rest.any(|t| t == c))
}

/// True iff `pattern` occurs contiguously in `text`.
pub fn contains_substring(text: &[u8], pattern: &[u8]) -> bool {
    pattern.is_empty() || text.windows(pattern.len()).any(|w| w == pattern)
}

/// Full `(|A|+1) x (|B|+1)` prefix LCS table, `d(i, j) = lcs(A[1..i], B[1..j])`.
///
/// Only the test oracles and the quadratic reference solver allocate this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsTable {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl LcsTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.cols + j] as usize
    }

    /// `lcs(A, B)`, the bottom-right cell.
    pub fn length(&self) -> usize {
        self.get(self.rows - 1, self.cols - 1)
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

pub fn lcs_table_full(a: &[u8], b: &[u8]) -> LcsTable {
    let rows = a.len() + 1;
    let cols = b.len() + 1;
    let mut cells = vec![0u32; rows * cols];
    for i in 1..rows {
        for j in 1..cols {
            cells[i * cols + j] = if a[i - 1] == b[j - 1] {
                cells[(i - 1) * cols + j - 1] + 1
            } else {
                cells[(i - 1) * cols + j].max(cells[i * cols + j - 1])
            };
        }
    }
    LcsTable { rows, cols, cells }
}

/// `row[j] = lcs(a, b[..j])` for `j` in `0..=|b|`.
fn prefix_row(a: &[u8], b: &[u8]) -> Vec<u32> {
    let mut row = vec![0u32; b.len() + 1];
    for &c in a {
        let mut diag = 0;
        for j in 1..=b.len() {
            let above = row[j];
            row[j] = if b[j - 1] == c {
                diag + 1
            } else {
                above.max(row[j - 1])
            };
            diag = above;
        }
    }
    row
}

/// `row[j] = lcs(a, b[j..])` for `j` in `0..=|b|`.
fn suffix_row(a: &[u8], b: &[u8]) -> Vec<u32> {
    let n = b.len();
    let mut row = vec![0u32; n + 1];
    for &c in a.iter().rev() {
        let mut diag = 0;
        for j in (0..n).rev() {
            let below = row[j];
            row[j] = if b[j] == c {
                diag + 1
            } else {
                below.max(row[j + 1])
            };
            diag = below;
        }
    }
    row
}

/// `lcs(A, B)` with two rolling rows over the shorter string.
pub fn lcs_length(a: &[u8], b: &[u8]) -> usize {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    prefix_row(long, short)[short.len()] as usize
}

/// One LCS string of `a` and `b` in `O(|a|·|b|)` time and linear space.
///
/// Among optimal split columns the smallest one is taken, so the output is
/// deterministic.
pub fn hirschberg_lcs(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    hirschberg_into(a, b, &mut out);
    out
}

fn hirschberg_into(a: &[u8], b: &[u8], out: &mut Vec<u8>) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if a.len() == 1 {
        if b.contains(&a[0]) {
            out.push(a[0]);
        }
        return;
    }
    let mid = a.len() / 2;
    let split = {
        let upper = prefix_row(&a[..mid], b);
        let lower = suffix_row(&a[mid..], b);
        let mut best = 0;
        let mut best_score = 0;
        for j in 0..=b.len() {
            let score = upper[j] + lower[j];
            if score > best_score {
                best_score = score;
                best = j;
            }
        }
        best
    };
    hirschberg_into(&a[..mid], &b[..split], out);
    hirschberg_into(&a[mid..], &b[split..], out);
}
