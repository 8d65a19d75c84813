//! Seeded workloads, the scaling benchmark and the randomized self-test.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frontier::{build_frontier, CellValue, OccurrenceStrategy};
use crate::lcs::{contains_substring, is_subsequence, lcs_length, lcs_table_full};
use crate::solver::{self, SolveOptions, StrIcLcsOutcome};

/// Uniform random string over the first `sigma` lowercase letters.
pub fn random_string(rng: &mut impl Rng, len: usize, sigma: u8) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

/// `base` with `count` point substitutions, each to a different symbol.
pub fn mutate(rng: &mut impl Rng, base: &[u8], count: usize, sigma: u8) -> Vec<u8> {
    let mut out = base.to_vec();
    if out.is_empty() || sigma < 2 {
        return out;
    }
    for _ in 0..count {
        let pos = rng.gen_range(0..out.len());
        let shift = rng.gen_range(1..sigma);
        out[pos] = b'a' + (out[pos] - b'a' + shift) % sigma;
    }
    out
}

#[derive(Clone, Debug)]
pub struct Workload {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
    pub p: Vec<u8>,
}

/// Random `(A, B, P)` of size `n`. With `mutations`, `B` is a mutated copy of `A`.
pub fn workload(
    n: usize,
    sigma: u8,
    pattern_len: usize,
    mutations: Option<usize>,
    seed: u64,
) -> Workload {
    let mut rng = StdRng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let a = random_string(&mut rng, n, sigma);
    let b = match mutations {
        Some(k) => mutate(&mut rng, &a, k, sigma),
        None => random_string(&mut rng, n, sigma),
    };
    let p = random_string(&mut rng, pattern_len, sigma);
    Workload { a, b, p }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub sigma: u8,
    pub pattern_len: usize,
    pub mutations: Option<usize>,
    pub reps: usize,
    pub seed: u64,
    pub occurrence: OccurrenceStrategy,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![500, 1000, 2000, 4000],
            sigma: 2,
            pattern_len: 8,
            mutations: None,
            reps: 3,
            seed: 42,
            occurrence: OccurrenceStrategy::Sorted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub length: i64,
    pub ell: usize,
    pub cells_allocated: usize,
    pub quadratic_cells: usize,
    pub candidate_pairs: usize,
    /// Fastest of the repetitions.
    pub elapsed_ns: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchSummary {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(time)` against `ln(n)`; needs two sizes.
    pub slope: Option<f64>,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchSummary> {
    if cfg.sizes.is_empty() || cfg.sizes.contains(&0) {
        return Err(Error::InvalidArgument("sizes must be positive".into()));
    }
    if cfg.sigma == 0 || cfg.sigma > 26 {
        return Err(Error::InvalidArgument("sigma must be in 1..=26".into()));
    }
    if cfg.reps == 0 {
        return Err(Error::InvalidArgument("reps must be positive".into()));
    }
    let opts = SolveOptions {
        occurrence: cfg.occurrence,
        witness: false,
    };
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let w = workload(n, cfg.sigma, cfg.pattern_len, cfg.mutations, cfg.seed);
        let mut best = u64::MAX;
        let mut last = None;
        for _ in 0..cfg.reps {
            let started = Instant::now();
            let result = solver::solve(&w.a, &w.b, &w.p, opts);
            best = best.min(started.elapsed().as_nanos() as u64);
            last = Some(result);
        }
        let (out, stats) = last.expect("reps > 0");
        rows.push(BenchRow {
            n,
            length: out.length,
            ell: stats.ell,
            cells_allocated: stats.cells_allocated,
            quadratic_cells: (w.a.len() + 1) * (w.b.len() + 1),
            candidate_pairs: stats.candidate_pairs,
            elapsed_ns: best.max(1),
            seed: cfg.seed,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), (r.elapsed_ns as f64).ln()))
        .collect();
    Ok(BenchSummary {
        slope: fit_slope(&points),
        rows,
    })
}

impl BenchRow {
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("row serializes")
    }
}

impl BenchSummary {
    /// `{"slope": ...}`, with `null` when there was a single size.
    pub fn slope_record(&self) -> String {
        serde_json::json!({ "slope": self.slope }).to_string()
    }
}

/// Ordinary least-squares slope; `None` for fewer than two distinct x values.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (points.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

/// Cells `(s, i, j)` where the prefix LCS `s` is hidden in the `X` table and
/// not recoverable from the `Y` table.
pub fn recover_violations(x: &[u8], y: &[u8]) -> Vec<(usize, usize, usize)> {
    let d = lcs_table_full(x, y);
    let ell = d.length();
    let fx = build_frontier(x, y, ell);
    let fy = build_frontier(y, x, ell);
    let mut bad = Vec::new();
    for i in 1..=x.len() {
        for j in 1..=y.len() {
            let s = d.get(i, j);
            if s == 0 || !fx.cell(s, i).is_undef() {
                continue;
            }
            if !matches!(fy.cell(s, j), CellValue::Finite(v) if v <= i) {
                bad.push((s, i, j));
            }
        }
    }
    bad
}

/// Rows `s` with no column `i` such that `F_X(s, i) = v` and `F_Y(s, v)` is finite.
pub fn visibility_violations(x: &[u8], y: &[u8]) -> Vec<usize> {
    let ell = lcs_length(x, y);
    let fx = build_frontier(x, y, ell);
    let fy = build_frontier(y, x, ell);
    (1..=ell)
        .filter(|&s| {
            !(1..=x.len()).any(|i| match fx.cell(s, i) {
                CellValue::Finite(v) => fy.cell(s, v).finite().is_some(),
                _ => false,
            })
        })
        .collect()
}

/// Checks the witness of a non-bottom outcome.
pub fn witness_problem(a: &[u8], b: &[u8], p: &[u8], out: &StrIcLcsOutcome) -> Option<String> {
    let w = match &out.witness {
        Some(w) => w,
        None if out.is_bottom() => return None,
        None => return Some("missing witness".into()),
    };
    if w.len() as i64 != out.length {
        return Some(format!("witness length {} != {}", w.len(), out.length));
    }
    if !contains_substring(w, p) {
        return Some("witness does not contain the pattern".into());
    }
    if !is_subsequence(w, a) || !is_subsequence(w, b) {
        return Some("witness is not a common subsequence".into());
    }
    None
}

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub cases: usize,
    pub seed: u64,
    pub max_len: usize,
    pub max_pattern: usize,
    /// Pairs (up to length 40) checked for the frontier visibility properties.
    pub frontier_pairs: usize,
    /// Perturbs the quadratic reference so the harness must report a failure.
    pub inject_fault: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            cases: 10_000,
            seed: 42,
            max_len: 12,
            max_pattern: 4,
            frontier_pairs: 200,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: String,
    pub b: String,
    pub p: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SelftestSummary {
    pub cases: usize,
    pub brute_checked: usize,
    pub witnesses_checked: usize,
    pub bottoms: usize,
    pub frontier_pairs: usize,
    pub failure: Option<Counterexample>,
}

impl SelftestSummary {
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn counterexample(a: &[u8], b: &[u8], p: &[u8], detail: String) -> Counterexample {
    let show = |s: &[u8]| String::from_utf8_lossy(s).into_owned();
    Counterexample {
        a: show(a),
        b: show(b),
        p: show(p),
        detail,
    }
}

/// Three-way solver agreement with witness checks, then the frontier
/// visibility properties. Stops at the first counterexample.
pub fn run_selftest(cfg: &SelftestConfig) -> SelftestSummary {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut summary = SelftestSummary::default();
    for _ in 0..cfg.cases {
        let sigma = rng.gen_range(1..=4u8);
        let la = rng.gen_range(0..=cfg.max_len);
        let lb = rng.gen_range(0..=cfg.max_len);
        let lp = rng.gen_range(0..=cfg.max_pattern);
        let a = random_string(&mut rng, la, sigma);
        let b = random_string(&mut rng, lb, sigma);
        let p = random_string(&mut rng, lp, sigma);

        let (fast, _) = solver::solve(
            &a,
            &b,
            &p,
            SolveOptions {
                witness: true,
                ..Default::default()
            },
        );
        let mut reference = solver::deorowicz_reference(&a, &b, &p);
        if cfg.inject_fault && !reference.is_bottom() {
            reference.length += 1;
        }
        summary.cases += 1;
        if fast.length != reference.length {
            summary.failure = Some(counterexample(
                &a,
                &b,
                &p,
                format!(
                    "space-efficient {} != reference {}",
                    fast.length, reference.length
                ),
            ));
            return summary;
        }
        if let Ok(truth) = solver::brute_force(&a, &b, &p) {
            summary.brute_checked += 1;
            if truth.length != fast.length {
                summary.failure = Some(counterexample(
                    &a,
                    &b,
                    &p,
                    format!(
                        "space-efficient {} != brute force {}",
                        fast.length, truth.length
                    ),
                ));
                return summary;
            }
        }
        if fast.is_bottom() {
            summary.bottoms += 1;
        } else {
            summary.witnesses_checked += 1;
        }
        if let Some(problem) = witness_problem(&a, &b, &p, &fast) {
            summary.failure = Some(counterexample(&a, &b, &p, problem));
            return summary;
        }
    }
    for _ in 0..cfg.frontier_pairs {
        let sigma = rng.gen_range(1..=4u8);
        let la = rng.gen_range(0..=40);
        let lb = rng.gen_range(0..=40);
        let a = random_string(&mut rng, la, sigma);
        let b = random_string(&mut rng, lb, sigma);
        summary.frontier_pairs += 1;
        if let Some(&(s, i, j)) = recover_violations(&a, &b).first() {
            let detail = format!("row {s} hidden at ({i}, {j}) in both tables");
            summary.failure = Some(counterexample(&a, &b, b"", detail));
            return summary;
        }
        if let Some(&s) = visibility_violations(&a, &b).first() {
            let detail = format!("row {s} has no cell visible from both tables");
            summary.failure = Some(counterexample(&a, &b, b"", detail));
            return summary;
        }
    }
    summary
}
