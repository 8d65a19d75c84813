//! Single-run reports: which solver ran, what it found and how much table
//! space it held.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frontier::OccurrenceStrategy;
use crate::intervals::Interval;
use crate::solver::{self, SolveOptions, SolveStats, StrIcLcsOutcome};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    #[default]
    SpaceEfficient,
    Deorowicz,
    Brute,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SpaceEfficient => "space-efficient",
            Algorithm::Deorowicz => "deorowicz",
            Algorithm::Brute => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "space-efficient" => Ok(Algorithm::SpaceEfficient),
            "deorowicz" => Ok(Algorithm::Deorowicz),
            "brute" => Ok(Algorithm::Brute),
            other => Err(Error::InvalidArgument(format!(
                "unknown algorithm `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPair {
    pub a: Interval,
    pub b: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub length: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<IntervalPair>,
    pub ell: usize,
    pub cells_allocated: usize,
    pub quadratic_cells: usize,
    /// Absent when timing is suppressed for reproducible output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ns: Option<u64>,
    pub algo: Algorithm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub algo: Algorithm,
    pub witness: bool,
    pub occurrence: OccurrenceStrategy,
    pub timing: bool,
}

/// Solves one instance with the chosen algorithm and records the report.
pub fn run(a: &[u8], b: &[u8], p: &[u8], opts: RunOptions) -> Result<RunReport> {
    let started = Instant::now();
    let (outcome, stats) = match opts.algo {
        Algorithm::SpaceEfficient => solver::solve(
            a,
            b,
            p,
            SolveOptions {
                occurrence: opts.occurrence,
                witness: opts.witness,
            },
        ),
        Algorithm::Deorowicz => {
            let (mut out, stats) = solver::deorowicz_with_stats(a, b, p);
            if opts.witness {
                out.witness = reference_witness(a, b, p, &out);
            }
            (out, stats)
        }
        Algorithm::Brute => {
            let mut out = solver::brute_force(a, b, p)?;
            if !opts.witness {
                out.witness = None;
            }
            let ell = crate::lcs::lcs_length(a, b);
            (
                out,
                SolveStats {
                    ell,
                    ..Default::default()
                },
            )
        }
    };
    let elapsed = started.elapsed();
    Ok(RunReport {
        length: outcome.length,
        witness: outcome
            .witness
            .map(|w| String::from_utf8_lossy(&w).into_owned()),
        pair: outcome.pair.map(|(a, b)| IntervalPair { a, b }),
        ell: stats.ell,
        cells_allocated: stats.cells_allocated,
        quadratic_cells: (a.len() + 1) * (b.len() + 1),
        elapsed_ns: opts.timing.then_some(elapsed.as_nanos() as u64),
        algo: opts.algo,
        seed: None,
    })
}

fn reference_witness(a: &[u8], b: &[u8], p: &[u8], out: &StrIcLcsOutcome) -> Option<Vec<u8>> {
    if out.is_bottom() {
        return None;
    }
    Some(match out.pair {
        Some((x, y)) => solver::assemble_witness(a, b, p, x, y),
        None => crate::lcs::hirschberg_lcs(a, b),
    })
}

/// `4·((ell+1)(n-ell+1) + n)` with `n = max(|A|, |B|)`.
pub fn frontier_cell_bound(ell: usize, n: usize) -> usize {
    4 * ((ell + 1) * (n - ell + 1) + n)
}

impl RunReport {
    /// One-line JSON record.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        if self.length < 0 {
            out.push_str("length: -1 (no common subsequence contains the pattern)\n");
        } else {
            out.push_str(&format!("length: {}\n", self.length));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {w}\n"));
        }
        if let Some(pair) = &self.pair {
            out.push_str(&format!("intervals: A{} B{}\n", pair.a, pair.b));
        }
        out.push_str(&format!("algorithm: {}\n", self.algo));
        out.push_str(&format!("lcs(A,B): {}\n", self.ell));
        out.push_str(&format!(
            "cells: {} allocated, {} for a full table\n",
            self.cells_allocated, self.quadratic_cells
        ));
        if let Some(ns) = self.elapsed_ns {
            out.push_str(&format!("elapsed: {:.3} ms\n", ns as f64 / 1e6));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for algo in [
            Algorithm::SpaceEfficient,
            Algorithm::Deorowicz,
            Algorithm::Brute,
        ] {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("fast".parse::<Algorithm>().is_err());
    }

    #[test]
    fn record_has_stable_fields() {
        let opts = RunOptions {
            witness: true,
            ..Default::default()
        };
        let report = run(b"bcdababcb", b"cbacbaaba", b"abb", opts).unwrap();
        let record = report.to_record();
        let v: serde_json::Value = serde_json::from_str(&record).unwrap();
        assert_eq!(v["length"], 5);
        assert_eq!(v["algo"], "space-efficient");
        assert_eq!(v["pair"]["a"]["begin"], 6);
        assert_eq!(v["quadratic_cells"], 100);
        assert!(v.get("elapsed_ns").is_none());
        assert!(!record.contains('\n'));
    }

    #[test]
    fn all_algorithms_agree_on_report_length() {
        for algo in [
            Algorithm::SpaceEfficient,
            Algorithm::Deorowicz,
            Algorithm::Brute,
        ] {
            let opts = RunOptions {
                algo,
                witness: true,
                ..Default::default()
            };
            let r = run(b"bcdababcb", b"cbacbaaba", b"abb", opts).unwrap();
            assert_eq!(r.length, 5, "{algo}");
            assert_eq!(r.witness.as_ref().map(String::len), Some(5));
        }
    }

    #[test]
    fn bottom_report() {
        let r = run(b"abc", b"abc", b"xyz", RunOptions::default()).unwrap();
        assert_eq!(r.length, -1);
        assert!(r.render_human().contains("-1"));
    }

    #[test]
    fn brute_rejects_long_input() {
        let opts = RunOptions {
            algo: Algorithm::Brute,
            ..Default::default()
        };
        assert!(run(&[b'a'; 20], b"a", b"a", opts).is_err());
    }
}
