//! Longest common subsequences constrained to contain a pattern as a
//! substring (STR-IC-LCS), computed in `O(n^2)` time with table space
//! proportional to `(ell + 1)(n - ell + 1)`, where `ell = lcs(A, B)`.
//!
//! The space-efficient solver lives in [`solver`] and is built from the
//! minimal pattern intervals in [`intervals`] and the sparse frontier tables
//! in [`frontier`]. [`solver::deorowicz_reference`] and
//! [`solver::brute_force`] serve as oracles.

pub mod error;
pub mod frontier;
pub mod harness;
pub mod intervals;
pub mod lcs;
pub mod report;
pub mod solver;
pub mod symbols;

pub use error::{Error, Result};
pub use frontier::{CellValue, FrontierTable, OccurrenceStrategy, ScanCursors};
pub use intervals::{minimal_intervals, Interval};
pub use report::{Algorithm, RunOptions, RunReport};
pub use solver::{
    brute_force, deorowicz_reference, str_ic_lcs_length, str_ic_lcs_with_witness, SolveOptions,
    SolveStats, StrIcLcsOutcome,
};
pub use symbols::SymbolString;
