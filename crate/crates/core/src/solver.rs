//! STR-IC-LCS solvers: the longest common subsequence of `A` and `B` that
//! contains `P` as a contiguous substring.
//!
//! Every solution splits around one minimal interval of `P` in `A` and one
//! in `B`: an LCS of the prefixes before them, then `P`, then an LCS of the
//! suffixes after them. The solvers differ only in how they answer the
//! prefix and suffix LCS lookups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frontier::{
    prefix_lcs_query, suffix_lcs_query, FrontierPair, OccurrenceStrategy, ScanCursors,
};
use crate::intervals::{minimal_intervals, Interval};
use crate::lcs::{contains_substring, hirschberg_lcs, is_subsequence, lcs_length, lcs_table_full};

/// Length encoding of the no-solution outcome.
pub const BOTTOM: i64 = -1;

/// Largest `|A|` accepted by [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrIcLcsOutcome {
    /// `-1` when no common subsequence contains `P`.
    pub length: i64,
    pub witness: Option<Vec<u8>>,
    /// Interval over `A` and interval over `B` that produced `length`.
    pub pair: Option<(Interval, Interval)>,
}

impl StrIcLcsOutcome {
    pub fn bottom() -> Self {
        StrIcLcsOutcome {
            length: BOTTOM,
            witness: None,
            pair: None,
        }
    }

    fn with_length(length: usize) -> Self {
        StrIcLcsOutcome {
            length: length as i64,
            witness: None,
            pair: None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        self.length == BOTTOM
    }
}

/// Counters collected by a solver run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// `lcs(A, B)`.
    pub ell: usize,
    /// Table cells held by the solver (frontier cells, or full DP cells for
    /// the quadratic reference).
    pub cells_allocated: usize,
    /// Interval pairs evaluated, `|I_A|·|I_B|`.
    pub candidate_pairs: usize,
    /// Frontier table reads made by the query cursors.
    pub probes: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub occurrence: OccurrenceStrategy,
    pub witness: bool,
}

/// Length and contributing interval pair, in `O((ell+1)(n-ell+1))` table space.
pub fn str_ic_lcs_length(a: &[u8], b: &[u8], p: &[u8]) -> StrIcLcsOutcome {
    solve(a, b, p, SolveOptions::default()).0
}

/// Like [`str_ic_lcs_length`] but also reconstructs a witness string.
pub fn str_ic_lcs_with_witness(a: &[u8], b: &[u8], p: &[u8]) -> StrIcLcsOutcome {
    solve(
        a,
        b,
        p,
        SolveOptions {
            witness: true,
            ..Default::default()
        },
    )
    .0
}

/// The space-efficient solver with instrumentation.
pub fn solve(a: &[u8], b: &[u8], p: &[u8], opts: SolveOptions) -> (StrIcLcsOutcome, SolveStats) {
    let ell = lcs_length(a, b);
    let mut stats = SolveStats {
        ell,
        ..Default::default()
    };
    if p.is_empty() {
        let mut out = StrIcLcsOutcome::with_length(ell);
        if opts.witness {
            out.witness = Some(hirschberg_lcs(a, b));
        }
        return (out, stats);
    }
    if p.len() > a.len().min(b.len()) {
        return (StrIcLcsOutcome::bottom(), stats);
    }
    let (ia, ib) = match interval_sets(a, b, p) {
        Some(sets) => sets,
        None => return (StrIcLcsOutcome::bottom(), stats),
    };

    let forward = FrontierPair::build(a, b, ell, opts.occurrence);
    let ar: Vec<u8> = a.iter().rev().copied().collect();
    let br: Vec<u8> = b.iter().rev().copied().collect();
    let backward = FrontierPair::build(&ar, &br, ell, opts.occurrence);
    stats.cells_allocated = forward.stored_cells() + backward.stored_cells();

    let mut best: Option<(usize, Interval, Interval)> = None;
    let mut cur = ScanCursors::new(ell);
    for x in &ia {
        cur.reset(ell);
        for y in &ib {
            let before =
                prefix_lcs_query(&forward.x, &forward.y, x.begin - 1, y.begin - 1, &mut cur);
            let after = suffix_lcs_query(&backward.x, &backward.y, x.end + 1, y.end + 1, &mut cur);
            let total = before + p.len() + after;
            if best.is_none_or(|(len, _, _)| total > len) {
                best = Some((total, *x, *y));
            }
        }
    }
    stats.candidate_pairs = ia.len() * ib.len();
    stats.probes = cur.probes;

    let (length, x, y) = best.expect("interval sets are non-empty");
    let mut out = StrIcLcsOutcome {
        length: length as i64,
        witness: None,
        pair: Some((x, y)),
    };
    if opts.witness {
        out.witness = Some(assemble_witness(a, b, p, x, y));
    }
    (out, stats)
}

fn interval_sets(a: &[u8], b: &[u8], p: &[u8]) -> Option<(Vec<Interval>, Vec<Interval>)> {
    let ia = minimal_intervals(a, p).expect("pattern is non-empty");
    if ia.is_empty() {
        return None;
    }
    let ib = minimal_intervals(b, p).expect("pattern is non-empty");
    if ib.is_empty() {
        return None;
    }
    Some((ia, ib))
}

/// `LCS(A before x, B before y) + P + LCS(A after x, B after y)`.
pub fn assemble_witness(a: &[u8], b: &[u8], p: &[u8], x: Interval, y: Interval) -> Vec<u8> {
    let mut z = hirschberg_lcs(&a[..x.begin - 1], &b[..y.begin - 1]);
    z.extend_from_slice(p);
    z.extend(hirschberg_lcs(&a[x.end..], &b[y.end..]));
    z
}

/// Quadratic-space reference: full prefix and suffix LCS tables with
/// constant-time lookups over every interval pair.
pub fn deorowicz_reference(a: &[u8], b: &[u8], p: &[u8]) -> StrIcLcsOutcome {
    deorowicz_with_stats(a, b, p).0
}

pub fn deorowicz_with_stats(a: &[u8], b: &[u8], p: &[u8]) -> (StrIcLcsOutcome, SolveStats) {
    let prefix = lcs_table_full(a, b);
    let ell = prefix.length();
    let mut stats = SolveStats {
        ell,
        cells_allocated: prefix.cell_count(),
        ..Default::default()
    };
    if p.is_empty() {
        return (StrIcLcsOutcome::with_length(ell), stats);
    }
    if p.len() > a.len().min(b.len()) {
        return (StrIcLcsOutcome::bottom(), stats);
    }
    let (ia, ib) = match interval_sets(a, b, p) {
        Some(sets) => sets,
        None => return (StrIcLcsOutcome::bottom(), stats),
    };
    let ar: Vec<u8> = a.iter().rev().copied().collect();
    let br: Vec<u8> = b.iter().rev().copied().collect();
    let suffix = lcs_table_full(&ar, &br);
    stats.cells_allocated += suffix.cell_count();
    stats.candidate_pairs = ia.len() * ib.len();

    let (m, n) = (a.len(), b.len());
    let mut best: Option<(usize, Interval, Interval)> = None;
    for x in &ia {
        for y in &ib {
            let total =
                prefix.get(x.begin - 1, y.begin - 1) + p.len() + suffix.get(m - x.end, n - y.end);
            if best.is_none_or(|(len, _, _)| total > len) {
                best = Some((total, *x, *y));
            }
        }
    }
    let (length, x, y) = best.expect("interval sets are non-empty");
    (
        StrIcLcsOutcome {
            length: length as i64,
            witness: None,
            pair: Some((x, y)),
        },
        stats,
    )
}

/// Enumerates every subsequence of `A`. Ground truth for small inputs.
pub fn brute_force(a: &[u8], b: &[u8], p: &[u8]) -> Result<StrIcLcsOutcome> {
    if a.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::InputTooLarge {
            len: a.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut best: Option<Vec<u8>> = None;
    let mut z = Vec::with_capacity(a.len());
    for mask in 0u32..(1 << a.len()) {
        let size = mask.count_ones() as usize;
        if size < p.len() || best.as_ref().is_some_and(|w| size <= w.len()) {
            continue;
        }
        z.clear();
        z.extend((0..a.len()).filter(|k| mask >> k & 1 == 1).map(|k| a[k]));
        if contains_substring(&z, p) && is_subsequence(&z, b) {
            best = Some(z.clone());
        }
    }
    Ok(match best {
        Some(w) => StrIcLcsOutcome {
            length: w.len() as i64,
            witness: Some(w),
            pair: None,
        },
        None => StrIcLcsOutcome::bottom(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const A: &[u8] = b"bcdababcb";
    const B: &[u8] = b"cbacbaaba";

    fn assert_valid_witness(a: &[u8], b: &[u8], p: &[u8], out: &StrIcLcsOutcome) {
        let w = out.witness.as_ref().expect("witness requested");
        assert_eq!(w.len() as i64, out.length);
        assert!(contains_substring(w, p));
        assert!(is_subsequence(w, a) && is_subsequence(w, b));
    }

    #[test]
    fn running_example() {
        let out = str_ic_lcs_with_witness(A, B, b"abb");
        assert_eq!(out.length, 5);
        assert_eq!(out.pair, Some((Interval::new(6, 9), Interval::new(3, 8))));
        assert_valid_witness(A, B, b"abb", &out);
        assert_eq!(brute_force(A, B, b"abb").unwrap().length, 5);
        assert_eq!(deorowicz_reference(A, B, b"abb").length, 5);
    }

    #[test]
    fn empty_pattern_degenerates_to_lcs() {
        assert_eq!(str_ic_lcs_length(A, B, b"").length, 5);
        assert_eq!(str_ic_lcs_length(A, B, b"").pair, None);
        assert_eq!(deorowicz_reference(A, B, b"").length, 5);
        assert_eq!(brute_force(A, B, b"").unwrap().length, 5);
        let out = str_ic_lcs_with_witness(A, B, b"");
        assert_valid_witness(A, B, b"", &out);
        assert_eq!(str_ic_lcs_length(b"", b"", b"").length, 0);
    }

    #[test]
    fn no_solution_cases() {
        for out in [
            str_ic_lcs_length(b"abc", b"abc", b"xyz"),
            deorowicz_reference(b"abc", b"abc", b"xyz"),
            brute_force(b"abc", b"abc", b"xyz").unwrap(),
            brute_force(b"ab", b"ba", b"ab").unwrap(),
            str_ic_lcs_length(b"ab", b"ba", b"ab"),
            str_ic_lcs_length(b"ab", b"abc", b"abc"),
        ] {
            assert!(out.is_bottom());
            assert_eq!(out.witness, None);
            assert_eq!(out.pair, None);
        }
    }

    #[test]
    fn whole_pattern_is_whole_answer() {
        assert_eq!(brute_force(b"ab", b"ab", b"ab").unwrap().length, 2);
        assert_eq!(str_ic_lcs_length(b"ab", b"ab", b"ab").length, 2);
    }

    #[test]
    fn tiny_witness() {
        let out = str_ic_lcs_with_witness(b"abc", b"abc", b"b");
        assert_eq!(out.length, 3);
        assert_eq!(out.witness.as_deref(), Some(&b"abc"[..]));
        assert_eq!(out.pair, Some((Interval::new(2, 2), Interval::new(2, 2))));
    }

    #[test]
    fn brute_force_rejects_long_input() {
        let a = vec![b'a'; 16];
        assert_eq!(
            brute_force(&a, b"a", b"a"),
            Err(Error::InputTooLarge { len: 16, limit: 15 })
        );
    }

    #[test]
    fn candidate_count_is_product_of_interval_sets() {
        let (_, stats) = solve(A, B, b"abb", SolveOptions::default());
        assert_eq!(stats.candidate_pairs, 2);
        assert_eq!(stats.ell, 5);
    }

    #[test]
    fn dense_lookup_gives_same_answer() {
        let opts = SolveOptions {
            occurrence: OccurrenceStrategy::Dense,
            witness: true,
        };
        let (out, _) = solve(A, B, b"abb", opts);
        assert_eq!(out, str_ic_lcs_with_witness(A, B, b"abb"));
    }

    fn triple(max: usize, pmax: usize) -> impl Strategy<Value = (Vec<u8>, Vec<u8>, Vec<u8>)> {
        (1u8..=4).prop_flat_map(move |sigma| {
            let sym = b'a'..b'a' + sigma;
            (
                prop::collection::vec(sym.clone(), 0..=max),
                prop::collection::vec(sym.clone(), 0..=max),
                prop::collection::vec(sym, 0..=pmax),
            )
        })
    }

    proptest! {
        #[test]
        fn three_way_agreement((a, b, p) in triple(12, 4)) {
            let fast = str_ic_lcs_with_witness(&a, &b, &p);
            let reference = deorowicz_reference(&a, &b, &p);
            let truth = brute_force(&a, &b, &p).unwrap();
            prop_assert_eq!(fast.length, reference.length);
            prop_assert_eq!(fast.length, truth.length);
            prop_assert_eq!(fast.pair, reference.pair);
            if !fast.is_bottom() {
                assert_valid_witness(&a, &b, &p, &fast);
            }
        }

        #[test]
        fn bounds_and_bottom_soundness((a, b, p) in triple(40, 6)) {
            let out = str_ic_lcs_length(&a, &b, &p);
            let ell = lcs_length(&a, &b) as i64;
            prop_assert!(out.length >= BOTTOM && out.length <= ell);
            if !out.is_bottom() {
                prop_assert!(out.length >= p.len() as i64);
            }
            let hidden = !p.is_empty() && (!is_subsequence(&p, &a) || !is_subsequence(&p, &b));
            prop_assert_eq!(out.is_bottom(), hidden);
        }
    }
}
