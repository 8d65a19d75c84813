//! Minimal intervals of a string that contain a pattern as a subsequence.

use serde::Serialize;

use crate::error::{Error, Result};

/// A closed, 1-based range `[begin..end]` over a string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Interval {
    pub begin: usize,
    pub end: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Interval {
    pub fn new(begin: usize, end: usize) -> Self {
        debug_assert!(begin >= 1 && begin <= end);
        Interval { begin, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.begin + 1
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.begin <= other.begin && other.end <= self.end
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}..{}]", self.begin, self.end)
    }
}

/// Every minimal interval of `text` containing `pattern` as a subsequence,
/// sorted by begin position. Begins and ends are both strictly increasing.
///
/// From a start position the pattern is matched greedily left to right to get
/// the least end, then right to left from that end to get the greatest begin.
/// The scan restarts one past that begin.
pub fn minimal_intervals(text: &[u8], pattern: &[u8]) -> Result<Vec<Interval>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let mut out = Vec::new();
    // 0-based cursor into `text`
    let mut start = 0;
    while let Some(end) = greedy_end(text, pattern, start) {
        let begin = greedy_begin(text, pattern, end);
        out.push(Interval::new(begin + 1, end + 1));
        start = begin + 1;
    }
    Ok(out)
}

/// 0-based index of the last symbol of the leftmost greedy match starting at `start`.
fn greedy_end(text: &[u8], pattern: &[u8], start: usize) -> Option<usize> {
    let mut k = 0;
    for (pos, &c) in text.iter().enumerate().skip(start) {
        if c == pattern[k] {
            k += 1;
            if k == pattern.len() {
                return Some(pos);
            }
        }
    }
    None
}

/// 0-based begin of the rightmost greedy match ending at or before `end`.
fn greedy_begin(text: &[u8], pattern: &[u8], end: usize) -> usize {
    let mut k = pattern.len();
    let mut pos = end + 1;
    while k > 0 {
        pos -= 1;
        if text[pos] == pattern[k - 1] {
            k -= 1;
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::is_subsequence;
    use proptest::prelude::*;

    /// Checks all O(n^2) ranges directly.
    fn brute_minimal(text: &[u8], pattern: &[u8]) -> Vec<Interval> {
        let n = text.len();
        let mut out = Vec::new();
        for b in 1..=n {
            for e in b..=n {
                let inside = is_subsequence(pattern, &text[b - 1..e]);
                let shrink_left = b < e && is_subsequence(pattern, &text[b..e]);
                let shrink_right = b < e && is_subsequence(pattern, &text[b - 1..e - 1]);
                if inside && !shrink_left && !shrink_right {
                    out.push(Interval::new(b, e));
                }
            }
        }
        out
    }

    #[test]
    fn running_example() {
        assert_eq!(
            minimal_intervals(b"cbacbaaba", b"abb").unwrap(),
            vec![Interval::new(3, 8)]
        );
        assert_eq!(
            minimal_intervals(b"bcdababcb", b"abb").unwrap(),
            vec![Interval::new(4, 7), Interval::new(6, 9)]
        );
    }

    #[test]
    fn absent_symbol_gives_empty_set() {
        assert!(minimal_intervals(b"abc", b"d").unwrap().is_empty());
        assert!(minimal_intervals(b"", b"a").unwrap().is_empty());
    }

    #[test]
    fn single_symbol_pattern_hits_each_occurrence() {
        let got = minimal_intervals(b"abab", b"b").unwrap();
        assert_eq!(got, vec![Interval::new(2, 2), Interval::new(4, 4)]);
    }

    #[test]
    fn empty_pattern_is_rejected() {
        assert_eq!(minimal_intervals(b"abc", b""), Err(Error::EmptyPattern));
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            text in prop::collection::vec(b'a'..=b'c', 0..=60),
            pattern in prop::collection::vec(b'a'..=b'c', 1..=5),
        ) {
            let got = minimal_intervals(&text, &pattern).unwrap();
            prop_assert_eq!(&got, &brute_minimal(&text, &pattern));
            for w in got.windows(2) {
                prop_assert!(w[0].begin < w[1].begin && w[0].end < w[1].end);
            }
            prop_assert!(got.len() <= text.len());
            prop_assert_eq!(got.is_empty(), !is_subsequence(&pattern, &text));
        }
    }
}
