//! Byte strings with the 1-based indexing used throughout the solvers.

use std::fmt;
use std::ops::Deref;

/// An immutable sequence of 8-bit symbols.
///
/// Positions are 1-based: `at(1)` is the first symbol and `range(i, j)` is the
/// closed block `S[i..j]`, empty whenever `i > j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymbolString(Box<[u8]>);

impl SymbolString {
    pub fn new(data: impl Into<Vec<u8>>) -> Self {
        SymbolString(data.into().into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The symbol at 1-based position `i`.
    ///
    /// Panics if `i` is outside `1..=len`.
    pub fn at(&self, i: usize) -> u8 {
        assert!(
            i >= 1 && i <= self.0.len(),
            "position {i} out of 1..={}",
            self.0.len()
        );
        self.0[i - 1]
    }

    /// The closed block `S[i..j]`; empty when `i > j`.
    pub fn range(&self, i: usize, j: usize) -> &[u8] {
        if i > j {
            return &[];
        }
        assert!(
            i >= 1 && j <= self.0.len(),
            "range [{i}..{j}] out of bounds"
        );
        &self.0[i - 1..j]
    }

    pub fn reversed(&self) -> SymbolString {
        let mut v = self.0.to_vec();
        v.reverse();
        SymbolString::new(v)
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0.into_vec()
    }
}

impl Deref for SymbolString {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for SymbolString {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for SymbolString {
    fn from(s: &str) -> Self {
        SymbolString::new(s.as_bytes())
    }
}

impl From<&[u8]> for SymbolString {
    fn from(s: &[u8]) -> Self {
        SymbolString::new(s)
    }
}

impl From<Vec<u8>> for SymbolString {
    fn from(v: Vec<u8>) -> Self {
        SymbolString::new(v)
    }
}

impl fmt::Debug for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}
