//! Inclusive integer ranges for grid flags, written `lo..hi`.

use std::fmt;
use std::str::FromStr;

/// An inclusive range `lo..hi`; a bare integer means the single-point
/// range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InclusiveRange {
    pub lo: u64,
    pub hi: u64,
}

impl InclusiveRange {
    pub fn point(value: u64) -> Self {
        InclusiveRange {
            lo: value,
            hi: value,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for InclusiveRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |piece: &str| -> Result<u64, String> {
            piece
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid integer {piece:?} in range"))
        };
        let range = match s.split_once("..") {
            Some((lo, hi)) => InclusiveRange {
                lo: parse(lo)?,
                hi: parse(hi)?,
            },
            None => InclusiveRange::point(parse(s)?),
        };
        if range.lo > range.hi {
            return Err(format!("empty range {s:?}: lo exceeds hi"));
        }
        Ok(range)
    }
}
