//! Partial Latin squares, completion counting, critical sets and a secret
//! sharing scheme whose shares are pieces of a critical set.

mod complete;
mod critical;
mod sharing;

pub use complete::{completion_count, is_uniquely_completable, unique_completion};
pub use critical::{
    greedy_critical_search, is_critical, smallest_critical_exhaustive, MAX_EXHAUSTIVE_ORDER,
};
pub use sharing::{deal_shares, reconstruct, ShareDeal};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qcore::Quasigroup;
use crate::text;

/// Largest order handled (symbol sets are kept as 32-bit masks).
pub const MAX_PARTIAL_ORDER: usize = 32;

/// An order-`n` array in which each cell is empty or holds a symbol, with no
/// symbol repeated in a row or column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialLatinSquare {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl PartialLatinSquare {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        if n > MAX_PARTIAL_ORDER {
            return Err(Error::TooLarge(format!("order {n}")));
        }
        Ok(Self {
            n,
            cells: vec![None; n * n],
        })
    }

    pub fn new(n: usize, entries: &[(usize, usize, usize)]) -> Result<Self> {
        let mut p = Self::empty(n)?;
        for &(r, c, s) in entries {
            p.insert(r, c, s)?;
        }
        Ok(p)
    }

    /// Every cell of `q`.
    pub fn from_quasigroup(q: &Quasigroup) -> Result<Self> {
        let mut p = Self::empty(q.order())?;
        p.cells = q.table().iter().map(|&s| Some(s)).collect();
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        self.cells[r * self.n + c]
    }

    /// Filled cells as `(row, col, symbol)`, row-major.
    pub fn entries(&self) -> Vec<(usize, usize, usize)> {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|s| (i / self.n, i % self.n, s)))
            .collect()
    }

    /// Adds an entry; re-adding an identical entry is a no-op.
    pub fn insert(&mut self, r: usize, c: usize, s: usize) -> Result<()> {
        let n = self.n;
        for v in [r, c, s] {
            if v >= n {
                return Err(Error::SymbolOutOfRange {
                    position: r * n + c.min(n - 1),
                    symbol: v,
                    order: n,
                });
            }
        }
        match self.get(r, c) {
            Some(old) if old == s => return Ok(()),
            Some(old) => {
                return Err(Error::Inconsistent(format!(
                    "cell ({r}, {c}) holds {old}, not {s}"
                )))
            }
            None => {}
        }
        if (0..n).any(|j| self.get(r, j) == Some(s)) {
            return Err(Error::Inconsistent(format!(
                "symbol {s} repeats in row {r}"
            )));
        }
        if (0..n).any(|i| self.get(i, c) == Some(s)) {
            return Err(Error::Inconsistent(format!(
                "symbol {s} repeats in column {c}"
            )));
        }
        self.cells[r * n + c] = Some(s);
        Ok(())
    }

    pub fn remove(&mut self, r: usize, c: usize) -> Option<usize> {
        self.cells[r * self.n + c].take()
    }

    /// Whether every entry agrees with `q`.
    pub fn is_subset_of(&self, q: &Quasigroup) -> bool {
        q.order() == self.n && self.entries().into_iter().all(|(r, c, s)| q.get(r, c) == s)
    }

    /// The first entry not present in `q`, as a `NotSubset` error.
    pub(crate) fn require_subset_of(&self, q: &Quasigroup) -> Result<()> {
        if q.order() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: q.order(),
            });
        }
        match self
            .entries()
            .into_iter()
            .find(|&(r, c, s)| q.get(r, c) != s)
        {
            Some((r, c, s)) => Err(Error::NotSubset(r, c, s)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_partial(self.n, &self.entries()))
    }
}

impl FromStr for PartialLatinSquare {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, entries) = text::parse_partial(s)?;
        Self::new(n, &entries)
    }
}
