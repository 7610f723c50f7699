use rand::Rng;

use super::perm::Permutation;
use super::quasigroup::Quasigroup;
use crate::error::{Error, Result};

/// A triple of relabelings `(rows, columns, symbols)` acting on Latin squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isotopy {
    rows: Permutation,
    cols: Permutation,
    syms: Permutation,
}

impl Isotopy {
    pub fn new(rows: Permutation, cols: Permutation, syms: Permutation) -> Result<Self> {
        let n = rows.size();
        for p in [&cols, &syms] {
            if p.size() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: p.size(),
                });
            }
        }
        Ok(Self { rows, cols, syms })
    }

    pub fn identity(n: usize) -> Self {
        let id = Permutation::identity(n);
        Self {
            rows: id.clone(),
            cols: id.clone(),
            syms: id,
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self {
            rows: Permutation::random(n, rng),
            cols: Permutation::random(n, rng),
            syms: Permutation::random(n, rng),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.size()
    }

    pub fn rows(&self) -> &Permutation {
        &self.rows
    }

    pub fn cols(&self) -> &Permutation {
        &self.cols
    }

    pub fn syms(&self) -> &Permutation {
        &self.syms
    }

    /// `result(rows(x), cols(y)) = syms(q(x, y))`.
    pub fn apply(&self, q: &Quasigroup) -> Result<Quasigroup> {
        let n = q.order();
        if self.size() != n {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: n,
            });
        }
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[self.rows.apply(x) * n + self.cols.apply(y)] = self.syms.apply(q.get(x, y));
            }
        }
        Ok(Quasigroup::from_table_unchecked(n, table))
    }

    /// `self ∘ other`: acting by the result equals acting by `other`, then by `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            rows: self.rows.compose(&other.rows)?,
            cols: self.cols.compose(&other.cols)?,
            syms: self.syms.compose(&other.syms)?,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            rows: self.rows.inverse(),
            cols: self.cols.inverse(),
            syms: self.syms.inverse(),
        }
    }
}
