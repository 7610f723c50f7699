use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::perm::Permutation;
use crate::error::{Error, Line, Result};

/// A finite quasigroup on `0..n`, stored as its Cayley table (a Latin square).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    order: usize,
    table: Vec<usize>,
}

/// An element of the symmetric group on the three places `(x, y, x·y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum S3 {
    Identity,
    /// `(12)`: the transposed (opposite) operation.
    Swap12,
    /// `(13)`: right division.
    Swap13,
    /// `(23)`: left division, `x \ z = y` iff `x·y = z`.
    Swap23,
    Cycle123,
    Cycle132,
}

impl S3 {
    pub const ALL: [S3; 6] = [
        S3::Identity,
        S3::Swap12,
        S3::Swap13,
        S3::Swap23,
        S3::Cycle123,
        S3::Cycle132,
    ];

    /// Images of the places `0, 1, 2` under the permutation.
    pub fn images(self) -> [usize; 3] {
        match self {
            S3::Identity => [0, 1, 2],
            S3::Swap12 => [1, 0, 2],
            S3::Swap13 => [2, 1, 0],
            S3::Swap23 => [0, 2, 1],
            S3::Cycle123 => [1, 2, 0],
            S3::Cycle132 => [2, 0, 1],
        }
    }
}

impl FromStr for S3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_start_matches('(').trim_end_matches(')') {
            "" | "1" | "id" | "identity" => Ok(S3::Identity),
            "12" => Ok(S3::Swap12),
            "13" => Ok(S3::Swap13),
            "23" => Ok(S3::Swap23),
            "123" => Ok(S3::Cycle123),
            "132" => Ok(S3::Cycle132),
            other => Err(Error::Parse(format!("unknown element of S3: {other}"))),
        }
    }
}

impl Quasigroup {
    /// Checks that `rows` is an `n×n` Latin square over `0..n`.
    ///
    /// Rows are scanned before columns, so the reported line is the first
    /// violated row if any, otherwise the first violated column.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &s) in row.iter().enumerate() {
                if s >= n {
                    return Err(Error::SymbolOutOfRange {
                        position: i * n + j,
                        symbol: s,
                        order: n,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        Self::from_table(n, table)
    }

    /// Same as [`Quasigroup::from_rows`] on a row-major flat table.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        if table.len() != order * order {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for order {order}",
                table.len()
            )));
        }
        if let Some((position, &symbol)) = table.iter().enumerate().find(|(_, &s)| s >= order) {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol,
                order,
            });
        }
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let s = table[i * order + j];
                if seen[s] == i {
                    return Err(Error::NotLatin(Line::Row(i)));
                }
                seen[s] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..order {
            for i in 0..order {
                let s = table[i * order + j];
                if seen[s] == j {
                    return Err(Error::NotLatin(Line::Column(j)));
                }
                seen[s] = j;
            }
        }
        Ok(Self { order, table })
    }

    pub(crate) fn from_table_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert!(Self::from_table(order, table.clone()).is_ok());
        Self { order, table }
    }

    /// The addition table of `Z_n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x + y) % n))
            .collect();
        Self { order: n, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn contains(&self, symbol: usize) -> bool {
        symbol < self.order
    }

    /// The σ-parastrophe: for every triple `t = (x, y, x·y)` the result maps
    /// `(t[σ(1)], t[σ(2)])` to `t[σ(3)]`.
    pub fn parastrophe(&self, sigma: S3) -> Self {
        let n = self.order;
        let s = sigma.images();
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let t = [x, y, self.get(x, y)];
                table[t[s[0]] * n + t[s[1]]] = t[s[2]];
            }
        }
        Self::from_table_unchecked(n, table)
    }

    /// Left division: `x \ z = y` iff `x·y = z`.
    pub fn left_division(&self) -> Self {
        self.parastrophe(S3::Swap23)
    }

    /// Right division: `z / y = x` iff `x·y = z`.
    pub fn right_division(&self) -> Self {
        self.parastrophe(S3::Swap13)
    }

    /// Direct product; the pair `(a, b)` is encoded as `a·n₂ + b`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (x1, x2) = x.div_rem(&n2);
            for y in 0..n {
                let (y1, y2) = y.div_rem(&n2);
                table[x * n + y] = self.get(x1, y1) * n2 + other.get(x2, y2);
            }
        }
        Self::from_table_unchecked(n, table)
    }

    /// Left translation `L_x : y ↦ x·y`.
    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|y| self.get(x, y)).collect())
    }

    /// Right translation `R_x : y ↦ y·x`.
    pub fn right_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|y| self.get(y, x)).collect())
    }

    /// Orders of all left and right translations, indexed by `x`.
    pub fn translation_orders(&self) -> (Vec<u128>, Vec<u128>) {
        let left = (0..self.order)
            .map(|x| self.left_translation(x).order())
            .collect();
        let right = (0..self.order)
            .map(|x| self.right_translation(x).order())
            .collect();
        (left, right)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.get(x, y);
                (0..n).all(|z| self.get(xy, z) == self.get(x, self.get(y, z)))
            })
        })
    }

    /// `e` with `e·y = y` for all `y`.
    pub fn left_unit(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|y| self.get(e, y) == y))
    }

    /// `e` with `y·e = y` for all `y`.
    pub fn right_unit(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|y| self.get(y, e) == y))
    }
}

impl fmt::Display for Quasigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_grid(&self.rows()))
    }
}
