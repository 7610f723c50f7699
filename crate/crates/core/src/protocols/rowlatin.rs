use num_integer::Integer;

use crate::error::{Error, Result};
use crate::qcore::Permutation;

/// A square whose rows are permutations; columns are unconstrained.
///
/// Multiplication is row-wise composition: row `i` of `a·b` maps `x` to
/// `a_i(b_i(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowLatinSquare {
    rows: Vec<Permutation>,
}

impl RowLatinSquare {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != n {
                    return Err(Error::NotSquare {
                        row: i,
                        expected: n,
                        found: r.len(),
                    });
                }
                Permutation::new(r.clone()).map_err(|_| Error::NotLatin(crate::Line::Row(i)))
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: vec![Permutation::identity(n); n],
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    pub fn to_grid(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|p| p.images().to_vec()).collect()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::SizeMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    /// `L^e` by repeated squaring; `L^0` has identity rows.
    pub fn power(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same order");
            }
            base = base.multiply(&base).expect("same order");
            e >>= 1;
        }
        acc
    }

    /// Least `e ≥ 1` with `L^e` the identity: lcm of the row orders.
    pub fn period(&self) -> u128 {
        self.rows.iter().fold(1u128, |acc, p| acc.lcm(&p.order()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyAgreement {
    /// `L^x`, published by the first party.
    pub first_public: RowLatinSquare,
    /// `L^y`, published by the second party.
    pub second_public: RowLatinSquare,
    /// `(L^y)^x`, computed by the first party.
    pub first_key: RowLatinSquare,
    /// `(L^x)^y`, computed by the second party.
    pub second_key: RowLatinSquare,
}

impl KeyAgreement {
    pub fn agreed(&self) -> bool {
        self.first_key == self.second_key
    }
}

pub fn rls_key_agreement(base: &RowLatinSquare, x: u64, y: u64) -> Result<KeyAgreement> {
    if x == 0 || y == 0 {
        return Err(Error::InvalidArgument(
            "secret exponents must be at least 1".into(),
        ));
    }
    let first_public = base.power(x);
    let second_public = base.power(y);
    let first_key = second_public.power(x);
    let second_key = first_public.power(y);
    Ok(KeyAgreement {
        first_public,
        second_public,
        first_key,
        second_key,
    })
}
