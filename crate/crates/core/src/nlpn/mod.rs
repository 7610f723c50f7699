//! PN sequences over prime fields, their quasigroup folds (NLPN sequences)
//! and linear complexity as a randomness proxy.

mod bm;
mod lfsr;

pub use bm::{berlekamp_massey, linear_complexity, LinearRecurrence};
pub use lfsr::{pn_sequence, primitive_polynomial, Lfsr};

use crate::error::{Error, Result};
use crate::qcore::Quasigroup;

/// A finite sequence over `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolSequence {
    modulus: usize,
    symbols: Vec<usize>,
}

impl SymbolSequence {
    pub fn new(modulus: usize, symbols: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::EmptyOrder);
        }
        crate::cipher::check_symbols(&symbols, modulus)?;
        Ok(Self { modulus, symbols })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// `a^i`: element `j` of the result is `a_{(j+i) mod len}`, so `a^1 = a_1 … a_{len-1} a_0`.
pub fn cyclic_shift(seq: &SymbolSequence, i: usize) -> SymbolSequence {
    let mut symbols = seq.symbols.clone();
    if !symbols.is_empty() {
        let k = i % symbols.len();
        symbols.rotate_left(k);
    }
    SymbolSequence {
        modulus: seq.modulus,
        symbols,
    }
}

/// `b_j = a_j · a^i_j` and `c_j = a^i_j · a_j`.
pub fn nlpn_pair(
    a: &SymbolSequence,
    shift: usize,
    q: &Quasigroup,
) -> Result<(SymbolSequence, SymbolSequence)> {
    if q.order() != a.modulus {
        return Err(Error::OrderMismatch {
            quasigroup: q.order(),
            modulus: a.modulus,
        });
    }
    let shifted = cyclic_shift(a, shift);
    let (b, c) = a
        .symbols
        .iter()
        .zip(&shifted.symbols)
        .map(|(&x, &y)| (q.get(x, y), q.get(y, x)))
        .unzip();
    Ok((
        SymbolSequence {
            modulus: a.modulus,
            symbols: b,
        },
        SymbolSequence {
            modulus: a.modulus,
            symbols: c,
        },
    ))
}
