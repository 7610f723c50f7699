use super::SymbolSequence;
use crate::error::{Error, Result};
use crate::modmath::{is_prime, mod_inverse};

/// A shortest linear recurrence `s_n = −(C_1·s_{n-1} + … + C_L·s_{n-L})` over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub modulus: u64,
    pub length: usize,
    /// Connection polynomial `1 + C_1·x + … + C_L·x^L`, `length + 1` coefficients.
    pub connection: Vec<u64>,
}

impl LinearRecurrence {
    /// Extends `seed` (at least `length` terms) to `total` terms.
    pub fn generate(&self, seed: &[u64], total: usize) -> Vec<u64> {
        let p = self.modulus;
        let mut out = seed.to_vec();
        while out.len() < total {
            let n = out.len();
            let acc = (1..=self.length)
                .map(|i| self.connection[i] * out[n - i] % p)
                .sum::<u64>()
                % p;
            out.push((p - acc) % p);
        }
        out.truncate(total);
        out
    }
}

/// Berlekamp-Massey synthesis over `GF(p)`.
pub fn berlekamp_massey(symbols: &[u64], p: u64) -> Result<LinearRecurrence> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut len = 0usize;
    let mut gap = 1usize;
    let mut last_discrepancy = 1u64;
    for n in 0..symbols.len() {
        let d = (0..=len.min(c.len() - 1))
            .map(|i| c[i] * (symbols[n - i] % p) % p)
            .sum::<u64>()
            % p;
        if d == 0 {
            gap += 1;
            continue;
        }
        let coef = d * mod_inverse(last_discrepancy, p).expect("nonzero mod prime") % p;
        let previous = c.clone();
        if c.len() < b.len() + gap {
            c.resize(b.len() + gap, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + gap] = (c[i + gap] + p - coef * bi % p) % p;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = previous;
            last_discrepancy = d;
            gap = 1;
        } else {
            gap += 1;
        }
    }
    c.resize(len + 1, 0);
    Ok(LinearRecurrence {
        modulus: p,
        length: len,
        connection: c,
    })
}

/// Length of the shortest LFSR over `GF(p)` producing the sequence.
pub fn linear_complexity(seq: &SymbolSequence) -> Result<usize> {
    let symbols: Vec<u64> = seq.symbols().iter().map(|&s| s as u64).collect();
    Ok(berlekamp_massey(&symbols, seq.modulus() as u64)?.length)
}
