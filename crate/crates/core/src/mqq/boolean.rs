use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};

/// Masks selecting the bit positions whose index has bit `l` clear, for `l < 6`.
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Largest supported variable count; the truth table holds `2^vars` bits.
pub const MAX_VARS: usize = 30;

/// In-place Möbius transform over GF(2) of a packed `2^vars`-bit vector.
///
/// Maps a truth table to its ANF coefficients and back (the transform is an
/// involution).
pub fn moebius(vars: usize, words: &mut [u64]) {
    for (l, &mask) in LOW_HALVES.iter().enumerate().take(vars.min(6)) {
        let shift = 1 << l;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for l in 6..vars {
        let stride = 1 << (l - 6);
        for w in 0..words.len() {
            if w & stride != 0 {
                words[w] ^= words[w ^ stride];
            }
        }
    }
}

fn word_count(vars: usize) -> usize {
    if vars <= 6 {
        1
    } else {
        1 << (vars - 6)
    }
}

fn used_mask(vars: usize) -> u64 {
    if vars >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << vars)) - 1
    }
}

/// A Boolean function of `vars` variables `x_1..x_vars`.
///
/// Index `i` of the truth table is the assignment whose binary expansion,
/// most-significant bit first, gives `x_1, …, x_vars`. ANF coefficients use
/// the same indexing: monomial `i` is the product of the variables whose bits
/// are set in `i`.
#[derive(Debug, Clone)]
pub struct BooleanFunction {
    vars: usize,
    truth: Vec<u64>,
    anf: OnceLock<Vec<u64>>,
}

impl PartialEq for BooleanFunction {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.truth == other.truth
    }
}

impl Eq for BooleanFunction {}

impl BooleanFunction {
    /// Builds from packed truth-table words (bit `i % 64` of word `i / 64`).
    pub fn from_words(vars: usize, words: Vec<u64>) -> Result<Self> {
        if vars > MAX_VARS {
            return Err(Error::TooLarge(format!("{vars} variables")));
        }
        if words.len() != word_count(vars) {
            return Err(Error::SizeMismatch {
                left: words.len(),
                right: word_count(vars),
            });
        }
        if words[0] & !used_mask(vars) != 0 {
            return Err(Error::InvalidArgument(
                "truth table has bits beyond 2^vars".into(),
            ));
        }
        Ok(Self {
            vars,
            truth: words,
            anf: OnceLock::new(),
        })
    }

    pub fn from_fn(vars: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        if vars > MAX_VARS {
            return Err(Error::TooLarge(format!("{vars} variables")));
        }
        let mut words = vec![0u64; word_count(vars)];
        for i in 0..1usize << vars {
            if f(i) {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self::from_words(vars, words)
    }

    /// The function whose ANF has the given packed coefficients.
    pub fn from_anf(vars: usize, mut coefficients: Vec<u64>) -> Result<Self> {
        let probe = Self::from_words(vars, coefficients.clone())?;
        moebius(vars, &mut coefficients);
        let f = Self {
            vars,
            truth: coefficients,
            anf: OnceLock::new(),
        };
        let _ = f.anf.set(probe.truth);
        Ok(f)
    }

    pub fn random<R: Rng + ?Sized>(vars: usize, rng: &mut R) -> Self {
        assert!(vars <= MAX_VARS, "too many variables");
        let mut words: Vec<u64> = (0..word_count(vars)).map(|_| rng.gen()).collect();
        words[0] &= used_mask(vars);
        Self {
            vars,
            truth: words,
            anf: OnceLock::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn truth_table(&self) -> &[u64] {
        &self.truth
    }

    pub fn eval(&self, index: usize) -> bool {
        self.truth[index / 64] >> (index % 64) & 1 == 1
    }

    /// Packed ANF coefficients, computed on first use.
    pub fn anf(&self) -> &[u64] {
        self.anf.get_or_init(|| {
            let mut words = self.truth.clone();
            moebius(self.vars, &mut words);
            words
        })
    }

    pub fn anf_coefficient(&self, monomial: usize) -> bool {
        self.anf()[monomial / 64] >> (monomial % 64) & 1 == 1
    }

    /// Monomials with coefficient 1, in increasing index order.
    pub fn monomials(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.anf().iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Algebraic degree; the zero function has degree 0.
    pub fn degree(&self) -> usize {
        self.monomials()
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Evaluates the ANF directly (sum of monomials contained in `index`).
    pub fn eval_anf(&self, index: usize) -> bool {
        self.monomials()
            .into_iter()
            .filter(|&m| m & index == m)
            .count()
            % 2
            == 1
    }
}
