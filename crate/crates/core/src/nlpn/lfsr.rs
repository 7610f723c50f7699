use super::SymbolSequence;
use crate::error::{Error, Result};
use crate::modmath::is_prime;

/// A degree-`m` linear feedback shift register over `GF(p)`.
///
/// The feedback coefficients `c_1..c_m` define the recurrence
/// `s_{t+m} = c_1·s_{t+m-1} + … + c_m·s_t`, i.e. the feedback polynomial
/// `f(x) = x^m − c_1·x^{m-1} − … − c_m`. The state is an element of
/// `GF(p)[x]/f`, kept as coefficients `(g_0, …, g_{m-1})`; each step
/// multiplies it by `x` and emits `g_{m-1}`. The default state `(1, 0, …, 0)`
/// is the constant polynomial 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lfsr {
    p: u64,
    coeffs: Vec<u64>,
    state: Vec<u64>,
}

impl Lfsr {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        let mut state = vec![0; coeffs.len()];
        if let Some(first) = state.first_mut() {
            *first = 1;
        }
        Self::with_state(p, coeffs, state)
    }

    pub fn with_state(p: u64, coeffs: Vec<u64>, state: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if state.len() != coeffs.len() {
            return Err(Error::SizeMismatch {
                left: state.len(),
                right: coeffs.len(),
            });
        }
        if let Some(&v) = coeffs.iter().chain(&state).find(|&&v| v >= p) {
            return Err(Error::SymbolOutOfRange {
                position: 0,
                symbol: v as usize,
                order: p as usize,
            });
        }
        if state.iter().all(|&v| v == 0) {
            return Err(Error::ZeroState);
        }
        Ok(Self { p, coeffs, state })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn state(&self) -> &[u64] {
        &self.state
    }

    /// Multiplies the state by `x` modulo `f` and returns the new top coefficient.
    pub fn step(&mut self) -> usize {
        let m = self.degree();
        let p = self.p;
        let top = self.state[m - 1];
        for j in (1..m).rev() {
            self.state[j] = (self.state[j - 1] + top * self.coeffs[m - 1 - j]) % p;
        }
        self.state[0] = top * self.coeffs[m - 1] % p;
        self.state[m - 1] as usize
    }

    /// `p^m − 1`.
    pub fn maximal_period(&self) -> u64 {
        self.p.pow(self.degree() as u32) - 1
    }
}

/// One full period of the register's output, after checking that the period
/// is exactly `p^m − 1`.
pub fn pn_sequence(lfsr: &Lfsr) -> Result<SymbolSequence> {
    let expected = lfsr.maximal_period();
    if expected > 1 << 26 {
        return Err(Error::TooLarge(format!("period {expected}")));
    }
    let mut reg = lfsr.clone();
    let mut out = Vec::with_capacity(expected as usize);
    for t in 1..=expected {
        out.push(reg.step());
        if reg.state == lfsr.state && t < expected {
            return Err(Error::NotPrimitive {
                period: t,
                expected,
            });
        }
    }
    if reg.state != lfsr.state {
        // The state never came back within p^m − 1 steps: f(0) = 0 or worse.
        return Err(Error::NotPrimitive {
            period: 0,
            expected,
        });
    }
    SymbolSequence::new(lfsr.p as usize, out)
}

/// Feedback coefficients of a primitive polynomial of degree `m` over `GF(p)`
/// for `p ∈ {2, 3, 5}`, `1 ≤ m ≤ 4`. Each entry is re-checked by a full
/// period run before it is returned.
pub fn primitive_polynomial(p: u64, m: usize) -> Option<Vec<u64>> {
    let coeffs: &[u64] = match (p, m) {
        (2, 1) => &[1],
        (2, 2) => &[1, 1],
        (2, 3) => &[0, 1, 1],
        (2, 4) => &[0, 0, 1, 1],
        (3, 1) => &[2],
        (3, 2) => &[1, 1],
        (3, 3) => &[0, 1, 2],
        (3, 4) => &[0, 0, 1, 1],
        (5, 1) => &[2],
        (5, 2) => &[1, 3],
        (5, 3) => &[0, 1, 2],
        (5, 4) => &[0, 1, 1, 2],
        _ => return None,
    };
    let lfsr = Lfsr::new(p, coeffs.to_vec()).ok()?;
    pn_sequence(&lfsr).ok().map(|_| coeffs.to_vec())
}
