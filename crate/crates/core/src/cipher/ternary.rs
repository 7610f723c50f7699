use std::str::FromStr;

use super::check_symbols;
use crate::error::{Error, Result};
use crate::qcore::{NAryQuasigroup, OperationTable};

/// Which argument slot of the ternary operation carries the plaintext symbol.
///
/// The remaining two slots take the chaining pair `(v_{i-2}, v_{i-1})`, or
/// the leader pair for the first two symbols, in that order. Decryption uses
/// the parastrophe swapping the plaintext slot with the value place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TernaryVariant {
    /// Plaintext in slot 1: `v_i = β(u_i, v_{i-2}, v_{i-1})`.
    P14,
    /// Plaintext in slot 2: `v_i = β(v_{i-2}, u_i, v_{i-1})`.
    P24,
    /// Plaintext in slot 3: `v_i = β(v_{i-2}, v_{i-1}, u_i)`.
    P34,
}

impl TernaryVariant {
    pub const ALL: [TernaryVariant; 3] = [
        TernaryVariant::P14,
        TernaryVariant::P24,
        TernaryVariant::P34,
    ];

    fn slot(self) -> usize {
        match self {
            TernaryVariant::P14 => 0,
            TernaryVariant::P24 => 1,
            TernaryVariant::P34 => 2,
        }
    }

    fn arrange(self, symbol: usize, a: usize, b: usize) -> [usize; 3] {
        match self {
            TernaryVariant::P14 => [symbol, a, b],
            TernaryVariant::P24 => [a, symbol, b],
            TernaryVariant::P34 => [a, b, symbol],
        }
    }
}

impl FromStr for TernaryVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_start_matches('(').trim_end_matches(')') {
            "14" => Ok(TernaryVariant::P14),
            "24" => Ok(TernaryVariant::P24),
            "34" => Ok(TernaryVariant::P34),
            other => Err(Error::Parse(format!("unknown ternary variant: {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryKey {
    beta: NAryQuasigroup,
    inverse: NAryQuasigroup,
    leaders: [usize; 4],
    variant: TernaryVariant,
}

impl TernaryKey {
    pub fn new(beta: NAryQuasigroup, leaders: [usize; 4], variant: TernaryVariant) -> Result<Self> {
        if beta.arity() != 3 {
            return Err(Error::ShapeMismatch(format!(
                "expected a ternary quasigroup, got arity {}",
                beta.arity()
            )));
        }
        if let Some(&l) = leaders.iter().find(|&&l| l >= beta.order()) {
            return Err(Error::SymbolOutOfRange {
                position: 0,
                symbol: l,
                order: beta.order(),
            });
        }
        let swap = NAryQuasigroup::transposition(3, variant.slot() + 1, 4)?;
        let inverse = beta.parastrophe(&swap)?;
        Ok(Self {
            beta,
            inverse,
            leaders,
            variant,
        })
    }

    pub fn quasigroup(&self) -> &NAryQuasigroup {
        &self.beta
    }

    pub fn leaders(&self) -> [usize; 4] {
        self.leaders
    }

    pub fn variant(&self) -> TernaryVariant {
        self.variant
    }

    /// The pair feeding position `i` (0-based) given the ciphertext so far.
    fn chain(&self, i: usize, ct: &[usize]) -> (usize, usize) {
        match i {
            0 => (self.leaders[0], self.leaders[1]),
            1 => (self.leaders[2], self.leaders[3]),
            _ => (ct[i - 2], ct[i - 1]),
        }
    }
}

pub fn encrypt_ternary(key: &TernaryKey, msg: &[usize]) -> Result<Vec<usize>> {
    check_symbols(msg, key.beta.order())?;
    let mut ct = Vec::with_capacity(msg.len());
    for (i, &u) in msg.iter().enumerate() {
        let (a, b) = key.chain(i, &ct);
        ct.push(key.beta.get(&key.variant.arrange(u, a, b)));
    }
    Ok(ct)
}

pub fn decrypt_ternary(key: &TernaryKey, ct: &[usize]) -> Result<Vec<usize>> {
    check_symbols(ct, key.beta.order())?;
    Ok((0..ct.len())
        .map(|i| {
            let (a, b) = key.chain(i, ct);
            key.inverse.get(&key.variant.arrange(ct[i], a, b))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{generate_quasigroup, Quasigroup};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn xor3() -> NAryQuasigroup {
        NAryQuasigroup::from_fn(3, 2, |a| (a[0] + a[1] + a[2]) % 2).unwrap()
    }

    #[test]
    fn xor_example() {
        let key = TernaryKey::new(xor3(), [0; 4], TernaryVariant::P14).unwrap();
        assert_eq!(encrypt_ternary(&key, &[1, 0]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn single_symbol_uses_first_leader_pair() {
        let beta = NAryQuasigroup::from_fn(3, 3, |a| (a[0] + 2 * a[1] + a[2]) % 3).unwrap();
        let key = TernaryKey::new(beta.clone(), [1, 2, 0, 0], TernaryVariant::P14).unwrap();
        let alt = TernaryKey::new(beta.clone(), [1, 2, 2, 1], TernaryVariant::P14).unwrap();
        let ct = encrypt_ternary(&key, &[2]).unwrap();
        assert_eq!(ct, vec![beta.get(&[2, 1, 2])]);
        assert_eq!(encrypt_ternary(&alt, &[2]).unwrap(), ct);
    }

    #[test]
    fn every_symbol_is_encrypted() {
        // The last plaintext symbol must influence the ciphertext.
        let beta = NAryQuasigroup::from_fn(3, 3, |a| (a[0] + a[1] + a[2]) % 3).unwrap();
        let key = TernaryKey::new(beta, [0; 4], TernaryVariant::P14).unwrap();
        let a = encrypt_ternary(&key, &[1, 2, 0, 1]).unwrap();
        let b = encrypt_ternary(&key, &[1, 2, 0, 2]).unwrap();
        assert_eq!(a[..3], b[..3]);
        assert_ne!(a[3], b[3]);
    }

    #[test]
    fn random_round_trips_all_variants() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for case in 0..60u64 {
            let n = rng.gen_range(3..=5);
            let q1 = generate_quasigroup(n, case);
            let q2 = generate_quasigroup(n, case + 1000);
            // β(x, y, z) = (x ∘ y) * z is a ternary quasigroup.
            let beta = NAryQuasigroup::from_fn(3, n, |a| q2.get(q1.get(a[0], a[1]), a[2])).unwrap();
            for variant in TernaryVariant::ALL {
                let leaders = [0; 4].map(|_| rng.gen_range(0..n));
                let key = TernaryKey::new(beta.clone(), leaders, variant).unwrap();
                let msg: Vec<usize> = (0..rng.gen_range(0..40))
                    .map(|_| rng.gen_range(0..n))
                    .collect();
                let ct = encrypt_ternary(&key, &msg).unwrap();
                assert_eq!(decrypt_ternary(&key, &ct).unwrap(), msg);
            }
        }
    }

    #[test]
    fn errors() {
        let bin = NAryQuasigroup::from(&Quasigroup::cyclic(3));
        assert!(TernaryKey::new(bin, [0; 4], TernaryVariant::P14).is_err());
        assert!(TernaryKey::new(xor3(), [0, 0, 2, 0], TernaryVariant::P24).is_err());
        let key = TernaryKey::new(xor3(), [0; 4], TernaryVariant::P34).unwrap();
        assert!(encrypt_ternary(&key, &[2]).is_err());
        assert!(encrypt_ternary(&key, &[]).unwrap().is_empty());
        assert_eq!(
            "(24)".parse::<TernaryVariant>().unwrap(),
            TernaryVariant::P24
        );
    }
}
