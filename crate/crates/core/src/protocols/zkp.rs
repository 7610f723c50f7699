use rand::Rng;

use crate::error::{Error, Result};
use crate::modmath::seeded_rng;
use crate::qcore::{Isotopy, Quasigroup};

/// The verifier's request for one round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Challenge {
    /// Show that `H` is isotopic to `L'`.
    A,
    /// Show that `H` is isotopic to `L`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkpRound {
    pub commitment: Quasigroup,
    pub challenge: Challenge,
    pub response: Isotopy,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkpTranscript {
    pub rounds: Vec<ZkpRound>,
    pub accepted: bool,
}

const PROVER_STREAM: u64 = 1;
const VERIFIER_STREAM: u64 = 2;

/// Runs prover and verifier in-process for `rounds` rounds.
///
/// The honest prover commits `H = P(L)` and answers `P` for challenge `B` or
/// `P ∘ S⁻¹` for challenge `A`, where `S(L) = L'`. With `cheat` set the
/// prover ignores `secret`: it guesses the challenge, commits an isotope of
/// `L` or `L'` accordingly and can only answer the guessed challenge.
pub fn zkp_simulate(
    l: &Quasigroup,
    l_prime: &Quasigroup,
    secret: &Isotopy,
    rounds: usize,
    seed: u64,
    cheat: bool,
) -> Result<ZkpTranscript> {
    let n = l.order();
    if l_prime.order() != n || secret.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: l_prime.order().max(secret.size()),
        });
    }
    if !cheat && secret.apply(l)? != *l_prime {
        return Err(Error::NotIsotopic);
    }
    let secret_inv = secret.inverse();
    let mut prover = seeded_rng(seed, PROVER_STREAM);
    let mut verifier = seeded_rng(seed, VERIFIER_STREAM);
    let mut transcript = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let p = Isotopy::random(n, &mut prover);
        let (commitment, response_for) = if cheat {
            let guess = if prover.gen::<bool>() {
                Challenge::A
            } else {
                Challenge::B
            };
            let base = match guess {
                Challenge::A => l_prime,
                Challenge::B => l,
            };
            (p.apply(base)?, None)
        } else {
            (p.apply(l)?, Some(&secret_inv))
        };
        let challenge = if verifier.gen::<bool>() {
            Challenge::A
        } else {
            Challenge::B
        };
        let response = match (challenge, response_for) {
            (Challenge::A, Some(inv)) => p.compose(inv)?,
            _ => p,
        };
        let target = match challenge {
            Challenge::A => l_prime,
            Challenge::B => l,
        };
        let verified = response.apply(target)? == commitment;
        transcript.push(ZkpRound {
            commitment,
            challenge,
            response,
            verified,
        });
    }
    let accepted = transcript.iter().all(|r| r.verified);
    Ok(ZkpTranscript {
        rounds: transcript,
        accepted,
    })
}
