use rand::seq::SliceRandom;

use super::complete::completion_count;
use super::critical::is_critical;
use super::{unique_completion, PartialLatinSquare};
use crate::error::{Error, Result};
use crate::modmath::seeded_rng;
use crate::qcore::Quasigroup;

/// A secret square with a critical set split among participants.
///
/// The scheme's access structure is combinatorial: a coalition recovers the
/// secret exactly when its pooled entries complete uniquely. Pooling the whole
/// critical set always works and dropping any entry of it never does, but
/// intermediate coalitions are not governed by a numeric threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareDeal {
    pub secret: Quasigroup,
    pub shares: Vec<PartialLatinSquare>,
}

/// Shuffles the entries of critical set `c` with `seed` and deals them
/// round-robin to `participants` holders.
pub fn deal_shares(
    l: &Quasigroup,
    c: &PartialLatinSquare,
    participants: usize,
    seed: u64,
) -> Result<ShareDeal> {
    if !is_critical(c, l)? {
        return Err(Error::NotCritical);
    }
    if participants == 0 || participants > c.len() {
        return Err(Error::InvalidArgument(format!(
            "participants must be between 1 and {}, got {participants}",
            c.len()
        )));
    }
    let mut entries = c.entries();
    entries.shuffle(&mut seeded_rng(seed, 0));
    let mut shares = vec![PartialLatinSquare::empty(l.order())?; participants];
    for (i, (r, col, s)) in entries.into_iter().enumerate() {
        shares[i % participants].insert(r, col, s)?;
    }
    Ok(ShareDeal {
        secret: l.clone(),
        shares,
    })
}

/// Pools `shares` of an order-`n` square and completes them, if the
/// completion is unique.
pub fn reconstruct(n: usize, shares: &[PartialLatinSquare]) -> Result<Quasigroup> {
    let mut pooled = PartialLatinSquare::empty(n)?;
    for share in shares {
        if share.order() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: share.order(),
            });
        }
        for (r, c, s) in share.entries() {
            pooled.insert(r, c, s)?;
        }
    }
    if let Some(q) = unique_completion(&pooled) {
        return Ok(q);
    }
    if completion_count(&pooled, 1) == 0 {
        return Err(Error::Inconsistent(
            "the pooled entries have no completion".into(),
        ));
    }
    Err(Error::Insufficient)
}
