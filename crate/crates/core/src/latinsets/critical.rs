use rand::seq::SliceRandom;

use super::complete::is_uniquely_completable;
use super::PartialLatinSquare;
use crate::error::{Error, Result};
use crate::modmath::seeded_rng;
use crate::qcore::Quasigroup;

/// Largest order accepted by [`smallest_critical_exhaustive`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 4;

/// Whether `p` is a critical set of `l`: it completes uniquely (necessarily
/// to `l`) and dropping any single entry breaks uniqueness.
///
/// Single removals suffice because fewer entries never means fewer completions.
pub fn is_critical(p: &PartialLatinSquare, l: &Quasigroup) -> Result<bool> {
    p.require_subset_of(l)?;
    if !is_uniquely_completable(p) {
        return Ok(false);
    }
    let mut probe = p.clone();
    for (r, c, s) in p.entries() {
        probe.remove(r, c);
        let still_unique = is_uniquely_completable(&probe);
        probe.insert(r, c, s)?;
        if still_unique {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Starts from all of `l` and drops entries in a seeded random order whenever
/// the rest still completes uniquely. One pass suffices: an entry that could
/// not be dropped earlier cannot be dropped from the smaller final set either.
pub fn greedy_critical_search(l: &Quasigroup, seed: u64) -> Result<PartialLatinSquare> {
    let mut p = PartialLatinSquare::from_quasigroup(l)?;
    let mut order = p.entries();
    order.shuffle(&mut seeded_rng(seed, 0));
    for (r, c, s) in order {
        p.remove(r, c);
        if !is_uniquely_completable(&p) {
            p.insert(r, c, s)?;
        }
    }
    Ok(p)
}

/// A smallest subset of `l`'s entries that completes uniquely, found by
/// trying subsets in order of increasing size (lexicographic within a size).
pub fn smallest_critical_exhaustive(l: &Quasigroup) -> Result<PartialLatinSquare> {
    let n = l.order();
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::TooLarge(format!(
            "exhaustive critical-set search at order {n}"
        )));
    }
    let all = PartialLatinSquare::from_quasigroup(l)?.entries();
    for size in 0..=all.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let picked: Vec<_> = idx.iter().map(|&i| all[i]).collect();
            let p = PartialLatinSquare::new(n, &picked)?;
            if is_uniquely_completable(&p) {
                return Ok(p);
            }
            if !next_combination(&mut idx, all.len()) {
                break;
            }
        }
    }
    unreachable!("the full square completes uniquely")
}

fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < total - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
