//! The leader-folded quasigroup hash `H(q_1 … q_n) = ((a ⋆ q_1) ⋆ q_2) … ⋆ q_n`
//! and a multi-lane extension giving fixed-length digests.

use crate::cipher::check_symbols;
use crate::error::{Error, Result};
use crate::qcore::Quasigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashSpec {
    quasigroup: Quasigroup,
    leader: usize,
    digest_leaders: Vec<usize>,
}

impl HashSpec {
    pub fn new(quasigroup: Quasigroup, leader: usize) -> Result<Self> {
        check_symbols(&[leader], quasigroup.order())?;
        Ok(Self {
            quasigroup,
            leader,
            digest_leaders: Vec::new(),
        })
    }

    /// One lane per leader; [`hash_multi`] concatenates the lanes.
    pub fn with_digest_leaders(mut self, leaders: Vec<usize>) -> Result<Self> {
        check_symbols(&leaders, self.quasigroup.order())?;
        self.digest_leaders = leaders;
        Ok(self)
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.quasigroup
    }

    pub fn leader(&self) -> usize {
        self.leader
    }

    pub fn digest_leaders(&self) -> &[usize] {
        &self.digest_leaders
    }
}

fn fold_from(q: &Quasigroup, start: usize, msg: &[usize]) -> usize {
    msg.iter().fold(start, |acc, &s| q.get(acc, s))
}

/// The empty message hashes to the leader.
pub fn hash_fold(spec: &HashSpec, msg: &[usize]) -> Result<usize> {
    check_symbols(msg, spec.quasigroup.order())?;
    Ok(fold_from(&spec.quasigroup, spec.leader, msg))
}

/// Continues a fold from an intermediate value.
pub fn hash_continue(spec: &HashSpec, state: usize, msg: &[usize]) -> Result<usize> {
    check_symbols(&[state], spec.quasigroup.order())?;
    check_symbols(msg, spec.quasigroup.order())?;
    Ok(fold_from(&spec.quasigroup, state, msg))
}

/// Lane `i` is the fold started at `digest_leaders[i]`.
pub fn hash_multi(spec: &HashSpec, msg: &[usize]) -> Result<Vec<usize>> {
    if spec.digest_leaders.is_empty() {
        return Err(Error::InvalidArgument(
            "multi-lane hashing needs at least one digest leader".into(),
        ));
    }
    check_symbols(msg, spec.quasigroup.order())?;
    Ok(spec
        .digest_leaders
        .iter()
        .map(|&l| fold_from(&spec.quasigroup, l, msg))
        .collect())
}
