use super::check_symbols;
use crate::error::{Error, Result};
use crate::qcore::Quasigroup;

/// A quasigroup together with its leader; the left-division table is cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamKey {
    quasigroup: Quasigroup,
    division: Quasigroup,
    leader: usize,
}

impl StreamKey {
    pub fn new(quasigroup: Quasigroup, leader: usize) -> Result<Self> {
        if leader >= quasigroup.order() {
            return Err(Error::SymbolOutOfRange {
                position: 0,
                symbol: leader,
                order: quasigroup.order(),
            });
        }
        let division = quasigroup.left_division();
        Ok(Self {
            quasigroup,
            division,
            leader,
        })
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.quasigroup
    }

    pub fn leader(&self) -> usize {
        self.leader
    }
}

/// `v_1 = l·u_1`, `v_i = v_{i-1}·u_i`.
pub fn encrypt_stream(key: &StreamKey, msg: &[usize]) -> Result<Vec<usize>> {
    check_symbols(msg, key.quasigroup.order())?;
    let q = &key.quasigroup;
    Ok(msg
        .iter()
        .scan(key.leader, |prev, &u| {
            *prev = q.get(*prev, u);
            Some(*prev)
        })
        .collect())
}

/// `u_1 = l \ v_1`, `u_i = v_{i-1} \ v_i`.
pub fn decrypt_stream(key: &StreamKey, ct: &[usize]) -> Result<Vec<usize>> {
    check_symbols(ct, key.quasigroup.order())?;
    let d = &key.division;
    Ok(ct
        .iter()
        .scan(key.leader, |prev, &v| {
            Some(d.get(std::mem::replace(prev, v), v))
        })
        .collect())
}
