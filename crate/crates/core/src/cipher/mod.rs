//! Quasigroup encryption schemes.
//!
//! * [`StreamKey`]: the leader-chained stream cipher `v_i = v_{i-1}·u_i`,
//!   decrypted with the left division.
//! * [`TernaryKey`]: the ternary variant, chaining the two previous
//!   ciphertext symbols through a 3-ary quasigroup.
//! * [`r1_transform`]: the composition of leader-chained passes `Q_m`.
//! * [`OrthoCipher`]: block encryption by a system of orthogonal n-ary operations.

mod orthosys;
mod r1;
mod stream;
mod ternary;

pub use orthosys::{build_linear_orthosystem, OrthoCipher, OrthogonalSystem, MAX_ENUMERATION};
pub use r1::{q_transform, r1_transform};
pub use stream::{decrypt_stream, encrypt_stream, StreamKey};
pub use ternary::{decrypt_ternary, encrypt_ternary, TernaryKey, TernaryVariant};

use crate::error::{Error, Result};

pub(crate) fn check_symbols(symbols: &[usize], order: usize) -> Result<()> {
    match symbols.iter().position(|&s| s >= order) {
        Some(position) => Err(Error::SymbolOutOfRange {
            position,
            symbol: symbols[position],
            order,
        }),
        None => Ok(()),
    }
}
