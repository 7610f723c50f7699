//! Quasigroup cryptography toolkit.
//!
//! The combinatorial substrate (Latin squares, parastrophes, isotopies) lives
//! in [`qcore`]. Every scheme built on top of it is a pure function of its
//! inputs plus, where randomness is needed, an explicit seed:
//!
//! * [`cipher`]: leader-chained stream ciphers (binary and ternary), the
//!   `R_1` mixing transform and block encryption by orthogonal systems.
//! * [`qhash`]: the leader-folded quasigroup hash.
//! * [`protocols`]: CI and `(r,s,t)`-inverse key transport, row-Latin key
//!   agreement, and a zero-knowledge isotopy proof simulator.
//! * [`nlpn`]: PN sequences over prime fields, their quasigroup folds and
//!   Berlekamp-Massey linear complexity.
//! * [`mqq`]: Boolean-function view of quasigroups of order `2^d`.
//! * [`latinsets`]: partial Latin squares, critical sets and secret sharing.
//!
//! None of this is hardened for production use.

pub mod cipher;
pub mod error;
pub mod latinsets;
pub mod mqq;
pub mod nlpn;
pub mod protocols;
pub mod qcore;
pub mod qhash;
pub mod text;

mod modmath;

pub use error::{Error, Line, Result};
pub use qcore::{Isotopy, NAryOperation, NAryQuasigroup, Permutation, Quasigroup};
