//! Key transport over CI and `(r,s,t)`-inverse quasigroups, key agreement
//! with powers of row-Latin squares, and a zero-knowledge proof of knowledge
//! of an isotopy between two Latin squares.

mod rowlatin;
mod rst;
mod zkp;

pub use rowlatin::{rls_key_agreement, KeyAgreement, RowLatinSquare};
pub use rst::{
    ci_key_transport, ex8_transport, make_linear_ci, rst_key_transport, CiTransport, Ex8Transport,
    RstQuasigroup, RstTransport,
};
pub use zkp::{zkp_simulate, Challenge, ZkpRound, ZkpTranscript};
