//! Latin squares and quasigroups: representation, structural predicates and
//! transformations.
//!
//! Symbols are always the integers `0..n`.

mod distance;
mod generate;
mod isotopy;
mod nary;
mod ortho;
mod perm;
mod quasigroup;
mod shapeless;

pub use distance::hamming_distance;
pub use generate::generate_quasigroup;
pub use isotopy::Isotopy;
pub use nary::{NAryOperation, NAryQuasigroup, OperationTable};
pub use ortho::{is_orthomorphism, OrthomorphismCheck};
pub use perm::Permutation;
pub use quasigroup::{Quasigroup, S3};
pub use shapeless::{
    has_proper_subquasigroup, shapeless_report, singleton_closure, ShapelessReport,
};
