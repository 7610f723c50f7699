use super::nary::OperationTable;
use crate::error::{Error, Result};

/// Number of argument tuples on which two operations of the same shape disagree.
pub fn hamming_distance<A, B>(a: &A, b: &B) -> Result<usize>
where
    A: OperationTable + ?Sized,
    B: OperationTable + ?Sized,
{
    if a.arity() != b.arity() || a.order() != b.order() {
        return Err(Error::ShapeMismatch(format!(
            "arity {} order {} vs arity {} order {}",
            a.arity(),
            a.order(),
            b.arity(),
            b.order()
        )));
    }
    Ok(a.values()
        .iter()
        .zip(b.values())
        .filter(|(x, y)| x != y)
        .count())
}
