use super::perm::Permutation;
use super::quasigroup::Quasigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrthomorphismCheck {
    /// `θ(g) = g⁻¹·φ(g)` is a bijection.
    pub is_orthomorphism: bool,
    /// `φ` fixes the identity element.
    pub canonical: bool,
}

/// Checks whether `phi` is an orthomorphism of the group given by `group`.
pub fn is_orthomorphism(group: &Quasigroup, phi: &Permutation) -> Result<OrthomorphismCheck> {
    let n = group.order();
    if phi.size() != n {
        return Err(Error::SizeMismatch {
            left: phi.size(),
            right: n,
        });
    }
    if !group.is_associative() {
        return Err(Error::NotAGroup("operation is not associative".into()));
    }
    let Some(e) = group.left_unit().filter(|&e| group.right_unit() == Some(e)) else {
        return Err(Error::NotAGroup("no two-sided identity".into()));
    };
    let ld = group.left_division();
    // In a group, x \ y = x⁻¹·y.
    let mut hit = vec![false; n];
    let is_orthomorphism =
        (0..n).all(|g| !std::mem::replace(&mut hit[ld.get(g, phi.apply(g))], true));
    Ok(OrthomorphismCheck {
        is_orthomorphism,
        canonical: phi.apply(e) == e,
    })
}
