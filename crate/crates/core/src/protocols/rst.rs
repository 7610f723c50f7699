use crate::error::{Error, Result};
use crate::modmath::mod_inverse;
use crate::qcore::{Permutation, Quasigroup};

/// A quasigroup `(Q, ∘)` with a permutation `J` and exponents `(r, s, t)`.
///
/// The identity `J^r(x∘y) ∘ J^s(x) = J^t(y)` is not enforced at construction;
/// [`RstQuasigroup::verify_rst`] checks it exhaustively and every transport
/// routine refuses a candidate that fails it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RstQuasigroup {
    quasigroup: Quasigroup,
    j: Permutation,
    r: i64,
    s: i64,
    t: i64,
}

impl RstQuasigroup {
    pub fn new(quasigroup: Quasigroup, j: Permutation, r: i64, s: i64, t: i64) -> Result<Self> {
        if j.size() != quasigroup.order() {
            return Err(Error::SizeMismatch {
                left: j.size(),
                right: quasigroup.order(),
            });
        }
        Ok(Self {
            quasigroup,
            j,
            r,
            s,
            t,
        })
    }

    /// A CI-quasigroup candidate: `r = t = 0`, `s = 1`.
    pub fn ci(quasigroup: Quasigroup, j: Permutation) -> Result<Self> {
        Self::new(quasigroup, j, 0, 1, 0)
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.quasigroup
    }

    pub fn j(&self) -> &Permutation {
        &self.j
    }

    pub fn exponents(&self) -> (i64, i64, i64) {
        (self.r, self.s, self.t)
    }

    pub fn is_ci_shape(&self) -> bool {
        (self.r, self.s, self.t) == (0, 1, 0)
    }

    pub fn verify_rst(&self) -> bool {
        let q = &self.quasigroup;
        let (jr, js, jt) = (self.j.pow(self.r), self.j.pow(self.s), self.j.pow(self.t));
        let n = q.order();
        (0..n).all(|x| (0..n).all(|y| q.get(jr.apply(q.get(x, y)), js.apply(x)) == jt.apply(y)))
    }

    fn require_ci(&self) -> Result<()> {
        if self.is_ci_shape() && self.verify_rst() {
            Ok(())
        } else {
            Err(Error::InvalidCi)
        }
    }

    fn require_rst(&self) -> Result<()> {
        if self.verify_rst() {
            Ok(())
        } else {
            Err(Error::InvalidRst {
                r: self.r,
                s: self.s,
                t: self.t,
            })
        }
    }

    fn check(&self, symbols: &[usize]) -> Result<()> {
        crate::cipher::check_symbols(symbols, self.quasigroup.order())
    }
}

/// `x∘y = a·x + a⁻¹·y (mod n)` with `J(x) = −a³·x (mod n)`.
pub fn make_linear_ci(modulus: u64, multiplier: u64) -> Result<RstQuasigroup> {
    if modulus == 0 {
        return Err(Error::EmptyOrder);
    }
    let a = multiplier % modulus;
    let a_inv = mod_inverse(a, modulus).ok_or(Error::NotCoprime {
        multiplier,
        modulus,
    })?;
    let n = modulus as usize;
    let table = (0..modulus)
        .flat_map(|x| (0..modulus).map(move |y| ((a * x + a_inv * y) % modulus) as usize))
        .collect();
    let q = Quasigroup::from_table(n, table)?;
    let a3 = a * a % modulus * a % modulus;
    let j = Permutation::new(
        (0..modulus)
            .map(|x| ((modulus - a3 * x % modulus) % modulus) as usize)
            .collect(),
    )?;
    let ci = RstQuasigroup::ci(q, j)?;
    debug_assert!(ci.verify_rst());
    Ok(ci)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CiTransport {
    /// The public element `c` sent in the clear.
    pub element: usize,
    /// `c∘m`.
    pub ciphertext: usize,
    /// `(c∘m)∘J(c)`.
    pub recovered: usize,
}

pub fn ci_key_transport(q: &RstQuasigroup, c: usize, m: usize) -> Result<CiTransport> {
    q.require_ci()?;
    q.check(&[c, m])?;
    let op = q.quasigroup();
    let ciphertext = op.get(c, m);
    let recovered = op.get(ciphertext, q.j.apply(c));
    Ok(CiTransport {
        element: c,
        ciphertext,
        recovered,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RstTransport {
    /// `J^k(u)`, sent in the clear.
    pub element: usize,
    /// `J^r(J^k(u)∘m)`.
    pub ciphertext: usize,
    /// `J^r(J^k(u)∘m) ∘ J^{s+k}(u) = J^t(m)`, before the final `J^{-t}`.
    pub combined: usize,
    pub recovered: usize,
}

pub fn rst_key_transport(q: &RstQuasigroup, k: i64, u: usize, m: usize) -> Result<RstTransport> {
    q.require_rst()?;
    q.check(&[u, m])?;
    let op = q.quasigroup();
    let element = q.j.pow(k).apply(u);
    let ciphertext = q.j.pow(q.r).apply(op.get(element, m));
    // The receiver only needs J^s applied to the public element.
    let combined = op.get(ciphertext, q.j.pow(q.s).apply(element));
    let recovered = q.j.pow(-q.t).apply(combined);
    Ok(RstTransport {
        element,
        ciphertext,
        combined,
        recovered,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ex8Transport {
    pub ciphertext: usize,
    pub recovered: usize,
    /// The cycle of `J` through the public key, starting at it.
    pub cycle: Vec<usize>,
    /// Set when the cycle is shorter than `order − 1`.
    pub short_cycle: bool,
}

/// Public key `u`, private key `J(u)`: `(u∘m)∘J(u) = m`.
pub fn ex8_transport(q: &RstQuasigroup, public_key: usize, m: usize) -> Result<Ex8Transport> {
    q.require_ci()?;
    q.check(&[public_key, m])?;
    let op = q.quasigroup();
    let ciphertext = op.get(public_key, m);
    let recovered = op.get(ciphertext, q.j.apply(public_key));
    let cycle = q.j.cycle_of(public_key);
    let short_cycle = cycle.len() + 1 < op.order();
    Ok(Ex8Transport {
        ciphertext,
        recovered,
        cycle,
        short_cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_ci_mod_five() {
        let ci = make_linear_ci(5, 2).unwrap();
        assert_eq!(ci.j().images(), &[0, 2, 4, 1, 3]);
        assert!(ci.verify_rst());
        // Independent check of (x∘y)∘J(x) = y straight from the formula.
        for x in 0..5u64 {
            for y in 0..5u64 {
                let xy = (2 * x + 3 * y) % 5;
                assert_eq!((2 * xy + 3 * (2 * x % 5)) % 5, y);
            }
        }
    }

    #[test]
    fn abelian_group_ci() {
        let ci = make_linear_ci(3, 1).unwrap();
        assert_eq!(ci.quasigroup(), &Quasigroup::cyclic(3));
        assert_eq!(ci.j().images(), &[0, 2, 1]);
    }

    #[test]
    fn not_coprime() {
        assert_eq!(
            make_linear_ci(4, 2),
            Err(Error::NotCoprime {
                multiplier: 2,
                modulus: 4
            })
        );
    }

    #[test]
    fn z4_with_identity_fails() {
        let cand =
            RstQuasigroup::new(Quasigroup::cyclic(4), Permutation::identity(4), 0, 0, 0).unwrap();
        assert!(!cand.verify_rst());
        // (1∘0)∘1 = 2 ≠ 0
        assert_eq!(
            Quasigroup::cyclic(4).get(Quasigroup::cyclic(4).get(1, 0), 1),
            2
        );
        assert_eq!(
            rst_key_transport(&cand, 0, 1, 0),
            Err(Error::InvalidRst { r: 0, s: 0, t: 0 })
        );
        assert_eq!(ci_key_transport(&cand, 1, 0), Err(Error::InvalidCi));
    }

    #[test]
    fn ci_transport_example() {
        let ci = make_linear_ci(5, 2).unwrap();
        let t = ci_key_transport(&ci, 1, 4).unwrap();
        assert_eq!((t.ciphertext, t.recovered), (4, 4));
        for m1 in 0..5 {
            for m2 in m1 + 1..5 {
                assert_ne!(
                    ci_key_transport(&ci, 3, m1).unwrap().ciphertext,
                    ci_key_transport(&ci, 3, m2).unwrap().ciphertext
                );
            }
        }
    }

    #[test]
    fn rst_reduces_to_ci_and_is_periodic() {
        let ci = make_linear_ci(5, 2).unwrap();
        let ord = ci.j().order() as i64;
        for u in 0..5 {
            for m in 0..5 {
                let base = rst_key_transport(&ci, 0, u, m).unwrap();
                let plain = ci_key_transport(&ci, u, m).unwrap();
                assert_eq!(
                    (base.ciphertext, base.recovered),
                    (plain.ciphertext, plain.recovered)
                );
                assert_eq!(
                    rst_key_transport(&ci, 3, u, m).unwrap(),
                    rst_key_transport(&ci, 3 + ord, u, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn genuine_rst_parameters() {
        let q = Quasigroup::from_table(
            5,
            (0..5)
                .flat_map(|x| (0..5).map(move |y| (x + 5 - y) % 5))
                .collect(),
        )
        .unwrap();
        let neg = Permutation::new((0..5).map(|x| (5 - x) % 5).collect()).unwrap();
        // x∘y = x − y: (x∘y)∘x = −y = J(y), so (r,s,t) = (0,0,1).
        let cand = RstQuasigroup::new(q, neg, 0, 0, 1).unwrap();
        assert!(cand.verify_rst());
        for u in 0..5 {
            for m in 0..5 {
                assert_eq!(rst_key_transport(&cand, 2, u, m).unwrap().recovered, m);
            }
        }
        assert_eq!(ci_key_transport(&cand, 0, 0), Err(Error::InvalidCi));
    }

    #[test]
    fn ex8_cycles() {
        let ci = make_linear_ci(5, 2).unwrap();
        let t = ex8_transport(&ci, 1, 3).unwrap();
        assert_eq!(t.cycle, vec![1, 2, 4, 3]);
        assert!(!t.short_cycle);
        assert_eq!(t.recovered, 3);
        let fixed = ex8_transport(&ci, 0, 3).unwrap();
        assert_eq!(fixed.cycle, vec![0]);
        assert!(fixed.short_cycle);
    }
}
