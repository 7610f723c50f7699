use super::check_symbols;
use crate::error::{Error, Result};
use crate::modmath::{det_mod_p, inverse_mod_p, is_prime};
use crate::qcore::{NAryOperation, OperationTable};

/// Upper bound on `order^arity` for exhaustive orthogonality checks.
pub const MAX_ENUMERATION: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct LinearForm {
    modulus: u64,
    matrix: Vec<Vec<u64>>,
}

/// `n` operations of arity `n` over `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSystem {
    arity: usize,
    order: usize,
    ops: Vec<NAryOperation>,
    linear: Option<LinearForm>,
}

impl OrthogonalSystem {
    /// Accepts any shape-consistent family; orthogonality is checked separately.
    pub fn new(ops: Vec<NAryOperation>) -> Result<Self> {
        let arity = ops.len();
        let Some(first) = ops.first() else {
            return Err(Error::InvalidArgument(
                "a system needs at least one operation".into(),
            ));
        };
        let order = first.order();
        for op in &ops {
            if op.arity() != arity || op.order() != order {
                return Err(Error::ShapeMismatch(format!(
                    "{arity} operations need arity {arity} over order {order}, found arity {} order {}",
                    op.arity(),
                    op.order()
                )));
            }
        }
        Ok(Self {
            arity,
            order,
            ops,
            linear: None,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn operations(&self) -> &[NAryOperation] {
        &self.ops
    }

    fn block_count(&self) -> Result<usize> {
        self.order
            .checked_pow(self.arity as u32)
            .filter(|&c| c <= MAX_ENUMERATION)
            .ok_or_else(|| Error::TooLarge(format!("{}^{} blocks", self.order, self.arity)))
    }

    /// Joint value `(f_1(x̄), …, f_n(x̄))` as a block index.
    fn joint(&self, idx: usize) -> usize {
        self.ops
            .iter()
            .fold(0, |acc, op| acc * self.order + op.values()[idx])
    }

    /// Exhaustively checks that `x̄ ↦ (f_1(x̄), …, f_n(x̄))` is a bijection.
    pub fn verify_orthogonality(&self) -> Result<bool> {
        let count = self.block_count()?;
        let mut hit = vec![false; count];
        Ok((0..count).all(|idx| !std::mem::replace(&mut hit[self.joint(idx)], true)))
    }
}

/// `f_i(x̄) = Σ_j A[i][j]·x_j mod p`.
pub fn build_linear_orthosystem(
    arity: usize,
    p: u64,
    matrix: &[Vec<u64>],
) -> Result<OrthogonalSystem> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if matrix.len() != arity || matrix.iter().any(|r| r.len() != arity) {
        return Err(Error::ShapeMismatch(format!(
            "matrix must be {arity}×{arity}"
        )));
    }
    let matrix: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|v| v % p).collect())
        .collect();
    if det_mod_p(&matrix, p) == 0 {
        return Err(Error::SingularMatrix(p));
    }
    let ops = matrix
        .iter()
        .map(|row| {
            NAryOperation::from_fn(arity, p as usize, |x| {
                (row.iter()
                    .zip(x)
                    .map(|(&a, &xi)| a * xi as u64)
                    .sum::<u64>()
                    % p) as usize
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sys = OrthogonalSystem::new(ops)?;
    sys.linear = Some(LinearForm { modulus: p, matrix });
    Ok(sys)
}

enum Decryptor {
    /// Block index of the ciphertext → block index of the plaintext.
    Table(Vec<usize>),
    Matrix(Vec<Vec<u64>>),
}

/// A verified orthogonal system ready for block encryption.
pub struct OrthoCipher {
    system: OrthogonalSystem,
    decryptor: Decryptor,
}

impl OrthoCipher {
    pub fn new(system: OrthogonalSystem) -> Result<Self> {
        if !system.verify_orthogonality()? {
            return Err(Error::NotOrthogonal);
        }
        let decryptor = match &system.linear {
            Some(form) => Decryptor::Matrix(
                inverse_mod_p(&form.matrix, form.modulus).ok_or(Error::NotOrthogonal)?,
            ),
            None => {
                let count = system.block_count()?;
                let mut inv = vec![0; count];
                for idx in 0..count {
                    inv[system.joint(idx)] = idx;
                }
                Decryptor::Table(inv)
            }
        };
        Ok(Self { system, decryptor })
    }

    pub fn system(&self) -> &OrthogonalSystem {
        &self.system
    }

    fn check_block(&self, block: &[usize]) -> Result<()> {
        if block.len() != self.system.arity {
            return Err(Error::BlockLengthMismatch {
                expected: self.system.arity,
                found: block.len(),
            });
        }
        check_symbols(block, self.system.order)
    }

    /// `v_i = f_i(u_1, …, u_n)`.
    pub fn encrypt(&self, block: &[usize]) -> Result<Vec<usize>> {
        self.check_block(block)?;
        Ok(self.system.ops.iter().map(|op| op.get(block)).collect())
    }

    pub fn decrypt(&self, block: &[usize]) -> Result<Vec<usize>> {
        self.check_block(block)?;
        let q = self.system.order;
        Ok(match &self.decryptor {
            Decryptor::Matrix(inv) => {
                let p = q as u64;
                inv.iter()
                    .map(|row| {
                        (row.iter()
                            .zip(block)
                            .map(|(&a, &v)| a * v as u64)
                            .sum::<u64>()
                            % p) as usize
                    })
                    .collect()
            }
            Decryptor::Table(inv) => {
                let idx = block.iter().fold(0, |acc, &v| acc * q + v);
                let mut out = vec![0; self.system.arity];
                let mut pre = inv[idx];
                for slot in out.iter_mut().rev() {
                    *slot = pre % q;
                    pre /= q;
                }
                out
            }
        })
    }

    /// Encrypts a message block by block; the length must be a multiple of the arity.
    pub fn encrypt_message(&self, msg: &[usize]) -> Result<Vec<usize>> {
        self.map_blocks(msg, Self::encrypt)
    }

    pub fn decrypt_message(&self, ct: &[usize]) -> Result<Vec<usize>> {
        self.map_blocks(ct, Self::decrypt)
    }

    fn map_blocks(
        &self,
        data: &[usize],
        f: fn(&Self, &[usize]) -> Result<Vec<usize>>,
    ) -> Result<Vec<usize>> {
        let n = self.system.arity;
        if data.len() % n != 0 {
            return Err(Error::BlockLengthMismatch {
                expected: n,
                found: data.len() % n,
            });
        }
        let mut out = Vec::with_capacity(data.len());
        for chunk in data.chunks(n) {
            out.extend(f(self, chunk)?);
        }
        Ok(out)
    }
}
