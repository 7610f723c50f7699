use super::perm::Permutation;
use super::quasigroup::Quasigroup;
use crate::error::{Error, Result};

/// An arbitrary `k`-ary operation on `0..n`, stored as a flat table indexed
/// by the argument tuple read as a base-`n` number (first argument most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NAryOperation {
    arity: usize,
    order: usize,
    values: Vec<usize>,
}

/// Read-only access shared by every operation table.
pub trait OperationTable {
    fn arity(&self) -> usize;
    fn order(&self) -> usize;
    fn values(&self) -> &[usize];
}

impl NAryOperation {
    pub fn new(arity: usize, order: usize, values: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        if arity == 0 {
            return Err(Error::InvalidArgument("arity must be positive".into()));
        }
        let len = table_len(arity, order)?;
        if values.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "{} values for arity {arity} order {order}, expected {len}",
                values.len()
            )));
        }
        if let Some((position, &symbol)) = values.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol,
                order,
            });
        }
        Ok(Self {
            arity,
            order,
            values,
        })
    }

    /// Tabulates `f` over every argument tuple.
    pub fn from_fn(arity: usize, order: usize, f: impl Fn(&[usize]) -> usize) -> Result<Self> {
        let len = table_len(arity, order)?;
        let mut args = vec![0; arity];
        let mut values = Vec::with_capacity(len);
        for idx in 0..len {
            decode_into(idx, order, &mut args);
            values.push(f(&args));
        }
        Self::new(arity, order, values)
    }

    pub fn get(&self, args: &[usize]) -> usize {
        self.values[self.index(args)]
    }

    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        args.iter().fold(0, |acc, &a| acc * self.order + a)
    }

    /// The argument position whose induced unary maps are not all bijective, if any.
    pub fn first_non_bijective_position(&self) -> Option<usize> {
        let n = self.order;
        let k = self.arity;
        let mut seen = vec![usize::MAX; n];
        let mut stamp = 0;
        let mut args = vec![0; k];
        for pos in 0..k {
            let stride = n.pow((k - 1 - pos) as u32);
            // Enumerate tuples with args[pos] = 0, then sweep args[pos].
            for base in 0..self.values.len() {
                decode_into(base, n, &mut args);
                if args[pos] != 0 {
                    continue;
                }
                for v in 0..n {
                    let s = self.values[base + v * stride];
                    if seen[s] == stamp {
                        return Some(pos);
                    }
                    seen[s] = stamp;
                }
                stamp += 1;
            }
        }
        None
    }
}

impl OperationTable for NAryOperation {
    fn arity(&self) -> usize {
        self.arity
    }
    fn order(&self) -> usize {
        self.order
    }
    fn values(&self) -> &[usize] {
        &self.values
    }
}

impl OperationTable for Quasigroup {
    fn arity(&self) -> usize {
        2
    }
    fn order(&self) -> usize {
        Quasigroup::order(self)
    }
    fn values(&self) -> &[usize] {
        self.table()
    }
}

/// A `k`-ary quasigroup: fixing any `k − 1` arguments leaves a bijection in the remaining one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NAryQuasigroup {
    op: NAryOperation,
}

impl NAryQuasigroup {
    pub fn new(op: NAryOperation) -> Result<Self> {
        if op.arity < 2 {
            return Err(Error::InvalidArgument(
                "an n-ary quasigroup needs arity at least 2".into(),
            ));
        }
        match op.first_non_bijective_position() {
            Some(position) => Err(Error::NotNAryQuasigroup { position }),
            None => Ok(Self { op }),
        }
    }

    pub fn from_fn(arity: usize, order: usize, f: impl Fn(&[usize]) -> usize) -> Result<Self> {
        Self::new(NAryOperation::from_fn(arity, order, f)?)
    }

    pub fn operation(&self) -> &NAryOperation {
        &self.op
    }

    pub fn get(&self, args: &[usize]) -> usize {
        self.op.get(args)
    }

    /// The σ-parastrophe, σ a permutation of the `k + 1` places
    /// `(x_1, …, x_k, f(x_1, …, x_k))`: the result maps
    /// `(t[σ(1)], …, t[σ(k)])` to `t[σ(k+1)]`.
    pub fn parastrophe(&self, sigma: &Permutation) -> Result<Self> {
        let k = self.op.arity;
        if sigma.size() != k + 1 {
            return Err(Error::SizeMismatch {
                left: sigma.size(),
                right: k + 1,
            });
        }
        let n = self.op.order;
        let mut values = vec![0; self.op.values.len()];
        let mut t = vec![0; k + 1];
        let mut target = vec![0; k];
        for idx in 0..self.op.values.len() {
            decode_into(idx, n, &mut t[..k]);
            t[k] = self.op.values[idx];
            for (slot, place) in target.iter_mut().zip(sigma.images()) {
                *slot = t[*place];
            }
            let dst = target.iter().fold(0, |acc, &a| acc * n + a);
            values[dst] = t[sigma.apply(k)];
        }
        Ok(Self {
            op: NAryOperation {
                arity: k,
                order: n,
                values,
            },
        })
    }

    /// The transposition `(i j)` of places, 1-based as usually written.
    pub fn transposition(arity: usize, i: usize, j: usize) -> Result<Permutation> {
        if i == 0 || j == 0 || i > arity + 1 || j > arity + 1 {
            return Err(Error::InvalidArgument(format!(
                "({i}{j}) is not a place permutation"
            )));
        }
        let mut images: Vec<usize> = (0..=arity).collect();
        images.swap(i - 1, j - 1);
        Permutation::new(images)
    }
}

impl From<&Quasigroup> for NAryQuasigroup {
    fn from(q: &Quasigroup) -> Self {
        Self {
            op: NAryOperation {
                arity: 2,
                order: q.order(),
                values: q.table().to_vec(),
            },
        }
    }
}

impl OperationTable for NAryQuasigroup {
    fn arity(&self) -> usize {
        self.op.arity
    }
    fn order(&self) -> usize {
        self.op.order
    }
    fn values(&self) -> &[usize] {
        &self.op.values
    }
}

fn table_len(arity: usize, order: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| order.checked_pow(a))
        .filter(|&len| len <= 1 << 28)
        .ok_or_else(|| Error::TooLarge(format!("{order}^{arity} table entries")))
}

fn decode_into(mut idx: usize, order: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ternary(order: usize, f: impl Fn(usize, usize, usize) -> usize) -> NAryQuasigroup {
        NAryQuasigroup::from_fn(3, order, |a| f(a[0], a[1], a[2])).unwrap()
    }

    #[test]
    fn xor3_is_self_parastrophic() {
        let b = ternary(2, |x, y, z| (x + y + z) % 2);
        let t14 = NAryQuasigroup::transposition(3, 1, 4).unwrap();
        assert_eq!(b.parastrophe(&t14).unwrap(), b);
    }

    #[test]
    fn parastrophe_inverts_first_slot() {
        let b = ternary(3, |x, y, z| (x + 2 * y + z) % 3);
        let inv = b
            .parastrophe(&NAryQuasigroup::transposition(3, 1, 4).unwrap())
            .unwrap();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(inv.get(&[b.get(&[x, y, z]), y, z]), x);
                }
            }
        }
        assert!(NAryQuasigroup::new(inv.operation().clone()).is_ok());
    }

    #[test]
    fn transpositions_are_involutions() {
        let b = ternary(4, |x, y, z| (3 * x + y + (z ^ 1)) % 4);
        for i in 1..=4 {
            for j in i + 1..=4 {
                let t = NAryQuasigroup::transposition(3, i, j).unwrap();
                let once = b.parastrophe(&t).unwrap();
                assert_eq!(once.parastrophe(&t).unwrap(), b);
            }
        }
    }

    #[test]
    fn rejects_non_quasigroups() {
        let op = NAryOperation::from_fn(3, 3, |a| (a[0] + a[1]) % 3).unwrap();
        assert_eq!(
            NAryQuasigroup::new(op),
            Err(Error::NotNAryQuasigroup { position: 2 })
        );
        let op = NAryOperation::from_fn(2, 3, |a| (a[0] * a[1]) % 3).unwrap();
        assert_eq!(
            NAryQuasigroup::new(op),
            Err(Error::NotNAryQuasigroup { position: 0 })
        );
    }

    #[test]
    fn binary_view_agrees() {
        let q = Quasigroup::cyclic(5);
        let b = NAryQuasigroup::from(&q);
        assert_eq!(b.get(&[3, 4]), 2);
        let sw = NAryQuasigroup::transposition(2, 2, 3).unwrap();
        assert_eq!(
            b.parastrophe(&sw).unwrap().values(),
            q.left_division().table()
        );
    }
}
