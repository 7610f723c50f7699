use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A bijection on `0..size`, stored in image form: `images[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut seen = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(Error::NotPermutation(format!(
                    "image {y} of {x} is not below {n}"
                )));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::NotPermutation(format!("image {y} occurs twice")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..size).collect();
        images.shuffle(rng);
        Self { images }
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    /// `self^e`; negative exponents use the inverse. Computed cycle by cycle.
    pub fn pow(&self, e: i64) -> Self {
        let mut out = vec![0; self.size()];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = e.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                out[x] = cycle[(i + shift) % cycle.len()];
            }
        }
        Self { images: out }
    }

    /// Disjoint cycles, each starting at its smallest element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut cycles = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The cycle through `x`, starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.images[x];
        while y != x {
            cycle.push(y);
            y = self.images[y];
        }
        cycle
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert_eq!(Permutation::new(vec![]), Err(Error::EmptyOrder));
    }

    #[test]
    fn order_by_cycles_matches_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..9 {
            let p = Permutation::random(n, &mut rng);
            let mut q = p.clone();
            let mut k = 1u128;
            while !q.is_identity() {
                q = p.compose(&q).unwrap();
                k += 1;
            }
            assert_eq!(p.order(), k);
        }
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = Permutation::random(7, &mut rng);
        let mut acc = Permutation::identity(7);
        for e in 0..15 {
            assert_eq!(p.pow(e), acc);
            assert_eq!(p.pow(-e), acc.inverse());
            acc = p.compose(&acc).unwrap();
        }
    }

    #[test]
    fn compose_order() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![0, 2, 1]).unwrap();
        // (a ∘ b)(1) = a(b(1)) = a(2) = 0
        assert_eq!(a.compose(&b).unwrap().apply(1), 0);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_listing() {
        let p = Permutation::new(vec![0, 2, 4, 1, 3]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0], vec![1, 2, 4, 3]]);
        assert_eq!(p.cycle_of(4), vec![4, 3, 1, 2]);
    }
}
