use rand::Rng;

use super::{classify_mqq, MqqClassification};
use crate::error::{Error, Result};
use crate::modmath::seeded_rng;
use crate::qcore::Quasigroup;

/// A generated multivariate quadratic quasigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MqqInstance {
    pub quasigroup: Quasigroup,
    pub classification: MqqClassification,
    /// 1-based index of the accepted attempt.
    pub attempts: u64,
}

/// Bilinear-plus-affine data of one candidate.
///
/// With vectors indexed `0..d` (component `k` is bit `d-1-k` of a symbol):
/// `A1(x)[i][j] = C[i][j] + Σ_k T[i][j][k]·x_k`, `b1(x)_i = κ_i + Σ_k E[i][k]·x_k`,
/// `A2(y)[i][k] = E[i][k] + Σ_j T[i][j][k]·y_j`, `b2(y)_i = κ_i + Σ_j C[i][j]·y_j`,
/// so `A1(x)·y + b1(x) = A2(y)·x + b2(y)` holds identically.
struct Candidate {
    d: usize,
    c: Vec<u32>,
    e: Vec<u32>,
    kappa: u32,
    /// `t[i][j]` is the mask over `k`.
    t: Vec<Vec<u32>>,
}

fn component(v: usize, k: usize, d: usize) -> u32 {
    (v >> (d - 1 - k) & 1) as u32
}

fn det_gf2(mut rows: Vec<u32>) -> bool {
    let n = rows.len();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| rows[r] >> col & 1 == 1) else {
            return false;
        };
        rows.swap(col, pivot);
        for r in col + 1..n {
            if rows[r] >> col & 1 == 1 {
                rows[r] ^= rows[col];
            }
        }
    }
    true
}

impl Candidate {
    fn sample<R: Rng>(d: usize, rng: &mut R) -> Self {
        let density = 1.5 / (d * d * d) as f64;
        let full = (1u32 << d) - 1;
        Self {
            d,
            c: (0..d).map(|_| rng.gen::<u32>() & full).collect(),
            e: (0..d).map(|_| rng.gen::<u32>() & full).collect(),
            kappa: rng.gen::<u32>() & full,
            t: (0..d)
                .map(|_| {
                    (0..d)
                        .map(|_| (0..d).fold(0, |m, k| m | (rng.gen_bool(density) as u32) << k))
                        .collect()
                })
                .collect(),
        }
    }

    /// Row `i` of `A1(x)` as a mask over `j`.
    fn a1_row(&self, x: usize, i: usize) -> u32 {
        (0..self.d).fold(self.c[i], |row, j| {
            let v = (0..self.d)
                .map(|k| self.t[i][j] >> k & component(x, k, self.d))
                .fold(0, |a, b| a ^ b);
            row ^ v << j
        })
    }

    /// Row `i` of `A2(y)` as a mask over `k`.
    fn a2_row(&self, y: usize, i: usize) -> u32 {
        (0..self.d).fold(self.e[i], |row, j| {
            if component(y, j, self.d) == 1 {
                row ^ self.t[i][j]
            } else {
                row
            }
        })
    }

    fn determinants_are_one(&self) -> bool {
        (0..1usize << self.d).all(|v| {
            det_gf2((0..self.d).map(|i| self.a1_row(v, i)).collect())
                && det_gf2((0..self.d).map(|i| self.a2_row(v, i)).collect())
        })
    }

    fn mat_vec(&self, row: impl Fn(usize) -> u32, v: usize, offset: u32) -> usize {
        let d = self.d;
        let vmask = (0..d).fold(0u32, |m, k| m | component(v, k, d) << k);
        (0..d).fold(0usize, |z, i| {
            let bit = ((row(i) & vmask).count_ones() & 1) ^ (offset >> i & 1);
            z | (bit as usize) << (d - 1 - i)
        })
    }

    fn b1_mask(&self, x: usize) -> u32 {
        let d = self.d;
        let xmask = (0..d).fold(0u32, |m, k| m | component(x, k, d) << k);
        (0..d).fold(self.kappa, |b, i| {
            b ^ ((self.e[i] & xmask).count_ones() & 1) << i
        })
    }

    #[cfg(test)]
    fn b2_mask(&self, y: usize) -> u32 {
        let d = self.d;
        let ymask = (0..d).fold(0u32, |m, j| m | component(y, j, d) << j);
        (0..d).fold(self.kappa, |b, i| {
            b ^ ((self.c[i] & ymask).count_ones() & 1) << i
        })
    }

    /// `A1(x)·y + b1(x)`.
    fn left_form(&self, x: usize, y: usize) -> usize {
        self.mat_vec(|i| self.a1_row(x, i), y, self.b1_mask(x))
    }

    /// `A2(y)·x + b2(y)`.
    #[cfg(test)]
    fn right_form(&self, x: usize, y: usize) -> usize {
        self.mat_vec(|i| self.a2_row(y, i), x, self.b2_mask(y))
    }

    fn table(&self) -> Vec<usize> {
        let n = 1usize << self.d;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| self.left_form(x, y))
            .collect()
    }
}

/// Searches for an MQQ of order `2^d` built from matrices of affine Boolean
/// forms with `Det(A1) = Det(A2) = 1`, `2 ≤ d ≤ 5`.
///
/// Candidates share one bilinear tensor between `A1` and `A2`, which makes the
/// compatibility identity hold by construction; the tensor is sparse so that
/// the determinant condition is met often enough to search. Each accepted
/// table is re-validated as a quasigroup and classified.
pub fn theorem1_generate(d: usize, seed: u64, max_attempts: u64) -> Result<MqqInstance> {
    if !(2..=5).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "d must be in 2..=5, got {d}"
        )));
    }
    let mut rng = seeded_rng(seed, 0);
    for attempt in 1..=max_attempts {
        let cand = Candidate::sample(d, &mut rng);
        if !cand.determinants_are_one() {
            continue;
        }
        let Ok(q) = Quasigroup::from_table(1 << d, cand.table()) else {
            continue;
        };
        let classification = classify_mqq(&q)?;
        if classification.is_mqq() {
            return Ok(MqqInstance {
                quasigroup: q,
                classification,
                attempts: attempt,
            });
        }
    }
    Err(Error::Exhausted(max_attempts))
}
