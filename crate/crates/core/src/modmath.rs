//! Small modular-arithmetic helpers shared by several schemes.

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

/// Row-reduces `rows` over `Z_p` and returns the determinant.
pub(crate) fn det_mod_p(rows: &[Vec<u64>], p: u64) -> u64 {
    let n = rows.len();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v % p).collect())
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = mod_inverse(m[col][col], p).expect("p is prime");
        for r in col + 1..n {
            let factor = m[r][col] * inv % p;
            if factor == 0 {
                continue;
            }
            for c in col..n {
                m[r][c] = (m[r][c] + p * p - factor * m[col][c] % p) % p;
            }
        }
    }
    det
}

/// Inverse of a square matrix over `Z_p` by Gauss-Jordan elimination.
pub(crate) fn inverse_mod_p(rows: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<u64> = r.iter().map(|v| v % p).collect();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| aug[r][col] != 0)?;
        aug.swap(pivot, col);
        let inv = mod_inverse(aug[col][col], p)?;
        for c in 0..2 * n {
            aug[col][c] = aug[col][c] * inv % p;
        }
        for r in 0..n {
            if r == col || aug[r][col] == 0 {
                continue;
            }
            let factor = aug[r][col];
            for c in 0..2 * n {
                aug[r][c] = (aug[r][c] + p * p - factor * aug[col][c] % p) % p;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The deterministic generator behind every seeded operation. Independent
/// parties in one simulation draw from distinct streams of the same seed.
pub(crate) fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
