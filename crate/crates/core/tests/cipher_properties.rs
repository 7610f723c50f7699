use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgcrypt::cipher::{
    decrypt_stream, decrypt_ternary, encrypt_stream, encrypt_ternary, q_transform, r1_transform,
    StreamKey, TernaryKey, TernaryVariant,
};
use qgcrypt::qcore::{generate_quasigroup, NAryQuasigroup};
use qgcrypt::qhash::{hash_continue, hash_fold, hash_multi, HashSpec};
use qgcrypt::Quasigroup;

/// All Latin squares of order 3.
fn order_three_squares() -> Vec<Quasigroup> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::new();
    for a in perms {
        for b in perms {
            for c in perms {
                if let Ok(q) = Quasigroup::from_rows(&[a.to_vec(), b.to_vec(), c.to_vec()]) {
                    out.push(q);
                }
            }
        }
    }
    out
}

#[test]
fn stream_round_trip_exhaustive_order_three() {
    let squares = order_three_squares();
    assert_eq!(squares.len(), 12);
    for q in squares {
        for leader in 0..3 {
            let key = StreamKey::new(q.clone(), leader).unwrap();
            for len in 0..=4u32 {
                for idx in 0..3usize.pow(len) {
                    let msg: Vec<usize> = (0..len).map(|i| idx / 3usize.pow(i) % 3).collect();
                    let ct = encrypt_stream(&key, &msg).unwrap();
                    assert_eq!(decrypt_stream(&key, &ct).unwrap(), msg);
                }
            }
        }
    }
}

#[test]
fn stream_round_trip_long_messages() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [2, 7, 16] {
        let key = StreamKey::new(generate_quasigroup(n, rng.gen()), rng.gen_range(0..n)).unwrap();
        let msg: Vec<usize> = (0..10_000).map(|_| rng.gen_range(0..n)).collect();
        assert_eq!(
            decrypt_stream(&key, &encrypt_stream(&key, &msg).unwrap()).unwrap(),
            msg
        );
    }
}

/// Independent re-statement of the chaining rule.
fn chain(q: &Quasigroup, leader: usize, msg: &[usize]) -> Vec<usize> {
    let mut prev = leader;
    let mut out = Vec::new();
    for &u in msg {
        prev = q.get(prev, u);
        out.push(prev);
    }
    out
}

proptest! {
    #[test]
    fn stream_round_trip(n in 1usize..=16, seed: u64, raw in proptest::collection::vec(any::<usize>(), 0..200)) {
        let q = generate_quasigroup(n, seed);
        let leader = seed as usize % n;
        let msg: Vec<usize> = raw.iter().map(|v| v % n).collect();
        let key = StreamKey::new(q.clone(), leader).unwrap();
        let ct = encrypt_stream(&key, &msg).unwrap();
        prop_assert_eq!(&ct, &chain(&q, leader, &msg));
        prop_assert_eq!(decrypt_stream(&key, &ct).unwrap(), msg.clone());
        prop_assert_eq!(q_transform(&q, leader, &msg).unwrap(), ct);
    }

    #[test]
    fn ternary_round_trip(n in 2usize..=5, seed: u64, raw in proptest::collection::vec(any::<usize>(), 0..60)) {
        let p = generate_quasigroup(n, seed);
        let q = generate_quasigroup(n, seed.wrapping_add(1));
        let beta = NAryQuasigroup::from_fn(3, n, |a| p.get(q.get(a[0], a[1]), a[2])).unwrap();
        let msg: Vec<usize> = raw.iter().map(|v| v % n).collect();
        let leaders = [0, 1, 2, 3].map(|i| (seed as usize >> (4 * i)) % n);
        for variant in TernaryVariant::ALL {
            let key = TernaryKey::new(beta.clone(), leaders, variant).unwrap();
            let ct = encrypt_ternary(&key, &msg).unwrap();
            prop_assert_eq!(ct.len(), msg.len());
            prop_assert_eq!(decrypt_ternary(&key, &ct).unwrap(), msg.clone());
        }
    }

    #[test]
    fn r1_is_a_composition_of_passes(n in 1usize..=8, seed: u64, raw in proptest::collection::vec(any::<usize>(), 1..12)) {
        let q = generate_quasigroup(n, seed);
        let input: Vec<usize> = raw.iter().map(|v| v % n).collect();
        let mut expected = input.clone();
        for &m in input.iter().rev() {
            expected = chain(&q, m, &expected);
        }
        prop_assert_eq!(r1_transform(&q, &input).unwrap(), expected);
        // a single-symbol input is one pass led by that symbol
        prop_assert_eq!(r1_transform(&q, &input[..1]).unwrap(), q_transform(&q, input[0], &input[..1]).unwrap());
    }

    #[test]
    fn hash_is_last_ciphertext_symbol(n in 1usize..=16, seed: u64, raw in proptest::collection::vec(any::<usize>(), 1..100)) {
        let q = generate_quasigroup(n, seed);
        let leader = (seed >> 7) as usize % n;
        let msg: Vec<usize> = raw.iter().map(|v| v % n).collect();
        let ct = encrypt_stream(&StreamKey::new(q.clone(), leader).unwrap(), &msg).unwrap();
        prop_assert_eq!(Some(&hash_fold(&HashSpec::new(q, leader).unwrap(), &msg).unwrap()), ct.last());
    }
}

#[test]
fn hash_prefix_composability_exhaustive() {
    let q = generate_quasigroup(4, 5);
    let spec = HashSpec::new(q, 1).unwrap();
    let messages: Vec<Vec<usize>> = (0..=3u32)
        .flat_map(|len| {
            (0..4usize.pow(len)).map(move |idx| (0..len).map(|i| idx / 4usize.pow(i) % 4).collect())
        })
        .collect();
    for a in &messages {
        for b in &messages {
            let whole: Vec<usize> = a.iter().chain(b).copied().collect();
            let mid = hash_fold(&spec, a).unwrap();
            assert_eq!(
                hash_fold(&spec, &whole).unwrap(),
                hash_continue(&spec, mid, b).unwrap()
            );
        }
    }
}

#[test]
fn sixteen_lane_digests_do_not_collide() {
    let q = generate_quasigroup(256, 2024);
    let lanes: Vec<usize> = (0..16).map(|i| i * 16 + 3).collect();
    let spec = HashSpec::new(q, 0)
        .unwrap()
        .with_digest_leaders(lanes)
        .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut messages = HashSet::new();
    while messages.len() < 100_000 {
        let len = rng.gen_range(1..=8);
        messages.insert(
            (0..len)
                .map(|_| rng.gen_range(0..256))
                .collect::<Vec<usize>>(),
        );
    }
    let digests: HashSet<Vec<usize>> = messages
        .iter()
        .map(|m| hash_multi(&spec, m).unwrap())
        .collect();
    assert_eq!(digests.len(), messages.len());
    assert!(digests.iter().all(|d| d.len() == 16));
}
