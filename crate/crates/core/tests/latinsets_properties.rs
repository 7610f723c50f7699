use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qgcrypt::latinsets::{
    completion_count, deal_shares, greedy_critical_search, is_critical, is_uniquely_completable,
    reconstruct, unique_completion, PartialLatinSquare,
};
use qgcrypt::qcore::generate_quasigroup;
use qgcrypt::{Error, Quasigroup};

/// Every Latin square of order `n` by naive row-by-row search.
fn all_squares(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cells: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cells.len();
        if i == n * n {
            out.push(cells.clone());
            return;
        }
        let (r, c) = (i / n, i % n);
        for s in 0..n {
            let row_ok = (0..c).all(|k| cells[r * n + k] != s);
            let col_ok = (0..r).all(|k| cells[k * n + c] != s);
            if row_ok && col_ok {
                cells.push(s);
                go(n, cells, out);
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn oracle_count(squares: &[Vec<usize>], n: usize, p: &PartialLatinSquare) -> u64 {
    squares
        .iter()
        .filter(|sq| p.entries().iter().all(|&(r, c, s)| sq[r * n + c] == s))
        .count() as u64
}

fn random_subset(q: &Quasigroup, keep: usize, seed: u64) -> PartialLatinSquare {
    let mut entries = PartialLatinSquare::from_quasigroup(q).unwrap().entries();
    entries.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    entries.truncate(keep);
    PartialLatinSquare::new(q.order(), &entries).unwrap()
}

#[test]
fn completion_counts_match_enumeration() {
    for n in 1..=4 {
        let squares = all_squares(n);
        for seed in 0..60 {
            let q = generate_quasigroup(n, seed);
            let keep = seed as usize % (n * n + 1);
            let p = random_subset(&q, keep, seed);
            let count = completion_count(&p, u64::MAX);
            assert_eq!(count, oracle_count(&squares, n, &p));
            assert_eq!(is_uniquely_completable(&p), count == 1);
            if count == 1 {
                assert_eq!(unique_completion(&p), Some(q.clone()));
            }
            // adding an entry never increases the count
            if let Some(&(r, c, _)) = q_entries_missing(&q, &p).first() {
                let mut more = p.clone();
                more.insert(r, c, q.get(r, c)).unwrap();
                assert!(completion_count(&more, u64::MAX) <= count);
            }
        }
    }
}

fn q_entries_missing(q: &Quasigroup, p: &PartialLatinSquare) -> Vec<(usize, usize, usize)> {
    PartialLatinSquare::from_quasigroup(q)
        .unwrap()
        .entries()
        .into_iter()
        .filter(|&(r, c, _)| p.get(r, c).is_none())
        .collect()
}

#[test]
fn completion_limit_caps_the_count() {
    let empty = PartialLatinSquare::empty(4).unwrap();
    assert_eq!(completion_count(&empty, u64::MAX), 576);
    assert_eq!(completion_count(&empty, 10), 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_sets_are_critical(n in 2usize..=6, qseed: u64, seed: u64) {
        let q = generate_quasigroup(n, qseed);
        let c = greedy_critical_search(&q, seed).unwrap();
        prop_assert!(c.is_subset_of(&q));
        prop_assert!(is_critical(&c, &q).unwrap());
        prop_assert_eq!(unique_completion(&c), Some(q.clone()));
        // every single removal loses uniqueness
        for (r, col, _) in c.entries() {
            let mut smaller = c.clone();
            smaller.remove(r, col);
            prop_assert!(!is_uniquely_completable(&smaller));
        }
    }

    #[test]
    fn all_shares_reconstruct(n in 2usize..=5, qseed: u64, seed: u64, k in 1usize..=4) {
        let q = generate_quasigroup(n, qseed);
        let c = greedy_critical_search(&q, seed).unwrap();
        let k = k.min(c.len());
        let deal = deal_shares(&q, &c, k, seed).unwrap();
        prop_assert_eq!(deal.shares.len(), k);
        prop_assert_eq!(deal.shares.iter().map(PartialLatinSquare::len).sum::<usize>(), c.len());
        prop_assert_eq!(reconstruct(n, &deal.shares).unwrap(), q.clone());
        if k > 1 {
            let partial = reconstruct(n, &deal.shares[1..]);
            let insufficient = matches!(partial, Err(Error::Insufficient));
            prop_assert!(insufficient);
        }
    }
}

#[test]
fn criticality_edge_cases() {
    let q = Quasigroup::cyclic(3);
    let full = PartialLatinSquare::from_quasigroup(&q).unwrap();
    assert!(!is_critical(&full, &q).unwrap());
    let empty = PartialLatinSquare::empty(3).unwrap();
    assert!(!is_critical(&empty, &q).unwrap());
    let foreign = PartialLatinSquare::new(3, &[(0, 0, 1), (1, 1, 2)]).unwrap();
    assert!(is_critical(&foreign, &q).is_err());
    assert!(matches!(
        deal_shares(&q, &full, 2, 0),
        Err(Error::NotCritical)
    ));
}
