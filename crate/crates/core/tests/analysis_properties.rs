use std::collections::HashMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgcrypt::mqq::{
    classify_mqq, quasigroup_to_vvbf, theorem1_generate, BooleanFunction, MqqVerdict,
};
use qgcrypt::nlpn::{
    berlekamp_massey, cyclic_shift, linear_complexity, nlpn_pair, pn_sequence,
    primitive_polynomial, Lfsr, SymbolSequence,
};
use qgcrypt::qcore::generate_quasigroup;
use qgcrypt::{Error, Quasigroup};

/// ANF coefficient of monomial `m`: XOR of f over all sub-masks of `m`.
fn naive_anf_degree(f: &BooleanFunction) -> usize {
    let vars = f.vars();
    (0..1usize << vars)
        .filter(|&m| {
            let mut acc = false;
            let mut s = m;
            loop {
                acc ^= f.eval(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
            acc
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// An isotope of `Z_n`, or for even `n` sometimes a product of two smaller ones.
fn random_latin(n: usize, rng: &mut ChaCha8Rng) -> Quasigroup {
    let a = generate_quasigroup(n, rng.gen());
    if n % 2 == 0 && rng.gen() {
        let half = generate_quasigroup(n / 2, rng.gen());
        let two = generate_quasigroup(2, rng.gen());
        let table = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                two.get(x / (n / 2), y / (n / 2)) * (n / 2) + half.get(x % (n / 2), y % (n / 2))
            })
            .collect();
        return Quasigroup::from_table(n, table).unwrap();
    }
    a
}

#[test]
fn vvbf_reproduces_the_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut verdicts: HashMap<String, usize> = HashMap::new();
    for _ in 0..1000 {
        let q = random_latin(8, &mut rng);
        let fs = quasigroup_to_vvbf(&q).unwrap();
        assert_eq!(fs.len(), 3);
        for a in 0..8 {
            for b in 0..8 {
                let v = q.get(a, b);
                for (k, f) in fs.iter().enumerate() {
                    let bit = v >> (2 - k) & 1 == 1;
                    assert_eq!(f.eval(a << 3 | b), bit);
                    assert_eq!(f.eval_anf(a << 3 | b), bit);
                }
            }
        }
        let degrees: Vec<usize> = fs.iter().map(naive_anf_degree).collect();
        let c = classify_mqq(&q).unwrap();
        assert_eq!(c.degrees, degrees);
        *verdicts.entry(c.verdict.to_string()).or_default() += 1;
    }
    assert!(verdicts.len() > 1, "{verdicts:?}");
}

#[test]
fn theorem1_outputs_are_mqqs() {
    for d in 2..=5 {
        for seed in 0..5 {
            let inst = theorem1_generate(d, seed, 10_000).unwrap();
            let q = &inst.quasigroup;
            assert_eq!(q.order(), 1 << d);
            assert!(Quasigroup::from_table(q.order(), q.table().to_vec()).is_ok());
            assert_eq!(classify_mqq(q).unwrap(), inst.classification);
            let fs = quasigroup_to_vvbf(q).unwrap();
            let degrees: Vec<usize> = fs.iter().map(naive_anf_degree).collect();
            assert!(
                degrees.iter().all(|&g| (1..=2).contains(&g)),
                "d={d} {degrees:?}"
            );
            assert!(degrees.contains(&2));
            assert!(matches!(
                inst.classification.verdict,
                MqqVerdict::Quad { .. }
            ));
            assert_eq!(theorem1_generate(d, seed, 10_000).unwrap(), inst);
        }
    }
    assert!(matches!(
        theorem1_generate(1, 0, 10),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        theorem1_generate(3, 0, 0),
        Err(Error::Exhausted(0))
    ));
}

#[test]
fn pn_sequences_have_the_window_property() {
    for p in [2u64, 3, 5] {
        for m in 1..=4 {
            let coeffs = primitive_polynomial(p, m).unwrap();
            let seq = pn_sequence(&Lfsr::new(p, coeffs).unwrap()).unwrap();
            let s = seq.symbols();
            assert_eq!(s.len() as u64, p.pow(m as u32) - 1);
            // every nonzero m-tuple appears once as a cyclic window
            let mut seen = HashMap::new();
            for i in 0..s.len() {
                let window: Vec<usize> = (0..m).map(|j| s[(i + j) % s.len()]).collect();
                *seen.entry(window).or_insert(0) += 1;
            }
            assert_eq!(seen.len(), s.len());
            assert!(seen.values().all(|&c| c == 1));
            assert!(!seen.contains_key(&vec![0; m]));
            assert_eq!(linear_complexity(&seq).unwrap(), m);
        }
    }
}

#[test]
fn non_primitive_register_is_refused() {
    // x^2 + 1 over GF(2) has period 2, not 3
    assert!(matches!(
        pn_sequence(&Lfsr::new(2, vec![0, 1]).unwrap()),
        Err(Error::NotPrimitive { expected: 3, .. })
    ));
}

fn sequence(p: u64) -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(0..p, 0..80)
}

proptest! {
    #[test]
    fn bm_regenerates_binary(s in sequence(2)) { check_bm(&s, 2)?; }

    #[test]
    fn bm_regenerates_ternary(s in sequence(3)) { check_bm(&s, 3)?; }

    #[test]
    fn bm_regenerates_mod_seven(s in sequence(7)) { check_bm(&s, 7)?; }

    #[test]
    fn nlpn_pair_shapes(p in prop::sample::select(vec![2u64, 3, 5]), m in 1usize..=4, shift in 0usize..200, seed: u64) {
        let a = pn_sequence(&Lfsr::new(p, primitive_polynomial(p, m).unwrap()).unwrap()).unwrap();
        let q = generate_quasigroup(p as usize, seed);
        let (b, c) = nlpn_pair(&a, shift, &q).unwrap();
        let shifted = cyclic_shift(&a, shift);
        prop_assert_eq!(b.len(), a.len());
        prop_assert_eq!(c.len(), a.len());
        for j in 0..a.len() {
            prop_assert_eq!(b.symbols()[j], q.get(a.symbols()[j], a.symbols()[(j + shift) % a.len()]));
            prop_assert_eq!(c.symbols()[j], q.get(shifted.symbols()[j], a.symbols()[j]));
        }
        let wrong = generate_quasigroup(p as usize + 1, seed);
        let mismatch = matches!(nlpn_pair(&a, shift, &wrong), Err(Error::OrderMismatch { .. }));
        prop_assert!(mismatch);
    }
}

fn check_bm(s: &[u64], p: u64) -> Result<(), TestCaseError> {
    let rec = berlekamp_massey(s, p).unwrap();
    prop_assert_eq!(rec.connection.len(), rec.length + 1);
    prop_assert!(rec.length <= s.len());
    let seed = &s[..rec.length.min(s.len())];
    prop_assert_eq!(rec.generate(seed, s.len()), s.to_vec());
    // complexity never drops as the sequence grows
    if let Some((_, prefix)) = s.split_last() {
        prop_assert!(berlekamp_massey(prefix, p).unwrap().length <= rec.length);
    }
    let seq = SymbolSequence::new(p as usize, s.iter().map(|&v| v as usize).collect()).unwrap();
    prop_assert_eq!(linear_complexity(&seq).unwrap(), rec.length);
    Ok(())
}
