use std::collections::BTreeSet;

use blore::laws::{check_identity_laws, LawConfig};
use blore::verifier::{sweep, words_of_length, SweepBounds, SweepSpec};
use blore_core::{br_contains, br_count, classify, is_rich, oracle_all_rich, Limits, RuleId, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(k: usize, lo: usize, hi: usize) -> SweepSpec {
    SweepSpec {
        alphabet_size: k,
        min_len: lo,
        max_len: hi,
    }
}

#[test]
fn oracle_results_are_self_consistent() {
    for n in 1..=10 {
        for w in words_of_length(2, n) {
            let r = oracle_all_rich(&w, Limits::default()).unwrap();
            match &r.witness {
                Some(v) => {
                    assert!(!r.all_rich);
                    assert!(br_contains(&w, v) && !is_rich(v), "{w} {v}");
                }
                None => {
                    assert!(r.all_rich);
                    let count = br_count(&w, Limits::default()).unwrap() as u64;
                    assert_eq!(r.elements_checked, count, "{w}");
                }
            }
        }
    }
}

#[test]
fn sweep_does_not_depend_on_jobs() {
    let mut one = sweep(spec(3, 1, 8), SweepBounds::DEFAULT, 1).unwrap();
    for jobs in [2, 3, 7] {
        let mut many = sweep(spec(3, 1, 8), SweepBounds::DEFAULT, jobs).unwrap();
        many.wall_time_ms = 0;
        one.wall_time_ms = 0;
        assert_eq!(many, one);
    }
}

#[test]
fn binary_length_eight_matches_table_count() {
    let r = sweep(spec(2, 8, 8), SweepBounds::DEFAULT, 0).unwrap();
    assert!(r.is_clean());
    let table_hits = words_of_length(2, 8)
        .filter(|w| {
            let v = classify(w);
            v.matched_form.is_some() || matches!(v.rule, RuleId::BinaryL2 | RuleId::Unary)
        })
        .count() as u64;
    assert_eq!(r.counts[0].all_rich_count, table_hits);
    assert_eq!(table_hits, 156);
}

#[test]
fn ternary_words_using_every_letter() {
    let r = sweep(spec(3, 1, 10), SweepBounds::DEFAULT, 0).unwrap();
    assert!(r.is_clean());
    for n in 1..=9 {
        for w in words_of_length(3, n).filter(|w| w.alph().len() == 3) {
            assert_eq!(classify(&w).all_rich, n == 3, "{w}");
        }
    }
    // words over at most two of the three letters behave like binary words
    let binary: Vec<u64> = sweep(spec(2, 1, 10), SweepBounds::DEFAULT, 0)
        .unwrap()
        .all_rich_counts();
    for (n, (&ternary, &b)) in (1..).zip(r.all_rich_counts().iter().zip(&binary)) {
        let distinct = if n == 3 { 6 } else { 0 };
        assert_eq!(ternary, 3 * (b - 2) + 3 + distinct, "length {n}");
    }
}

#[test]
fn quaternary_sweep_is_clean() {
    let r = sweep(spec(4, 1, 8), SweepBounds::DEFAULT, 0).unwrap();
    assert!(r.is_clean(), "{:?}", r.mismatches);
    assert_eq!(r.words_checked, (1..=8).map(|n| 4u64.pow(n)).sum::<u64>());
}

/// `a1^n1 a2 u v` with `u` over `{a1, a2}` and `v` over other letters.
fn two_letter_head(rng: &mut ChaCha8Rng) -> Word {
    let k = rng.random_range(3..=6usize);
    let a1 = rng.random_range(0..k) as u8;
    let a2 = loop {
        let c = rng.random_range(0..k) as u8;
        if c != a1 {
            break c;
        }
    };
    let fresh: Vec<u8> = (0..k as u8).filter(|c| *c != a1 && *c != a2).collect();
    let mut ids = vec![a1; rng.random_range(1..=4)];
    ids.push(a2);
    for _ in 0..rng.random_range(1..=5) {
        ids.push(if rng.random_bool(0.5) { a1 } else { a2 });
    }
    for _ in 0..rng.random_range(1..=4) {
        ids.push(fresh[rng.random_range(0..fresh.len())]);
    }
    Word::from_ids(&ids, k).unwrap()
}

#[test]
fn two_letter_head_with_fresh_tail_is_never_all_rich() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let samples: BTreeSet<Word> = (0..300).map(|_| two_letter_head(&mut rng)).collect();
    assert!(samples.len() >= 200);
    for w in &samples {
        assert!(!classify(w).all_rich, "{w}");
        let r = oracle_all_rich(w, Limits::default()).unwrap();
        assert!(!r.all_rich, "{w}");
        let v = r.witness.unwrap();
        assert!(br_contains(w, &v) && !is_rich(&v));
    }
}

#[test]
fn identity_laws_are_seed_stable() {
    let config = LawConfig {
        samples: 200,
        seed: 99,
        ..LawConfig::default()
    };
    let a = check_identity_laws(config, 1);
    assert!(a.is_clean());
    assert_eq!(a, check_identity_laws(config, 0));
    assert_eq!(a.reversal_words_checked, 2047);
}
