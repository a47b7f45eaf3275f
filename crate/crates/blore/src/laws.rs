//! Checks of the reversal and concatenation laws of block reversal.

use std::collections::BTreeSet;

use blore_core::{enumerate_br, Limits, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::shard::map_ordered;
use crate::verifier::words_of_length;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawConfig {
    /// Number of random `(u, v)` pairs for the concatenation law.
    pub samples: usize,
    /// Every binary word up to this length is checked against the reversal law.
    pub reversal_max_len: usize,
    /// Upper bound on `|uv|` for sampled pairs.
    pub pair_max_len: usize,
    /// Sampled pairs use alphabets of size `1..=pair_max_alphabet`.
    pub pair_max_alphabet: usize,
    pub seed: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            samples: 1000,
            reversal_max_len: 10,
            pair_max_len: 16,
            pair_max_alphabet: 3,
            seed: 0,
        }
    }
}

/// `u·v` for which some `y·x` with `y` in `BR(v)`, `x` in `BR(u)` is
/// missing from `BR(uv)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcatViolation {
    pub u: String,
    pub v: String,
    pub product: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub config: LawConfig,
    pub reversal_words_checked: u64,
    pub reversal_violations: Vec<String>,
    pub pairs_checked: u64,
    pub products_checked: u64,
    pub concatenation_violations: Vec<ConcatViolation>,
}

impl LawReport {
    pub fn is_clean(&self) -> bool {
        self.reversal_violations.is_empty() && self.concatenation_violations.is_empty()
    }
}

fn br(w: &Word) -> BTreeSet<Word> {
    enumerate_br(w, Limits::new(w.len()))
        .expect("limit is the word length")
        .into_elements()
}

/// Does `{v^R : v in BR(w)} = BR(w^R)` hold?
pub fn reversal_law_holds(w: &Word) -> bool {
    let reversed: BTreeSet<Word> = br(w).iter().map(Word::reverse).collect();
    reversed == br(&w.reverse())
}

/// Products `y·x` (`y` in `BR(v)`, `x` in `BR(u)`) missing from `BR(uv)`,
/// together with the number of products tested.
pub fn concatenation_law_failures(u: &Word, v: &Word) -> (Vec<Word>, u64) {
    let whole = br(&u.concat(v));
    let (bu, bv) = (br(u), br(v));
    let mut missing = Vec::new();
    for y in &bv {
        for x in &bu {
            let product = y.concat(x);
            if !whole.contains(&product) {
                missing.push(product);
            }
        }
    }
    (missing, (bu.len() * bv.len()) as u64)
}

/// The `i`-th pair is a pure function of the seed, so reports do not depend
/// on how pairs are spread over workers.
pub fn sample_pairs(config: &LawConfig) -> Vec<(Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.samples)
        .map(|_| {
            let k = rng.random_range(1..=config.pair_max_alphabet.max(1));
            let total = rng.random_range(0..=config.pair_max_len);
            let split = rng.random_range(0..=total);
            let mut letters = |n: usize| -> Word {
                let ids: Vec<u8> = (0..n).map(|_| rng.random_range(0..k) as u8).collect();
                Word::from_ids(&ids, k).expect("ids are below k")
            };
            let u = letters(split);
            let v = letters(total - split);
            (u, v)
        })
        .collect()
}

pub fn check_identity_laws(config: LawConfig, jobs: usize) -> LawReport {
    let lengths: Vec<usize> = (0..=config.reversal_max_len).collect();
    let per_length = map_ordered(&lengths, jobs, |&n| {
        let mut checked = 0u64;
        let mut bad = Vec::new();
        for w in words_of_length(2, n) {
            checked += 1;
            if !reversal_law_holds(&w) {
                bad.push(w.to_plain_string());
            }
        }
        (checked, bad)
    });

    let pairs = sample_pairs(&config);
    let per_pair = map_ordered(&pairs, jobs, |(u, v)| {
        let (missing, products) = concatenation_law_failures(u, v);
        let violations: Vec<ConcatViolation> = missing
            .into_iter()
            .map(|p| ConcatViolation {
                u: u.to_plain_string(),
                v: v.to_plain_string(),
                product: p.to_plain_string(),
            })
            .collect();
        (products, violations)
    });

    let mut report = LawReport {
        config,
        reversal_words_checked: 0,
        reversal_violations: Vec::new(),
        pairs_checked: pairs.len() as u64,
        products_checked: 0,
        concatenation_violations: Vec::new(),
    };
    for (checked, bad) in per_length {
        report.reversal_words_checked += checked;
        report.reversal_violations.extend(bad);
    }
    for (products, violations) in per_pair {
        report.products_checked += products;
        report.concatenation_violations.extend(violations);
    }
    report
}
