//! Exhaustive classifier-versus-oracle sweeps and per-length counts.

use std::time::{Duration, Instant};

use blore_core::classifier::Classifier;
use blore_core::{oracle_all_rich, Limits, OracleResult, Verdict, Word};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shard::map_ordered;

/// Words per unit of work handed to a worker.
const CHUNK: u64 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub alphabet_size: usize,
    pub min_len: usize,
    pub max_len: usize,
}

/// How far an exhaustive sweep may go.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_len: usize,
    /// Upper bound on the number of words of the longest swept length.
    pub max_words_per_length: u64,
}

impl SweepBounds {
    pub const DEFAULT: SweepBounds = SweepBounds {
        max_len: 14,
        max_words_per_length: 1 << 16,
    };
    pub const EXTENDED: SweepBounds = SweepBounds {
        max_len: 16,
        max_words_per_length: 1 << 20,
    };

    pub fn check(&self, spec: &SweepSpec) -> Result<()> {
        let k = spec.alphabet_size;
        if !(1..=blore_core::word::MAX_ALPHABET).contains(&k) {
            return Err(Error::Input(format!("alphabet size {k} is not in 1..=26")));
        }
        if spec.min_len > spec.max_len {
            return Err(Error::Input(format!(
                "min length {} exceeds max length {}",
                spec.min_len, spec.max_len
            )));
        }
        let words = (k as u64).checked_pow(spec.max_len as u32);
        if spec.max_len > self.max_len || words.is_none_or(|n| n > self.max_words_per_length) {
            return Err(Error::Resource(format!(
                "sweep of length {} over {k} letters exceeds the bound (length <= {}, at most {} words per length)",
                spec.max_len, self.max_len, self.max_words_per_length
            )));
        }
        Ok(())
    }
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds::DEFAULT
    }
}

/// A word on which the classifier and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub word: String,
    pub classifier_all_rich: bool,
    pub rule: String,
    pub matched_form: Option<String>,
    pub oracle_all_rich: bool,
    pub witness: Option<String>,
    pub elements_checked: u64,
}

impl Mismatch {
    pub fn new(w: &Word, verdict: &Verdict, oracle: &OracleResult) -> Mismatch {
        Mismatch {
            word: w.to_plain_string(),
            classifier_all_rich: verdict.all_rich,
            rule: verdict.rule.as_str().to_string(),
            matched_form: verdict.matched_form.map(|f| f.to_string()),
            oracle_all_rich: oracle.all_rich,
            witness: oracle.witness.as_ref().map(Word::to_plain_string),
            elements_checked: oracle.elements_checked,
        }
    }
}

/// One row per swept length; this is also the CSV schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCount {
    pub length: usize,
    pub total_words: u64,
    pub all_rich_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    pub words_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// All-rich counts according to the classifier.
    pub counts: Vec<LengthCount>,
    /// All-rich counts according to the oracle.
    pub oracle_counts: Vec<LengthCount>,
    pub wall_time_ms: u64,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.counts == self.oracle_counts
    }

    pub fn wall_time(&self) -> Duration {
        Duration::from_millis(self.wall_time_ms)
    }

    pub fn all_rich_counts(&self) -> Vec<u64> {
        self.counts.iter().map(|c| c.all_rich_count).collect()
    }
}

/// The word with base-`k` digits of `index`, most significant first, so
/// that increasing indices give lexicographic order.
pub fn word_at(mut index: u64, len: usize, k: usize) -> Word {
    let mut ids = vec![0u8; len];
    for slot in ids.iter_mut().rev() {
        *slot = (index % k as u64) as u8;
        index /= k as u64;
    }
    Word::from_ids(&ids, k).expect("digits are below the alphabet size")
}

/// Every word of length `len` over `k` letters, in lexicographic order.
pub fn words_of_length(k: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (k as u64).pow(len as u32);
    (0..total).map(move |i| word_at(i, len, k))
}

struct Chunk {
    length: usize,
    start: u64,
    end: u64,
}

#[derive(Default)]
struct Tally {
    classifier: u64,
    oracle: u64,
    mismatches: Vec<Mismatch>,
}

fn check_chunk(c: &Chunk, k: usize, classifier: &Classifier) -> Result<Tally> {
    let limits = Limits::new(c.length);
    let mut tally = Tally::default();
    for i in c.start..c.end {
        let w = word_at(i, c.length, k);
        let verdict = classifier.classify(&w);
        let oracle = oracle_all_rich(&w, limits)?;
        tally.classifier += verdict.all_rich as u64;
        tally.oracle += oracle.all_rich as u64;
        if verdict.all_rich != oracle.all_rich {
            tally.mismatches.push(Mismatch::new(&w, &verdict, &oracle));
        }
    }
    Ok(tally)
}

/// Classifies and oracle-checks every word with length in
/// `min_len..=max_len`. The report does not depend on `jobs` apart from
/// `wall_time_ms`; `jobs = 0` uses every available core.
pub fn sweep(spec: SweepSpec, bounds: SweepBounds, jobs: usize) -> Result<SweepReport> {
    bounds.check(&spec)?;
    let started = Instant::now();
    let k = spec.alphabet_size;
    let mut chunks = Vec::new();
    for length in spec.min_len..=spec.max_len {
        let total = (k as u64).pow(length as u32);
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            chunks.push(Chunk { length, start, end });
            start = end;
        }
    }
    let classifier = Classifier::default();
    let tallies = map_ordered(&chunks, jobs, |c| check_chunk(c, k, &classifier));

    let mut report = SweepReport {
        spec,
        words_checked: 0,
        mismatches: Vec::new(),
        counts: Vec::new(),
        oracle_counts: Vec::new(),
        wall_time_ms: 0,
    };
    for length in spec.min_len..=spec.max_len {
        let total_words = (k as u64).pow(length as u32);
        report.words_checked += total_words;
        let row = LengthCount {
            length,
            total_words,
            all_rich_count: 0,
        };
        report.counts.push(row);
        report.oracle_counts.push(row);
    }
    for (chunk, tally) in chunks.iter().zip(tallies) {
        let tally = tally?;
        let row = chunk.length - spec.min_len;
        report.counts[row].all_rich_count += tally.classifier;
        report.oracle_counts[row].all_rich_count += tally.oracle;
        report.mismatches.extend(tally.mismatches);
    }
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Per-length all-rich counts for lengths `1..=max_len`, computed by the
/// classifier (`counts`) and by the oracle (`oracle_counts`). Callers must
/// check `is_clean` before trusting either column.
pub fn count_all_rich_sequence(
    alphabet_size: usize,
    max_len: usize,
    bounds: SweepBounds,
    jobs: usize,
) -> Result<SweepReport> {
    sweep(
        SweepSpec {
            alphabet_size,
            min_len: 1,
            max_len,
        },
        bounds,
        jobs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: usize, lo: usize, hi: usize) -> SweepSpec {
        SweepSpec {
            alphabet_size: k,
            min_len: lo,
            max_len: hi,
        }
    }

    #[test]
    fn word_indexing_is_lexicographic() {
        let words: Vec<String> = words_of_length(2, 3).map(|w| w.to_plain_string()).collect();
        assert_eq!(
            words,
            ["aaa", "aab", "aba", "abb", "baa", "bab", "bba", "bbb"]
        );
        assert_eq!(word_at(5, 2, 3).to_plain_string(), "bc");
        assert_eq!(words_of_length(3, 0).count(), 1);
    }

    #[test]
    fn short_binary_words_are_all_rich() {
        let r = sweep(spec(2, 1, 7), SweepBounds::DEFAULT, 2).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.all_rich_counts(), vec![2, 4, 8, 16, 32, 64, 128]);
        assert_eq!(r.words_checked, 254);
    }

    #[test]
    fn bounds_are_enforced() {
        let err = sweep(spec(2, 1, 15), SweepBounds::DEFAULT, 1).unwrap_err();
        assert_eq!(err.exit_code(), crate::error::exit::RESOURCE);
        let err = sweep(spec(5, 1, 8), SweepBounds::DEFAULT, 1).unwrap_err();
        assert_eq!(err.exit_code(), crate::error::exit::RESOURCE);
        let err = sweep(spec(2, 5, 3), SweepBounds::DEFAULT, 1).unwrap_err();
        assert_eq!(err.exit_code(), crate::error::exit::INPUT);
        assert!(SweepBounds::EXTENDED.check(&spec(2, 1, 16)).is_ok());
    }

    #[test]
    fn lambda_can_be_swept() {
        let r = sweep(spec(3, 0, 0), SweepBounds::DEFAULT, 1).unwrap();
        assert_eq!(r.counts[0].all_rich_count, 1);
        assert!(r.is_clean());
    }
}
