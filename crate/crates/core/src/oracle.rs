//! Exhaustive ground truth for "every element of `BR(w)` is rich".
//!
//! Uses only the definition of `BR(w)` and the palindrome-tree richness test;
//! nothing here consults the classifier tables.

use core::ops::{ControlFlow, Range};

use crate::block_reversal::{mask_space, stream_masks, Limits};
use crate::palindrome::PalindromeIndex;
use crate::word::Word;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub all_rich: bool,
    /// A non-rich element of `BR(w)`, present iff `all_rich` is false.
    pub witness: Option<Word>,
    /// Distinct elements richness-tested before the verdict.
    pub elements_checked: u64,
}

/// Streams `BR(w)` in mask order and stops at the first non-rich element.
pub fn oracle_all_rich(w: &Word, limits: Limits) -> Result<OracleResult> {
    limits.check(w)?;
    Ok(oracle_masks(w, 0..mask_space(w.len())))
}

/// The oracle restricted to a slice of the partition masks; a word is all
/// rich iff every slice reports all rich.
pub fn oracle_masks(w: &Word, masks: Range<u64>) -> OracleResult {
    let mut index = PalindromeIndex::new(w.alphabet_size());
    let mut witness = None;
    let stats = stream_masks(w, masks, |v| {
        if index.check_rich(v) {
            ControlFlow::Continue(())
        } else {
            witness = Some(Word::from_letters_unchecked(
                v.to_vec(),
                w.alphabet_size() as u8,
            ));
            ControlFlow::Break(())
        }
    });
    OracleResult {
        all_rich: witness.is_none(),
        witness,
        elements_checked: stats.distinct_visited,
    }
}

/// Number of rich elements of `BR(w)`, scanning every partition.
pub fn count_rich_elements(w: &Word, limits: Limits) -> Result<(u64, u64)> {
    limits.check(w)?;
    let mut index = PalindromeIndex::new(w.alphabet_size());
    let mut rich = 0u64;
    let stats = stream_masks(w, 0..mask_space(w.len()), |v| {
        if index.check_rich(v) {
            rich += 1;
        }
        ControlFlow::Continue(())
    });
    Ok((rich, stats.distinct_visited))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_reversal::{br_contains, br_count};
    use crate::palindrome::is_rich;

    fn w(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    #[test]
    fn abbc_has_a_non_rich_element() {
        let r = oracle_all_rich(&w("abbc"), Limits::default()).unwrap();
        assert!(!r.all_rich);
        let v = r.witness.unwrap();
        assert!(!is_rich(&v));
        assert!(br_contains(&w("abbc"), &v));
    }

    #[test]
    fn two_runs_are_all_rich() {
        let word = w("a^3b^4");
        let r = oracle_all_rich(&word, Limits::default()).unwrap();
        assert!(r.all_rich);
        assert_eq!(r.witness, None);
        assert_eq!(
            r.elements_checked,
            br_count(&word, Limits::default()).unwrap() as u64
        );
    }

    #[test]
    fn run_length_five_counterexample() {
        let word = w("a^2b^3a^3ba");
        let r = oracle_all_rich(&word, Limits::default()).unwrap();
        assert!(!r.all_rich);
        let v = r.witness.unwrap();
        assert!(!is_rich(&v) && br_contains(&word, &v));

        let named = w("baa^2b^2aba^2");
        assert!(br_contains(&word, &named));
        assert!(!is_rich(&named));
    }

    #[test]
    fn rich_element_counting() {
        assert_eq!(
            count_rich_elements(&w("abbc"), Limits::default()).unwrap(),
            (6, 7)
        );
    }
}
