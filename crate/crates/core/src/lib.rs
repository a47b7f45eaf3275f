//! Block reversal of finite words and palindromic richness.
//!
//! A word `w = B_1 B_2 ... B_t` split into non-empty blocks yields the block
//! reversal `B_t ... B_1`; the set of all such words is `BR(w)`. This crate
//! provides:
//!
//! * [`word`]: words over a small indexed alphabet, run-length encodings and
//!   the elementary operators (reversal, complement, conjugates, fractional
//!   powers).
//! * [`palindrome`]: a palindrome tree ([`PalindromeIndex`]) counting distinct
//!   palindromic factors in linear time, plus independent richness criteria.
//! * [`block_reversal`]: exact enumeration, counting, streaming and membership
//!   for `BR(w)`.
//! * [`classifier`]: a table-driven decision of whether every element of
//!   `BR(w)` is rich, with rule attribution.
//! * [`oracle`]: the exhaustive ground truth the classifier is checked against.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod block_reversal;
pub mod classifier;
mod error;
pub mod oracle;
pub mod palindrome;
pub mod word;

pub use block_reversal::{
    apply_partition, br_contains, br_count, br_stream, enumerate_br, BlockPartition, BrSet, Limits,
    VisitStats,
};
pub use classifier::{classify, match_binary_form, FormId, PatternTable, RuleId, Verdict};
pub use error::Error;
pub use oracle::{oracle_all_rich, OracleResult};
pub use palindrome::{
    distinct_palindromes, find_glen_violation, is_circularly_rich, is_rich,
    is_rich_prefix_property, longest_palindromic_suffix, pal_count, PalindromeIndex,
    RichnessWitness, WitnessKind,
};
pub use word::{Letter, Rational, RunLengthEncoding, Word};

pub type Result<T> = core::result::Result<T, Error>;
