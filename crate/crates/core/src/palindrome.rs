//! Palindromic factors and richness.
//!
//! A word of length `n` has at most `n` distinct non-empty palindromic
//! factors; words reaching the bound are *rich*. Three independent decision
//! procedures live here:
//!
//! * [`is_rich`]: palindrome-tree node counting (every appended letter must
//!   open a new node),
//! * [`is_rich_prefix_property`]: the longest palindromic suffix of every
//!   prefix is unioccurrent in that prefix (checked by direct scanning),
//! * [`find_glen_violation`]: search for a complete return to a palindrome
//!   that is not itself a palindrome.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::word::{is_palindrome, Letter, Word};
use crate::{Error, Result};

/// Length bound for the quadratic-or-worse scanning procedures.
pub const DEFAULT_ORACLE_BOUND: usize = 64;

const NONE: u32 = u32::MAX;
const ROOT_NEG: u32 = 0;
const ROOT_EMPTY: u32 = 1;

/// Palindrome tree (eertree) over a growing word.
///
/// Nodes `0` and `1` are the roots of length `-1` and `0`; every other node is
/// one distinct non-empty palindromic factor.
#[derive(Clone, Debug)]
pub struct PalindromeIndex {
    alphabet_size: usize,
    text: Vec<Letter>,
    len: Vec<i32>,
    link: Vec<u32>,
    next: Vec<u32>,
    first_end: Vec<usize>,
    /// Longest palindromic suffix node of each prefix `text[..=i]`.
    suffix: Vec<u32>,
    last: u32,
}

impl PalindromeIndex {
    pub fn new(alphabet_size: usize) -> Self {
        let mut index = PalindromeIndex {
            alphabet_size: alphabet_size.max(1),
            text: Vec::new(),
            len: Vec::new(),
            link: Vec::new(),
            next: Vec::new(),
            first_end: Vec::new(),
            suffix: Vec::new(),
            last: ROOT_EMPTY,
        };
        index.clear();
        index
    }

    pub fn build(w: &Word) -> Self {
        let mut index = Self::new(w.alphabet_size());
        for &l in w.letters() {
            index.push(l);
        }
        index
    }

    /// Resets to the empty word, keeping allocations.
    pub fn clear(&mut self) {
        self.text.clear();
        self.len.clear();
        self.link.clear();
        self.next.clear();
        self.first_end.clear();
        self.suffix.clear();
        self.len.extend([-1, 0]);
        self.link.extend([ROOT_NEG, ROOT_NEG]);
        self.first_end.extend([0, 0]);
        self.next.resize(2 * self.alphabet_size, NONE);
        self.last = ROOT_EMPTY;
    }

    fn add_node(&mut self, len: i32, link: u32, end: usize) -> u32 {
        let id = self.len.len() as u32;
        self.len.push(len);
        self.link.push(link);
        self.first_end.push(end);
        self.next
            .extend(core::iter::repeat_n(NONE, self.alphabet_size));
        id
    }

    fn edge(&self, node: u32, c: Letter) -> u32 {
        self.next[node as usize * self.alphabet_size + c.id() as usize]
    }

    /// Walks suffix links from `node` until `x node x` ends at `pos`.
    fn extendable(&self, mut node: u32, pos: usize, c: Letter) -> u32 {
        loop {
            let l = self.len[node as usize];
            let before = pos as i64 - 1 - l as i64;
            if before >= 0 && self.text[before as usize] == c {
                return node;
            }
            if node == ROOT_NEG {
                return node;
            }
            node = self.link[node as usize];
        }
    }

    /// Appends one letter; returns whether a new palindrome appeared.
    pub fn push(&mut self, c: Letter) -> bool {
        assert!(
            (c.id() as usize) < self.alphabet_size,
            "letter outside the index alphabet"
        );
        let pos = self.text.len();
        self.text.push(c);
        let cur = self.extendable(self.last, pos, c);
        let existing = self.edge(cur, c);
        if existing != NONE {
            self.last = existing;
            self.suffix.push(existing);
            return false;
        }
        let new_len = self.len[cur as usize] + 2;
        let link = if new_len == 1 {
            ROOT_EMPTY
        } else {
            let from = self.extendable(self.link[cur as usize], pos, c);
            self.edge(from, c)
        };
        let node = self.add_node(new_len, link, pos);
        self.next[cur as usize * self.alphabet_size + c.id() as usize] = node;
        self.last = node;
        self.suffix.push(node);
        true
    }

    pub fn indexed_len(&self) -> usize {
        self.text.len()
    }

    /// `P(w)`: number of distinct non-empty palindromic factors.
    pub fn distinct_count(&self) -> usize {
        self.len.len() - 2
    }

    /// Length of the longest palindromic suffix of `text[..prefix_len]`.
    pub fn longest_suffix_len(&self, prefix_len: usize) -> usize {
        if prefix_len == 0 {
            return 0;
        }
        self.len[self.suffix[prefix_len - 1] as usize] as usize
    }

    /// Every distinct non-empty palindromic factor, in order of first
    /// occurrence.
    pub fn palindromes(&self) -> Vec<Word> {
        (2..self.len.len())
            .map(|node| {
                let end = self.first_end[node] + 1;
                let start = end - self.len[node] as usize;
                Word::from_letters_unchecked(
                    self.text[start..end].to_vec(),
                    self.alphabet_size as u8,
                )
            })
            .collect()
    }

    /// Whether `letters` is rich, reusing this index's storage.
    pub fn check_rich(&mut self, letters: &[Letter]) -> bool {
        self.clear();
        letters.iter().all(|&l| self.push(l))
    }
}

/// Why a word fails to be rich.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// `factor` has `palindrome` as prefix and suffix, with exactly those two
    /// occurrences, yet is not a palindrome.
    GlenViolation,
    /// `factor` is a prefix whose longest palindromic suffix `palindrome`
    /// occurs more than once in it.
    PrefixNonUnioccurrent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichnessWitness {
    pub kind: WitnessKind,
    pub factor: Word,
    pub palindrome: Word,
}

/// Naive set of non-empty palindromic factors, by substring enumeration.
pub fn distinct_palindromes(w: &Word) -> Result<BTreeSet<Word>> {
    distinct_palindromes_bounded(w, DEFAULT_ORACLE_BOUND)
}

pub fn distinct_palindromes_bounded(w: &Word, bound: usize) -> Result<BTreeSet<Word>> {
    check_bound(w, bound)?;
    let s = w.letters();
    let mut out = BTreeSet::new();
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            if is_palindrome(&s[i..j]) {
                out.insert(w.slice(i, j));
            }
        }
    }
    Ok(out)
}

/// `P(w)` via the palindrome tree.
pub fn pal_count(w: &Word) -> usize {
    PalindromeIndex::build(w).distinct_count()
}

/// `P(w) = |w|`. The empty word is rich.
pub fn is_rich(w: &Word) -> bool {
    PalindromeIndex::new(w.alphabet_size()).check_rich(w.letters())
}

/// Richness through unioccurrence of the longest palindromic suffix of every
/// prefix, checked by direct scanning.
pub fn is_rich_prefix_property(w: &Word) -> bool {
    prefix_property_witness(w).is_none()
}

/// The shortest prefix whose longest palindromic suffix is not unioccurrent.
pub fn prefix_property_witness(w: &Word) -> Option<RichnessWitness> {
    let s = w.letters();
    for end in 1..=s.len() {
        let prefix = &s[..end];
        let lps = (0..end)
            .find(|&start| is_palindrome(&prefix[start..]))
            .map(|start| &prefix[start..])
            .expect("a single letter is a palindrome");
        if occurrences(prefix, lps) != 1 {
            return Some(RichnessWitness {
                kind: WitnessKind::PrefixNonUnioccurrent,
                factor: w.slice(0, end),
                palindrome: w.slice(end - lps.len(), end),
            });
        }
    }
    None
}

/// Shortest, then lexicographically first, factor violating the complete
/// return condition. `None` iff the word is rich.
pub fn find_glen_violation(w: &Word) -> Result<Option<RichnessWitness>> {
    find_glen_violation_bounded(w, DEFAULT_ORACLE_BOUND)
}

pub fn find_glen_violation_bounded(w: &Word, bound: usize) -> Result<Option<RichnessWitness>> {
    check_bound(w, bound)?;
    let s = w.letters();
    let n = s.len();
    for len in 3..=n {
        let candidates: BTreeSet<&[Letter]> = (0..=n - len).map(|i| &s[i..i + len]).collect();
        for u in candidates {
            if is_palindrome(u) {
                continue;
            }
            for plen in 1..len {
                let p = &u[..plen];
                if is_palindrome(p) && u.ends_with(p) && occurrences(u, p) == 2 {
                    return Ok(Some(RichnessWitness {
                        kind: WitnessKind::GlenViolation,
                        factor: Word::from_letters_unchecked(u.to_vec(), w.alphabet_size() as u8),
                        palindrome: Word::from_letters_unchecked(
                            p.to_vec(),
                            w.alphabet_size() as u8,
                        ),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Every conjugate is rich and `w` splits into two (possibly empty)
/// palindromes.
pub fn is_circularly_rich(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.letters();
    let two_palindromes = (0..=s.len()).any(|i| is_palindrome(&s[..i]) && is_palindrome(&s[i..]));
    if !two_palindromes {
        return Ok(false);
    }
    let mut index = PalindromeIndex::new(w.alphabet_size());
    let mut rotated = Vec::with_capacity(s.len());
    Ok((0..s.len()).all(|i| {
        rotated.clear();
        rotated.extend_from_slice(&s[i..]);
        rotated.extend_from_slice(&s[..i]);
        index.check_rich(&rotated)
    }))
}

pub fn longest_palindromic_suffix(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let index = PalindromeIndex::build(w);
    let l = index.longest_suffix_len(w.len());
    Ok(w.slice(w.len() - l, w.len()))
}

fn occurrences(haystack: &[Letter], needle: &[Letter]) -> usize {
    if needle.len() > haystack.len() {
        return 0;
    }
    haystack
        .windows(needle.len())
        .filter(|x| *x == needle)
        .count()
}

fn check_bound(w: &Word, bound: usize) -> Result<()> {
    if w.len() > bound {
        return Err(Error::LengthLimit {
            length: w.len(),
            limit: bound,
            mask_bits: 0,
        });
    }
    Ok(())
}
