//! The block reversal set `BR(w)`.
//!
//! Every subset of the `|w| - 1` inner cut positions splits `w` into blocks
//! `B_1 ... B_t`; reading the blocks back to front gives one element
//! `B_t ... B_1`. Partitions are enumerated as integer masks (bit `i - 1`
//! set means a cut before position `i`), and elements are deduplicated by
//! content.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::{ControlFlow, Range};

use crate::word::{Letter, Word};
use crate::{Error, Result};

pub const DEFAULT_MAX_BLOCK_LEN: usize = 24;

/// Masks are `u64`, so no configuration may exceed this.
pub const HARD_MAX_BLOCK_LEN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_block_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_block_len: DEFAULT_MAX_BLOCK_LEN,
        }
    }
}

impl Limits {
    pub fn new(max_block_len: usize) -> Self {
        Limits {
            max_block_len: max_block_len.min(HARD_MAX_BLOCK_LEN),
        }
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        if w.len() > self.max_block_len {
            return Err(Error::LengthLimit {
                length: w.len(),
                limit: self.max_block_len,
                mask_bits: w.len().saturating_sub(1),
            });
        }
        Ok(())
    }
}

/// A decomposition of a length-`source_length` word into non-empty blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    source_length: usize,
    mask: u64,
}

impl BlockPartition {
    /// `cuts` must be strictly increasing positions in `1..source_length`.
    pub fn new(source_length: usize, cuts: &[usize]) -> Result<Self> {
        if source_length > HARD_MAX_BLOCK_LEN {
            return Err(Error::InvalidCuts(source_length));
        }
        let mut mask = 0u64;
        let mut prev = 0;
        for &c in cuts {
            if c <= prev || c >= source_length {
                return Err(Error::InvalidCuts(source_length));
            }
            mask |= 1 << (c - 1);
            prev = c;
        }
        Ok(BlockPartition {
            source_length,
            mask,
        })
    }

    pub fn from_mask(source_length: usize, mask: u64) -> Result<Self> {
        let bits = source_length.saturating_sub(1);
        if source_length > HARD_MAX_BLOCK_LEN || (bits < 64 && mask >> bits != 0) {
            return Err(Error::InvalidCuts(source_length));
        }
        Ok(BlockPartition {
            source_length,
            mask,
        })
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn cuts(&self) -> Vec<usize> {
        (1..self.source_length)
            .filter(|&i| self.mask >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn block_count(&self) -> usize {
        if self.source_length == 0 {
            return 0;
        }
        self.mask.count_ones() as usize + 1
    }

    pub fn blocks(&self, w: &Word) -> Result<Vec<Word>> {
        self.check_len(w)?;
        let mut bounds = Vec::with_capacity(self.block_count() + 1);
        bounds.push(0);
        bounds.extend(self.cuts());
        bounds.push(w.len());
        Ok(bounds.windows(2).map(|b| w.slice(b[0], b[1])).collect())
    }

    fn check_len(&self, w: &Word) -> Result<()> {
        if self.source_length != w.len() {
            return Err(Error::LengthMismatch {
                partition: self.source_length,
                word: w.len(),
            });
        }
        Ok(())
    }
}

/// Writes `B_t ... B_1` for the partition `mask` of `src` into `out`.
#[inline]
pub(crate) fn reverse_blocks_into(src: &[Letter], mask: u64, out: &mut Vec<Letter>) {
    out.clear();
    let mut end = src.len();
    for i in (1..src.len()).rev() {
        if mask >> (i - 1) & 1 == 1 {
            out.extend_from_slice(&src[i..end]);
            end = i;
        }
    }
    out.extend_from_slice(&src[..end]);
}

pub fn apply_partition(w: &Word, p: &BlockPartition) -> Result<Word> {
    p.check_len(w)?;
    let mut out = Vec::with_capacity(w.len());
    reverse_blocks_into(w.letters(), p.mask, &mut out);
    Ok(Word::from_letters_unchecked(out, w.alphabet_size() as u8))
}

/// Number of partitions of a length-`n` word.
pub fn mask_space(n: usize) -> u64 {
    if n == 0 {
        1
    } else {
        1u64 << (n - 1)
    }
}

/// Deduplicated `BR(w)` with enumeration statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrSet {
    source: Word,
    elements: BTreeSet<Word>,
    partitions_enumerated: u64,
}

impl BrSet {
    pub fn source(&self) -> &Word {
        &self.source
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &BTreeSet<Word> {
        &self.elements
    }

    pub fn into_elements(self) -> BTreeSet<Word> {
        self.elements
    }

    pub fn distinct_count(&self) -> usize {
        self.elements.len()
    }

    pub fn partitions_enumerated(&self) -> u64 {
        self.partitions_enumerated
    }

    pub fn contains(&self, v: &Word) -> bool {
        self.elements.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.elements.iter()
    }

    /// Union of shard results for the same source word.
    pub fn merge(mut self, other: BrSet) -> BrSet {
        debug_assert_eq!(self.source, other.source);
        self.partitions_enumerated += other.partitions_enumerated;
        self.elements.extend(other.elements);
        self
    }
}

/// `BR(w)`; `BR(λ) = {λ}`.
pub fn enumerate_br(w: &Word, limits: Limits) -> Result<BrSet> {
    limits.check(w)?;
    enumerate_br_masks(w, 0..mask_space(w.len()))
}

/// The elements produced by one contiguous range of partition masks.
pub fn enumerate_br_masks(w: &Word, masks: Range<u64>) -> Result<BrSet> {
    if w.len() > HARD_MAX_BLOCK_LEN {
        return Err(Error::LengthLimit {
            length: w.len(),
            limit: HARD_MAX_BLOCK_LEN,
            mask_bits: w.len() - 1,
        });
    }
    let masks = masks.start..masks.end.min(mask_space(w.len()));
    let mut elements = BTreeSet::new();
    let mut buf = Vec::with_capacity(w.len());
    let partitions_enumerated = masks.end.saturating_sub(masks.start);
    for mask in masks {
        reverse_blocks_into(w.letters(), mask, &mut buf);
        elements.insert(Word::from_letters_unchecked(
            buf.clone(),
            w.alphabet_size() as u8,
        ));
    }
    Ok(BrSet {
        source: w.clone(),
        elements,
        partitions_enumerated,
    })
}

/// `shard` of `shards` equal slices of the mask space.
pub fn shard_range(n: usize, shard: usize, shards: usize) -> Range<u64> {
    let total = mask_space(n) as u128;
    let shards = shards.max(1) as u128;
    let lo = total * shard as u128 / shards;
    let hi = total * (shard as u128 + 1) / shards;
    lo as u64..hi as u64
}

/// `|BR(w)|` without materializing the elements as words.
pub fn br_count(w: &Word, limits: Limits) -> Result<usize> {
    let stats = br_stream(w, limits, |_| ControlFlow::Continue(()))?;
    Ok(stats.distinct_visited as usize)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VisitStats {
    pub partitions_scanned: u64,
    pub distinct_visited: u64,
    pub stopped_early: bool,
}

/// Calls `visitor` once per distinct element of `BR(w)` in mask order until
/// it breaks. The visit order is not part of the contract.
pub fn br_stream<F>(w: &Word, limits: Limits, visitor: F) -> Result<VisitStats>
where
    F: FnMut(&[Letter]) -> ControlFlow<()>,
{
    limits.check(w)?;
    Ok(stream_masks(w, 0..mask_space(w.len()), visitor))
}

pub(crate) fn stream_masks<F>(w: &Word, masks: Range<u64>, mut visitor: F) -> VisitStats
where
    F: FnMut(&[Letter]) -> ControlFlow<()>,
{
    let src = w.letters();
    let mut seen = SeenSet::new(w);
    let mut buf = Vec::with_capacity(src.len());
    let mut stats = VisitStats::default();
    for mask in masks {
        stats.partitions_scanned += 1;
        reverse_blocks_into(src, mask, &mut buf);
        if !seen.insert(&buf) {
            continue;
        }
        stats.distinct_visited += 1;
        if visitor(&buf).is_break() {
            stats.stopped_early = true;
            break;
        }
    }
    stats
}

/// Content-keyed dedup; packs words into a `u128` when they fit.
enum SeenSet {
    Packed { bits: u32, keys: BTreeSet<u128> },
    Plain(BTreeSet<Vec<Letter>>),
}

impl SeenSet {
    fn new(w: &Word) -> Self {
        let bits = usize::BITS - (w.alphabet_size().max(2) - 1).leading_zeros();
        if w.len() * bits as usize <= 128 {
            SeenSet::Packed {
                bits,
                keys: BTreeSet::new(),
            }
        } else {
            SeenSet::Plain(BTreeSet::new())
        }
    }

    fn insert(&mut self, letters: &[Letter]) -> bool {
        match self {
            SeenSet::Packed { bits, keys } => {
                let key = letters
                    .iter()
                    .fold(0u128, |k, l| (k << *bits) | l.id() as u128);
                keys.insert(key)
            }
            SeenSet::Plain(set) => {
                if set.contains(letters) {
                    false
                } else {
                    set.insert(letters.to_vec())
                }
            }
        }
    }
}

/// Membership `v ∈ BR(w)` by dynamic programming.
///
/// `reach[i]` holds when `v[..i]` is a back-to-front block arrangement of the
/// suffix `w[n - i..]`; the last block `v[j..i]` must equal `w[n - i..n - j]`.
pub fn br_contains(w: &Word, v: &Word) -> bool {
    if !w.abelian_equivalent(v) {
        return false;
    }
    let (w, v) = (w.letters(), v.letters());
    let n = w.len();
    let mut reach = alloc::vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = (0..i).any(|j| reach[j] && v[j..i] == w[n - i..n - j]);
    }
    reach[n]
}
