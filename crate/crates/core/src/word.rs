//! Words over a small indexed alphabet and their elementary operators.
//!
//! Letters are 0-based ids rendered as `a`, `b`, `c`, ... . A [`Word`] carries
//! the size of the alphabet it was built over; equality and ordering look at
//! the letters only.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::{Error, Result};

/// Largest alphabet expressible in the `a..z` text syntax.
pub const MAX_ALPHABET: usize = 26;

/// Words longer than this are rendered in caret run-length form.
pub const PLAIN_RENDER_LIMIT: usize = 40;

/// Upper bound on the length of a parsed word.
pub const MAX_PARSED_LENGTH: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const fn new(id: u8) -> Self {
        Letter(id)
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        (b'a' + self.0) as char
    }

    pub fn from_char(c: char) -> Option<Self> {
        c.is_ascii_lowercase().then(|| Letter(c as u8 - b'a'))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word. The empty word is valid.
#[derive(Clone, Debug)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: u8,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl Word {
    pub fn empty(alphabet_size: u8) -> Self {
        Word {
            letters: Vec::new(),
            alphabet_size,
        }
    }

    pub fn new(letters: Vec<Letter>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::AlphabetSize(alphabet_size));
        }
        let alphabet_size = alphabet_size as u8;
        if let Some(bad) = letters.iter().find(|l| l.0 >= alphabet_size) {
            return Err(Error::LetterOutOfRange {
                id: bad.0,
                alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    pub fn from_ids(ids: &[u8], alphabet_size: usize) -> Result<Self> {
        Self::new(ids.iter().copied().map(Letter).collect(), alphabet_size)
    }

    /// Builds a word without range checks; callers guarantee every id is
    /// below `alphabet_size`.
    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>, alphabet_size: u8) -> Self {
        debug_assert!(letters.iter().all(|l| l.0 < alphabet_size));
        Word {
            letters,
            alphabet_size,
        }
    }

    /// Parses plain (`abbc`) or caret run-length (`a^2b^3a^3`, `a^{20}`) text.
    ///
    /// Whitespace is ignored. Without an explicit `alphabet_size`, the
    /// alphabet is `a..=x` where `x` is the largest letter present.
    pub fn parse(text: &str, alphabet_size: Option<usize>) -> Result<Self> {
        let letters = parse_letters(text)?;
        let needed = letters.iter().map(|l| l.0 as usize + 1).max().unwrap_or(1);
        let size = alphabet_size.unwrap_or(needed);
        Self::new(letters, size)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size as usize
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    /// The same letters over a (possibly larger) alphabet.
    pub fn with_alphabet(&self, alphabet_size: usize) -> Result<Self> {
        Self::new(self.letters.clone(), alphabet_size)
    }

    /// Factor `w[start..end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters_unchecked(self.letters[start..end].to_vec(), self.alphabet_size)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::from_letters_unchecked(letters, self.alphabet_size.max(other.alphabet_size))
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_letters_unchecked(letters, self.alphabet_size)
    }

    /// Letterwise swap `a <-> b`. Only defined over a binary alphabet.
    pub fn complement(&self) -> Result<Word> {
        if self.alphabet_size != 2 {
            return Err(Error::NotBinary(self.alphabet_size));
        }
        let letters = self.letters.iter().map(|l| Letter(1 - l.0)).collect();
        Ok(Word::from_letters_unchecked(letters, 2))
    }

    /// Maximal-run decomposition. Fails on the empty word.
    pub fn rle(&self) -> Result<RunLengthEncoding> {
        if self.is_empty() {
            return Err(Error::EmptyRle);
        }
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match runs.last_mut() {
                Some((prev, n)) if *prev == l => *n += 1,
                _ => runs.push((l, 1)),
            }
        }
        Ok(RunLengthEncoding {
            runs,
            alphabet_size: self.alphabet_size,
        })
    }

    /// `l(w)`, the number of maximal runs; 0 for the empty word.
    pub fn run_length(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        1 + self.letters.windows(2).filter(|p| p[0] != p[1]).count()
    }

    pub fn alph(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    pub fn letter_count(&self, a: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == a).count()
    }

    /// Letter multiplicities indexed by letter id.
    pub fn parikh(&self) -> [usize; MAX_ALPHABET] {
        let mut counts = [0; MAX_ALPHABET];
        for l in &self.letters {
            counts[l.0 as usize] += 1;
        }
        counts
    }

    pub fn abelian_equivalent(&self, other: &Word) -> bool {
        self.len() == other.len() && self.parikh() == other.parikh()
    }

    /// All factors, including the empty word and `w` itself.
    pub fn factors(&self) -> BTreeSet<Word> {
        let n = self.len();
        let mut out = BTreeSet::new();
        out.insert(Word::empty(self.alphabet_size));
        for i in 0..n {
            for j in i + 1..=n {
                out.insert(self.slice(i, j));
            }
        }
        out
    }

    /// All rotations `yx` of `w = xy`.
    pub fn conjugates(&self) -> BTreeSet<Word> {
        let n = self.len();
        if n == 0 {
            return BTreeSet::from([self.clone()]);
        }
        (0..n).map(|i| self.rotate(i)).collect()
    }

    /// `w[i..] w[..i]`.
    pub fn rotate(&self, i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[i..]);
        letters.extend_from_slice(&self.letters[..i]);
        Word::from_letters_unchecked(letters, self.alphabet_size)
    }

    /// The length-`ceil(k * |u|)` prefix of `u u u ...`.
    pub fn fractional_power(&self, k: Rational) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if k.numerator() < k.denominator() {
            return Err(Error::ExponentBelowOne {
                numerator: k.numerator(),
                denominator: k.denominator(),
            });
        }
        let target = (k.numerator() * self.len() as u64).div_ceil(k.denominator()) as usize;
        let letters = self.letters.iter().copied().cycle().take(target).collect();
        Ok(Word::from_letters_unchecked(letters, self.alphabet_size))
    }

    /// Caret run-length text, e.g. `a^2b^3a^3`.
    pub fn to_caret_string(&self) -> String {
        match self.rle() {
            Ok(r) => r.to_string(),
            Err(_) => String::new(),
        }
    }

    pub fn to_plain_string(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }
}

impl fmt::Display for Word {
    /// Plain form up to [`PLAIN_RENDER_LIMIT`] letters, caret form beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= PLAIN_RENDER_LIMIT {
            f.write_str(&self.to_plain_string())
        } else {
            f.write_str(&self.to_caret_string())
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, None)
    }
}

pub(crate) fn is_palindrome<T: PartialEq>(s: &[T]) -> bool {
    s.iter().eq(s.iter().rev())
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let err = |position: usize, reason: &str| Error::Parse {
        position,
        reason: reason.to_string(),
    };
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        let c = bytes[i];
        if !c.is_ascii_lowercase() {
            return Err(err(i, "expected a letter a-z"));
        }
        let letter = Letter(c - b'a');
        i += 1;
        skip_ws(&mut i);
        let mut exponent = 1usize;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            skip_ws(&mut i);
            let braced = i < bytes.len() && bytes[i] == b'{';
            if braced {
                i += 1;
                skip_ws(&mut i);
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected digits after '^'"));
            }
            exponent = text[start..i]
                .parse()
                .ok()
                .filter(|&e| e <= MAX_PARSED_LENGTH)
                .ok_or_else(|| err(start, "exponent too large"))?;
            if braced {
                skip_ws(&mut i);
                if i >= bytes.len() || bytes[i] != b'}' {
                    return Err(err(i, "expected '}'"));
                }
                i += 1;
            }
            if exponent == 0 {
                return Err(Error::ZeroExponent);
            }
        }
        if letters.len() + exponent > MAX_PARSED_LENGTH {
            return Err(err(i, "word too long"));
        }
        letters.extend(core::iter::repeat_n(letter, exponent));
    }
    Ok(letters)
}

/// Maximal-run decomposition `a_1^{n_1} ... a_k^{n_k}` of a non-empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLengthEncoding {
    runs: Vec<(Letter, usize)>,
    alphabet_size: u8,
}

impl RunLengthEncoding {
    pub fn runs(&self) -> &[(Letter, usize)] {
        &self.runs
    }

    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn trace(&self) -> Word {
        Word::from_letters_unchecked(self.runs.iter().map(|r| r.0).collect(), self.alphabet_size)
    }

    pub fn run_sequence(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.1).collect()
    }

    pub fn expand(&self) -> Word {
        let letters = self
            .runs
            .iter()
            .flat_map(|&(l, n)| core::iter::repeat_n(l, n))
            .collect();
        Word::from_letters_unchecked(letters, self.alphabet_size)
    }
}

impl fmt::Display for RunLengthEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(l, n) in &self.runs {
            if n == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{n}")?;
            }
        }
        Ok(())
    }
}

/// Positive fraction in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numerator: u64,
    denominator: u64,
}

impl Rational {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(numerator, denominator).max(1);
        Ok(Rational {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn integer(n: u64) -> Self {
        Rational {
            numerator: n,
            denominator: 1,
        }
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn denominator(self) -> u64 {
        self.denominator
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            position: 0,
            reason: reason.to_string(),
        };
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n = n.parse().map_err(|_| bad("bad numerator"))?;
        let d = d.parse().map_err(|_| bad("bad denominator"))?;
        Rational::new(n, d)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
