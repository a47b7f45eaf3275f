//! Table-driven decision of "is every element of `BR(w)` rich?".
//!
//! Decision tree:
//!
//! 1. the empty word and unary words: always;
//! 2. three or more distinct letters: iff every letter of `w` is distinct;
//! 3. binary with `|w| <= 7`: always, since every binary word that short is
//!    rich and `BR(w)` preserves length;
//! 4. binary with `|w| > 7`: by the run count `l(w)`. Two runs always
//!    qualify, nine or more never do, and `3 <= l <= 8` is decided by the
//!    parameterized run-sequence forms of [`PatternTable::base`] closed under
//!    reversal and complement.
//!
//! Forms are written with `a` leading. A binary word is read with its smaller
//! letter id in the `a` role; the symmetry closure takes care of words whose
//! first run is the other letter.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::word::Word;
use crate::{Error, Result};

/// Which result decided a classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Empty,
    Unary,
    NonBinaryDistinct,
    NonBinaryRepeat,
    BinaryShort,
    BinaryL2,
    BinaryL3Table,
    BinaryL4Table,
    BinaryL5Table,
    BinaryL6Table,
    BinaryL7Table,
    BinaryL8Table,
    BinaryL9Plus,
    BinaryTableMiss,
}

impl RuleId {
    pub const ALL: [RuleId; 14] = [
        RuleId::Empty,
        RuleId::Unary,
        RuleId::NonBinaryDistinct,
        RuleId::NonBinaryRepeat,
        RuleId::BinaryShort,
        RuleId::BinaryL2,
        RuleId::BinaryL3Table,
        RuleId::BinaryL4Table,
        RuleId::BinaryL5Table,
        RuleId::BinaryL6Table,
        RuleId::BinaryL7Table,
        RuleId::BinaryL8Table,
        RuleId::BinaryL9Plus,
        RuleId::BinaryTableMiss,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Empty => "Empty",
            RuleId::Unary => "Unary",
            RuleId::NonBinaryDistinct => "NonBinaryDistinct",
            RuleId::NonBinaryRepeat => "NonBinaryRepeat",
            RuleId::BinaryShort => "BinaryShort",
            RuleId::BinaryL2 => "BinaryL2",
            RuleId::BinaryL3Table => "BinaryL3Table",
            RuleId::BinaryL4Table => "BinaryL4Table",
            RuleId::BinaryL5Table => "BinaryL5Table",
            RuleId::BinaryL6Table => "BinaryL6Table",
            RuleId::BinaryL7Table => "BinaryL7Table",
            RuleId::BinaryL8Table => "BinaryL8Table",
            RuleId::BinaryL9Plus => "BinaryL9Plus",
            RuleId::BinaryTableMiss => "BinaryTableMiss",
        }
    }

    /// Rules that conclude "all rich".
    pub fn is_affirmative(self) -> bool {
        !matches!(
            self,
            RuleId::NonBinaryRepeat | RuleId::BinaryL9Plus | RuleId::BinaryTableMiss
        )
    }

    fn table_for(run_count: usize) -> RuleId {
        match run_count {
            3 => RuleId::BinaryL3Table,
            4 => RuleId::BinaryL4Table,
            5 => RuleId::BinaryL5Table,
            6 => RuleId::BinaryL6Table,
            7 => RuleId::BinaryL7Table,
            8 => RuleId::BinaryL8Table,
            _ => unreachable!("tables cover 3..=8 runs"),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four letter-orientation symmetries of a binary form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    fn reverses(self) -> bool {
        matches!(self, Symmetry::Reverse | Symmetry::ReverseComplement)
    }

    fn complements(self) -> bool {
        matches!(self, Symmetry::Complement | Symmetry::ReverseComplement)
    }

    fn then(self, other: Symmetry) -> Symmetry {
        match (
            self.reverses() ^ other.reverses(),
            self.complements() ^ other.complements(),
        ) {
            (false, false) => Symmetry::Identity,
            (true, false) => Symmetry::Reverse,
            (false, true) => Symmetry::Complement,
            (true, true) => Symmetry::ReverseComplement,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Symmetry::Identity => "",
            Symmetry::Reverse => "~R",
            Symmetry::Complement => "~C",
            Symmetry::ReverseComplement => "~RC",
        }
    }
}

/// Stable identifier of a table form, e.g. `L6.T.a^n1-babab` or
/// `L6.T.a^n1-babab~RC` for its reverse-complement image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormId {
    pub base: &'static str,
    pub symmetry: Symmetry,
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.symmetry.suffix())
    }
}

/// Letter role of a run: the smaller (`A`) or larger (`B`) letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    A,
    B,
}

impl Role {
    fn flip(self) -> Role {
        match self {
            Role::A => Role::B,
            Role::B => Role::A,
        }
    }

    fn char(self) -> char {
        match self {
            Role::A => 'a',
            Role::B => 'b',
        }
    }
}

/// Constraint on a single run exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exp {
    Exactly(usize),
    AtLeast(usize),
    OneOf(Vec<usize>),
}

impl Exp {
    fn admits(&self, n: usize) -> bool {
        match self {
            Exp::Exactly(k) => n == *k,
            Exp::AtLeast(k) => n >= *k,
            Exp::OneOf(ks) => ks.contains(&n),
        }
    }
}

/// Constraint tying two run exponents together (0-based run indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Joint {
    SumEq {
        runs: (usize, usize),
        total: usize,
    },
    PairIn {
        runs: (usize, usize),
        allowed: Vec<(usize, usize)>,
    },
}

impl Joint {
    fn admits(&self, seq: &[usize]) -> bool {
        match self {
            Joint::SumEq {
                runs: (i, j),
                total,
            } => seq[*i] + seq[*j] == *total,
            Joint::PairIn {
                runs: (i, j),
                allowed,
            } => allowed.contains(&(seq[*i], seq[*j])),
        }
    }

    fn remap(&self, f: impl Fn(usize) -> usize) -> Joint {
        let order = |(i, j): (usize, usize)| {
            let (i, j) = (f(i), f(j));
            (i.min(j), i.max(j), i > j)
        };
        match self {
            Joint::SumEq { runs, total } => {
                let (i, j, _) = order(*runs);
                Joint::SumEq {
                    runs: (i, j),
                    total: *total,
                }
            }
            Joint::PairIn { runs, allowed } => {
                let (i, j, swapped) = order(*runs);
                let mut allowed: Vec<_> = allowed
                    .iter()
                    .map(|&(x, y)| if swapped { (y, x) } else { (x, y) })
                    .collect();
                allowed.sort_unstable();
                Joint::PairIn {
                    runs: (i, j),
                    allowed,
                }
            }
        }
    }
}

/// A parameterized run-sequence form: the trace alternates starting with
/// `first`, and the exponents satisfy `exps` and `joint`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    pub id: FormId,
    pub first: Role,
    pub exps: Vec<Exp>,
    pub joint: Vec<Joint>,
}

impl Form {
    fn new(base: &'static str, exps: Vec<Exp>, joint: Vec<Joint>) -> Form {
        Form {
            id: FormId {
                base,
                symmetry: Symmetry::Identity,
            },
            first: Role::A,
            exps,
            joint,
        }
    }

    pub fn run_count(&self) -> usize {
        self.exps.len()
    }

    fn apply(&self, s: Symmetry) -> Form {
        let l = self.exps.len();
        let mut out = self.clone();
        if s.reverses() {
            out.exps.reverse();
            out.joint = self.joint.iter().map(|j| j.remap(|i| l - 1 - i)).collect();
            if l.is_multiple_of(2) {
                out.first = out.first.flip();
            }
        }
        if s.complements() {
            out.first = out.first.flip();
        }
        out.id.symmetry = self.id.symmetry.then(s);
        out
    }

    fn same_shape(&self, other: &Form) -> bool {
        self.first == other.first && self.exps == other.exps && self.joint == other.joint
    }

    /// Does a binary run sequence starting with `first` match?
    pub fn matches(&self, first: Role, seq: &[usize]) -> bool {
        first == self.first
            && seq.len() == self.exps.len()
            && self.exps.iter().zip(seq).all(|(e, &n)| e.admits(n))
            && self.joint.iter().all(|j| j.admits(seq))
    }

    /// Human-readable template such as `a^n1 b a b a b  [n1>=3]`.
    pub fn pattern(&self) -> String {
        let mut text = String::new();
        let mut notes: Vec<String> = Vec::new();
        let mut role = self.first;
        for (i, e) in self.exps.iter().enumerate() {
            let c = role.char();
            match e {
                Exp::Exactly(1) => text.push(c),
                Exp::Exactly(k) => text.push_str(&format!("{c}^{k}")),
                Exp::AtLeast(k) => {
                    text.push_str(&format!("{c}^n{}", i + 1));
                    if *k > 1 {
                        notes.push(format!("n{}>={k}", i + 1));
                    }
                }
                Exp::OneOf(ks) => {
                    text.push_str(&format!("{c}^n{}", i + 1));
                    notes.push(format!("n{} in {ks:?}", i + 1));
                }
            }
            role = role.flip();
        }
        for j in &self.joint {
            match j {
                Joint::SumEq {
                    runs: (a, b),
                    total,
                } => notes.push(format!("n{}+n{}={total}", a + 1, b + 1)),
                Joint::PairIn {
                    runs: (a, b),
                    allowed,
                } => notes.push(format!("(n{},n{}) in {allowed:?}", a + 1, b + 1)),
            }
        }
        if !notes.is_empty() {
            text.push_str(&format!("  [{}]", notes.join(", ")));
        }
        text
    }
}

/// Forms for run counts 3 through 8, in a fixed order (run count descending,
/// forms in their listed order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternTable {
    forms: Vec<Form>,
}

fn exact(seq: &[usize]) -> Vec<Exp> {
    seq.iter().map(|&k| Exp::Exactly(k)).collect()
}

impl PatternTable {
    /// The forms exactly as characterized, with `a` leading.
    pub fn base() -> PatternTable {
        use Exp::{AtLeast, Exactly};
        let any = || AtLeast(1);
        let three_four = || Exp::OneOf(vec![3, 4]);
        let s_pairs = vec![(1, 3), (2, 2), (3, 1)];
        let forms = vec![
            Form::new("L8.abababab", exact(&[1; 8]), vec![]),
            Form::new("L7.ababab^2a", exact(&[1, 1, 1, 1, 1, 2, 1]), vec![]),
            Form::new("L7.abab^2aba", exact(&[1, 1, 1, 2, 1, 1, 1]), vec![]),
            Form::new("L7.ab^2ababa", exact(&[1, 2, 1, 1, 1, 1, 1]), vec![]),
            Form::new("L6.T.ab^2aba^2b", exact(&[1, 2, 1, 1, 2, 1]), vec![]),
            Form::new("L6.T.abab^2a^2b", exact(&[1, 1, 1, 2, 2, 1]), vec![]),
            Form::new("L6.T.ababa^2b^2", exact(&[1, 1, 1, 1, 2, 2]), vec![]),
            Form::new("L6.T.a^2bab^2ab", exact(&[2, 1, 1, 2, 1, 1]), vec![]),
            Form::new("L6.T.a^2babab^2", exact(&[2, 1, 1, 1, 1, 2]), vec![]),
            Form::new("L6.T.aba^2b^2ab", exact(&[1, 1, 2, 2, 1, 1]), vec![]),
            Form::new(
                "L6.T.a^n1-babab",
                vec![
                    AtLeast(3),
                    Exactly(1),
                    Exactly(1),
                    Exactly(1),
                    Exactly(1),
                    Exactly(1),
                ],
                vec![],
            ),
            Form::new(
                "L5.a^n1-b-a^n3-b-a^n5",
                vec![any(), Exactly(1), any(), Exactly(1), any()],
                vec![],
            ),
            Form::new(
                "L5.a-b^n2-a-b^n4-a^2",
                vec![Exactly(1), any(), Exactly(1), any(), Exactly(2)],
                vec![Joint::SumEq {
                    runs: (1, 3),
                    total: 4,
                }],
            ),
            Form::new(
                "L5.a^2-b^n2-a-b^n4-a",
                vec![Exactly(2), any(), Exactly(1), any(), Exactly(1)],
                vec![Joint::SumEq {
                    runs: (1, 3),
                    total: 4,
                }],
            ),
            Form::new(
                "L5.a-b^n2-a^2-b^n4-a",
                vec![Exactly(1), any(), Exactly(2), any(), Exactly(1)],
                vec![Joint::SumEq {
                    runs: (1, 3),
                    total: 4,
                }],
            ),
            Form::new(
                "L4.a-b^n2-a-b^n4",
                vec![Exactly(1), any(), Exactly(1), any()],
                vec![],
            ),
            Form::new(
                "L4.a^n1-b-a^n3-b",
                vec![any(), Exactly(1), any(), Exactly(1)],
                vec![],
            ),
            Form::new(
                "L4.S",
                vec![any(), any(), any(), any()],
                vec![
                    Joint::PairIn {
                        runs: (0, 2),
                        allowed: s_pairs.clone(),
                    },
                    Joint::PairIn {
                        runs: (1, 3),
                        allowed: s_pairs,
                    },
                ],
            ),
            Form::new("L3.a^2b^4a^2", exact(&[2, 4, 2]), vec![]),
            Form::new("L3.a-b^m2-a", vec![Exactly(1), any(), Exactly(1)], vec![]),
            Form::new("L3.a^m1-b-a^m3", vec![any(), Exactly(1), any()], vec![]),
            Form::new("L3.a^m1-b^2-a^m3", vec![any(), Exactly(2), any()], vec![]),
            Form::new(
                "L3.a-b^n2-a^n3",
                vec![Exactly(1), three_four(), AtLeast(3)],
                vec![],
            ),
            Form::new(
                "L3.a^n1-b^n2-a",
                vec![AtLeast(3), three_four(), Exactly(1)],
                vec![],
            ),
        ];
        PatternTable { forms }
    }

    /// The base table closed under reversal and complement.
    pub fn closed() -> PatternTable {
        Self::base().symmetry_closure()
    }

    /// Adds the images of every form under reverse, complement and
    /// reverse-complement, dropping shape duplicates. Order is preserved:
    /// each form is followed by its new images. Idempotent.
    pub fn symmetry_closure(&self) -> PatternTable {
        let mut forms: Vec<Form> = Vec::new();
        for f in &self.forms {
            for s in Symmetry::ALL {
                let image = f.apply(s);
                if !forms.iter().any(|g| g.same_shape(&image)) {
                    forms.push(image);
                }
            }
        }
        PatternTable { forms }
    }

    pub fn forms(&self) -> &[Form] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn first_match(&self, first: Role, seq: &[usize]) -> Option<&Form> {
        self.forms.iter().find(|f| f.matches(first, seq))
    }
}

/// Classification outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub all_rich: bool,
    pub rule: RuleId,
    pub matched_form: Option<FormId>,
}

impl Verdict {
    fn rule(rule: RuleId) -> Verdict {
        Verdict {
            all_rich: rule.is_affirmative(),
            rule,
            matched_form: None,
        }
    }
}

/// A reusable classifier holding the closed pattern table.
#[derive(Clone, Debug)]
pub struct Classifier {
    table: PatternTable,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier {
            table: PatternTable::closed(),
        }
    }
}

impl Classifier {
    pub fn with_table(table: PatternTable) -> Self {
        Classifier { table }
    }

    pub fn table(&self) -> &PatternTable {
        &self.table
    }

    pub fn classify(&self, w: &Word) -> Verdict {
        if w.is_empty() {
            return Verdict::rule(RuleId::Empty);
        }
        let letters = w.alph();
        match letters.len() {
            1 => Verdict::rule(RuleId::Unary),
            2 => self.classify_binary(w),
            k if k == w.len() => Verdict::rule(RuleId::NonBinaryDistinct),
            _ => Verdict::rule(RuleId::NonBinaryRepeat),
        }
    }

    fn classify_binary(&self, w: &Word) -> Verdict {
        if w.len() <= 7 {
            return Verdict::rule(RuleId::BinaryShort);
        }
        match w.run_length() {
            2 => Verdict::rule(RuleId::BinaryL2),
            l if l >= 9 => Verdict::rule(RuleId::BinaryL9Plus),
            l => match self.match_form(w) {
                Some(id) => Verdict {
                    all_rich: true,
                    rule: RuleId::table_for(l),
                    matched_form: Some(id),
                },
                None => Verdict::rule(RuleId::BinaryTableMiss),
            },
        }
    }

    fn match_form(&self, w: &Word) -> Option<FormId> {
        let (first, seq) = binary_runs(w)?;
        self.table.first_match(first, &seq).map(|f| f.id)
    }

    /// First matching form for a binary word with `l` runs, `3 <= l <= 8`.
    pub fn match_binary_form(&self, w: &Word, l: usize) -> Result<Option<FormId>> {
        if !(3..=8).contains(&l) {
            return Err(Error::RunLengthOutOfRange(l));
        }
        if w.run_length() != l {
            return Ok(None);
        }
        Ok(self.match_form(w))
    }
}

/// First-run role and run sequence of a word over exactly two letters.
fn binary_runs(w: &Word) -> Option<(Role, Vec<usize>)> {
    let letters = w.alph();
    if letters.len() != 2 {
        return None;
    }
    let low = *letters.first()?;
    let rle = w.rle().ok()?;
    let first = if rle.runs()[0].0 == low {
        Role::A
    } else {
        Role::B
    };
    Some((first, rle.run_sequence()))
}

pub fn classify(w: &Word) -> Verdict {
    Classifier::default().classify(w)
}

pub fn match_binary_form(w: &Word, l: usize) -> Result<Option<FormId>> {
    Classifier::default().match_binary_form(w, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    fn base(id: &str) -> FormId {
        PatternTable::base()
            .forms()
            .iter()
            .find(|f| f.id.base == id)
            .unwrap()
            .id
    }

    #[test]
    fn decision_tree_examples() {
        let v = classify(&w("abcde"));
        assert!(v.all_rich);
        assert_eq!(v.rule, RuleId::NonBinaryDistinct);

        let v = classify(&w("abbc"));
        assert!(!v.all_rich);
        assert_eq!(v.rule, RuleId::NonBinaryRepeat);

        let v = classify(&w("abababab"));
        assert_eq!(v.rule, RuleId::BinaryL8Table);
        assert_eq!(v.matched_form, Some(base("L8.abababab")));

        let v = classify(&w("a^3babab"));
        assert_eq!(v.rule, RuleId::BinaryL6Table);
        assert_eq!(v.matched_form, Some(base("L6.T.a^n1-babab")));

        let v = classify(&w("a^2b^4a^2"));
        assert_eq!(v.rule, RuleId::BinaryL3Table);
        assert!(v.all_rich);

        let v = classify(&w("ab^5a^3"));
        assert_eq!(v.rule, RuleId::BinaryTableMiss);
        assert!(!v.all_rich);
        assert_eq!(v.matched_form, None);

        let v = classify(&w("ababababa"));
        assert_eq!(v.rule, RuleId::BinaryL9Plus);
        assert!(!v.all_rich);

        assert_eq!(classify(&w("a^20")).rule, RuleId::Unary);
        assert_eq!(classify(&Word::empty(1)).rule, RuleId::Empty);
        assert_eq!(classify(&w("ababab")).rule, RuleId::BinaryShort);
        assert_eq!(classify(&w("a^5b^9")).rule, RuleId::BinaryL2);
    }

    #[test]
    fn binary_words_over_larger_alphabets() {
        // letters c and e play the roles of a and b
        let v = classify(&w("cecececec"));
        assert_eq!(v.rule, RuleId::BinaryL9Plus);
        let v = classify(&w("cccecece"));
        assert_eq!(v.rule, RuleId::BinaryL6Table);
    }

    #[test]
    fn form_matching() {
        let m = match_binary_form(&w("ababab^2a"), 7).unwrap();
        assert_eq!(m, Some(base("L7.ababab^2a")));

        let u = w("ab^2aba^2b");
        let rc = u.complement().unwrap().reverse();
        assert!(match_binary_form(&rc, 6).unwrap().is_some());

        // ababab^3 is the reverse-complement of a^3babab
        let m = match_binary_form(&w("ababab^3"), 6).unwrap().unwrap();
        assert_eq!(m.base, "L6.T.a^n1-babab");
        assert_eq!(m.symmetry, Symmetry::ReverseComplement);

        assert_eq!(
            match_binary_form(&w("abababb"), 2),
            Err(Error::RunLengthOutOfRange(2))
        );
        assert_eq!(match_binary_form(&w("ab^5a^3"), 3).unwrap(), None);
        assert_eq!(match_binary_form(&w("aab"), 3).unwrap(), None);
    }

    #[test]
    fn closure_examples() {
        let l8 = PatternTable {
            forms: vec![PatternTable::base().forms()[0].clone()],
        };
        let closed = l8.symmetry_closure();
        assert_eq!(closed.len(), 2);
        assert_eq!(closed.forms()[1].first, Role::B);

        let abma = PatternTable {
            forms: PatternTable::base()
                .forms()
                .iter()
                .filter(|f| f.id.base == "L3.a-b^m2-a")
                .cloned()
                .collect(),
        };
        let closed = abma.symmetry_closure();
        assert_eq!(closed.len(), 2);
        assert!(closed.forms()[0].matches(Role::A, &[1, 7, 1]));
        assert!(closed.forms()[1].matches(Role::B, &[1, 7, 1]));

        let full = PatternTable::closed();
        assert_eq!(full.symmetry_closure(), full);
    }

    #[test]
    fn reversal_remaps_joint_constraints() {
        let f = PatternTable::base()
            .forms()
            .iter()
            .find(|f| f.id.base == "L5.a-b^n2-a-b^n4-a^2")
            .unwrap()
            .clone();
        let r = f.apply(Symmetry::Reverse);
        assert_eq!(r.first, Role::A);
        assert!(r.matches(Role::A, &[2, 3, 1, 1, 1]));
        assert!(!r.matches(Role::A, &[2, 3, 1, 2, 1]));

        let s = PatternTable::base()
            .forms()
            .iter()
            .find(|f| f.id.base == "L4.S")
            .unwrap()
            .apply(Symmetry::Reverse);
        // a^3 b^3 a b reversed is b a b^3 a^3, complement role swap
        assert_eq!(s.first, Role::B);
        assert!(s.matches(Role::B, &[1, 1, 3, 3]));
        assert!(!s.matches(Role::B, &[1, 2, 3, 3]));
    }

    #[test]
    fn patterns_render() {
        let t = PatternTable::base();
        let f = t
            .forms()
            .iter()
            .find(|f| f.id.base == "L6.T.a^n1-babab")
            .unwrap();
        assert_eq!(f.pattern(), "a^n1babab  [n1>=3]");
        assert_eq!(t.forms()[0].pattern(), "abababab");
        assert_eq!(
            FormId {
                base: "L8.abababab",
                symmetry: Symmetry::Complement
            }
            .to_string(),
            "L8.abababab~C"
        );
    }

    #[test]
    fn affirmative_rules() {
        for r in RuleId::ALL {
            let neg = matches!(
                r,
                RuleId::NonBinaryRepeat | RuleId::BinaryL9Plus | RuleId::BinaryTableMiss
            );
            assert_eq!(r.is_affirmative(), !neg, "{r}");
        }
    }
}
