//! Hard-coded scenarios from the literature on block reversal and richness.

use std::collections::BTreeSet;
use std::time::Instant;

use blore_core::oracle::count_rich_elements;
use blore_core::{br_contains, enumerate_br, is_rich, oracle_all_rich, Limits, Word};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub cases: u64,
    /// Failures, or a one-line summary on success.
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub outcomes: Vec<FixtureOutcome>,
    pub wall_time_ms: u64,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, id: &str) -> Option<&FixtureOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

fn w(text: &str) -> Word {
    Word::parse(text, None).expect("fixture words are well formed")
}

struct Fixture {
    cases: u64,
    failures: Vec<String>,
    summary: String,
}

impl Fixture {
    fn new() -> Self {
        Fixture {
            cases: 0,
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn all_rich(&mut self, word: &Word) {
        let r = oracle_all_rich(word, Limits::new(word.len())).expect("length within limit");
        self.expect(r.all_rich, || {
            format!(
                "{word}: expected every element rich, found {}",
                r.witness.map(|v| v.to_string()).unwrap_or_default()
            )
        });
    }

    fn not_all_rich(&mut self, word: &Word) {
        let r = oracle_all_rich(word, Limits::new(word.len())).expect("length within limit");
        self.expect(!r.all_rich, || {
            format!("{word}: expected a non-rich element")
        });
    }

    /// `witness` is a non-rich element of `BR(word)`.
    fn witness(&mut self, word: &Word, witness: &Word) {
        self.expect(br_contains(word, witness), || {
            format!("{witness} is not in BR({word})")
        });
        self.expect(!is_rich(witness), || format!("{witness} is rich"));
    }

    fn finish(self, id: &str, title: &str) -> FixtureOutcome {
        let passed = self.failures.is_empty();
        FixtureOutcome {
            id: id.to_string(),
            title: title.to_string(),
            passed,
            cases: self.cases,
            detail: if passed {
                vec![self.summary]
            } else {
                self.failures
            },
        }
    }
}

fn br_of_abbc() -> FixtureOutcome {
    let mut f = Fixture::new();
    let got: BTreeSet<Word> = enumerate_br(&w("abbc"), Limits::default())
        .expect("short word")
        .into_elements();
    let want: BTreeSet<Word> = ["cbab", "cbba", "cabb", "bbca", "bcab", "abbc", "bcba"]
        .into_iter()
        .map(w)
        .collect();
    f.expect(got == want, || format!("BR(abbc) = {got:?}"));
    f.summary = format!("{} elements", got.len());
    f.finish("a", "BR(abbc) exact set")
}

fn rich_word_with_non_rich_reversal() -> FixtureOutcome {
    let mut f = Fixture::new();
    let word = w("a^2b^3a^3");
    f.expect(is_rich(&word), || format!("{word} is not rich"));
    f.witness(&word, &w("a^2bab^2a^2"));
    f.not_all_rich(&word);
    f.summary = "a^2b^3a^3 rich, a^2bab^2a^2 in BR and not rich".into();
    f.finish("b", "rich word whose block reversal is not all rich")
}

fn alternating_families() -> FixtureOutcome {
    let mut f = Fixture::new();
    for l in 3..=8 {
        let word = if l % 2 == 1 {
            w("a").concat(&w(&"ba".repeat((l - 1) / 2)))
        } else {
            w(&"ab".repeat(l / 2))
        };
        f.expect(word.run_length() == l, || format!("{word} has l != {l}"));
        f.all_rich(&word);
    }
    f.summary = "a(ba)^i and (ab)^i all rich for l = 3..8".into();
    f.finish("c", "alternating words are all rich")
}

fn counterexample_families() -> FixtureOutcome {
    let mut f = Fixture::new();
    for l in 3..=8 {
        let (v, v_prime) = if l % 2 == 1 {
            let i = (l - 3) / 2;
            (
                w("a^2b^3a^3").concat(&w(&"ba".repeat(i))),
                w(&"ba".repeat(i)).concat(&w("a^2b^2aba^2")),
            )
        } else {
            let i = (l - 4) / 2;
            (
                w("a^2b^3a^3").concat(&w(&"ba".repeat(i))).concat(&w("b")),
                w(&"ba".repeat(i)).concat(&w("ba^2b^2aba^2")),
            )
        };
        f.expect(v.run_length() == l, || format!("{v} has l != {l}"));
        f.witness(&v, &v_prime);
        f.not_all_rich(&v);
    }
    f.summary = "witness in BR and not rich for l = 3..8".into();
    f.finish("d", "families with a non-rich element")
}

fn six_run_boundary() -> FixtureOutcome {
    let mut f = Fixture::new();
    for n1 in 1..=10 {
        f.all_rich(&w(&format!("a^{n1}babab")));
    }
    for (word, witness) in [
        ("a^2babab^3", "bab^2a^2bab"),
        ("a^3babab^2", "abab^2a^2ba"),
        ("a^3babab^3", "bab^2a^3bab"),
    ] {
        let word = w(word);
        f.witness(&word, &w(witness));
        f.not_all_rich(&word);
    }
    f.summary = "a^n1 babab all rich for n1 <= 10; three listed words refuted".into();
    f.finish("e", "a^n1 b a b a b^n6 boundary cases")
}

fn three_run_helper() -> FixtureOutcome {
    let mut f = Fixture::new();
    for n2 in [3, 4] {
        for n1 in 1..=8 {
            f.all_rich(&w(&format!("a^{n1}b^{n2}a")));
            f.all_rich(&w(&format!("ab^{n2}a^{n1}")));
        }
    }
    f.summary = "a^n1 b^n2 a and a b^n2 a^n1 all rich for n2 in {3,4}, n1 <= 8".into();
    f.finish("f", "three-run helper family")
}

/// `cde a fgh b ijk b lmn a opq`: blocks over pairwise disjoint alphabets.
pub const DISJOINT_BLOCKS_WORD: &str = "cdeafghbijkblmnaopq";

fn disjoint_blocks() -> FixtureOutcome {
    let mut f = Fixture::new();
    let word = w(DISJOINT_BLOCKS_WORD);
    f.expect(word.len() == 19 && word.alph().len() == 17, || {
        format!("{word} does not have 19 letters over 17")
    });
    match count_rich_elements(&word, Limits::new(word.len())) {
        Ok((rich, distinct)) => {
            f.expect(rich == 0, || {
                format!("{rich} of {distinct} elements are rich")
            });
            f.summary = format!("2^18 partitions, {distinct} distinct elements, none rich");
        }
        Err(e) => f.expect(false, || e.to_string()),
    }
    f.finish("g", "no rich element for disjoint-alphabet blocks")
}

pub fn fixture_suite() -> FixtureReport {
    let started = Instant::now();
    let runs: [fn() -> FixtureOutcome; 7] = [
        br_of_abbc,
        rich_word_with_non_rich_reversal,
        alternating_families,
        counterexample_families,
        six_run_boundary,
        three_run_helper,
        disjoint_blocks,
    ];
    let outcomes = runs.iter().map(|run| run()).collect();
    FixtureReport {
        outcomes,
        wall_time_ms: started.elapsed().as_millis() as u64,
    }
}
