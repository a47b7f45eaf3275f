use blore_core::classifier::{Classifier, PatternTable};
use blore_core::{classify, oracle_all_rich, Limits, RuleId, Word};

fn all_words(k: u8, n: usize) -> impl Iterator<Item = Word> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut ids = vec![0u8; n];
        for slot in ids.iter_mut().rev() {
            *slot = (idx % k as u64) as u8;
            idx /= k as u64;
        }
        Word::from_ids(&ids, k as usize).unwrap()
    })
}

#[test]
fn verdict_is_invariant_under_reverse_and_complement() {
    let c = Classifier::default();
    for n in 0..=14 {
        for word in all_words(2, n) {
            let v = c.classify(&word).all_rich;
            assert_eq!(v, c.classify(&word.reverse()).all_rich, "{word}");
            assert_eq!(
                v,
                c.classify(&word.complement().unwrap()).all_rich,
                "{word}"
            );
        }
    }
    for n in 0..=7 {
        for word in all_words(3, n) {
            assert_eq!(
                c.classify(&word).all_rich,
                c.classify(&word.reverse()).all_rich
            );
        }
    }
}

#[test]
fn affirmative_long_binary_words_have_two_to_eight_runs() {
    let c = Classifier::default();
    for n in 8..=16 {
        for word in all_words(2, n).filter(|w| w.alph().len() == 2) {
            if c.classify(&word).all_rich {
                assert!((2..=8).contains(&word.run_length()), "{word}");
            }
        }
    }
}

#[test]
fn affirmative_non_binary_words_are_rich_themselves() {
    for n in 1..=7 {
        for word in all_words(3, n).filter(|w| w.alph().len() >= 3) {
            if classify(&word).all_rich {
                assert_eq!(blore_core::pal_count(&word), word.len());
            }
        }
    }
}

#[test]
fn matched_form_present_iff_table_rule() {
    let c = Classifier::default();
    for word in all_words(2, 12) {
        let v = c.classify(&word);
        let table = matches!(
            v.rule,
            RuleId::BinaryL3Table
                | RuleId::BinaryL4Table
                | RuleId::BinaryL5Table
                | RuleId::BinaryL6Table
                | RuleId::BinaryL7Table
                | RuleId::BinaryL8Table
        );
        assert_eq!(v.matched_form.is_some(), table);
        assert_eq!(v.all_rich, v.rule.is_affirmative());
    }
}

#[test]
fn classifier_agrees_with_oracle_on_small_binary_words() {
    let c = Classifier::default();
    for n in 1..=11 {
        for word in all_words(2, n) {
            let oracle = oracle_all_rich(&word, Limits::default()).unwrap();
            assert_eq!(c.classify(&word).all_rich, oracle.all_rich, "{word}");
        }
    }
}

#[test]
fn closed_table_strictly_extends_base() {
    let base = PatternTable::base();
    let closed = PatternTable::closed();
    assert!(closed.len() > base.len());
    assert!(closed
        .forms()
        .iter()
        .all(|f| (3..=8).contains(&f.run_count())));
    // run counts never increase along the table
    assert!(closed
        .forms()
        .windows(2)
        .all(|p| p[0].run_count() >= p[1].run_count()));
}
