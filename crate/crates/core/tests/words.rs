use blore_core::{Rational, Word};
use proptest::prelude::*;

fn word(max_alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_alphabet).prop_flat_map(move |k| {
        prop::collection::vec(0..k, 0..=max_len)
            .prop_map(move |ids| Word::from_ids(&ids, k as usize).unwrap())
    })
}

fn nonempty_word(max_alphabet: u8, max_len: usize) -> impl Strategy<Value = Word> {
    word(max_alphabet, max_len).prop_filter("non-empty", |w| !w.is_empty())
}

proptest! {
    #[test]
    fn reverse_is_an_involution(w in word(4, 30)) {
        prop_assert_eq!(w.reverse().reverse(), w);
    }

    #[test]
    fn complement_is_an_involution(w in word(2, 30).prop_map(|w| w.with_alphabet(2).unwrap())) {
        prop_assert_eq!(w.complement().unwrap().complement().unwrap(), w);
    }

    #[test]
    fn rle_expands_back(w in nonempty_word(4, 40)) {
        let r = w.rle().unwrap();
        prop_assert_eq!(r.expand(), w.clone());
        prop_assert_eq!(r.run_sequence().len(), w.run_length());
        prop_assert!(r.runs().windows(2).all(|p| p[0].0 != p[1].0));
        prop_assert!(r.runs().iter().all(|r| r.1 >= 1));
    }

    #[test]
    fn conjugates_are_abelian_and_divide_length(w in nonempty_word(3, 16)) {
        let c = w.conjugates();
        prop_assert!(c.contains(&w));
        prop_assert!(c.iter().all(|u| u.abelian_equivalent(&w)));
        prop_assert_eq!(w.len() % c.len(), 0);
    }

    #[test]
    fn fractional_power_lengths(u in nonempty_word(3, 8), p in 1u64..60, q in 1u64..12) {
        let p = p.max(q);
        let k = Rational::new(p, q).unwrap();
        let v = u.fractional_power(k).unwrap();
        prop_assert_eq!(v.len() as u64, (p * u.len() as u64).div_ceil(q));
        prop_assert!(v.letters().iter().enumerate().all(|(i, l)| *l == u.letters()[i % u.len()]));
    }

    #[test]
    fn integer_powers(u in nonempty_word(3, 8), m in 1u64..6) {
        let n = u.len() as u64;
        let v = u.fractional_power(Rational::new(n * m, n).unwrap()).unwrap();
        let mut expect = Word::empty(u.alphabet_size() as u8);
        for _ in 0..m {
            expect = expect.concat(&u);
        }
        prop_assert_eq!(v, expect);
    }

    #[test]
    fn text_round_trip(w in word(5, 60)) {
        let plain = Word::parse(&w.to_plain_string(), Some(w.alphabet_size())).unwrap();
        prop_assert_eq!(&plain, &w);
        let caret = Word::parse(&w.to_caret_string(), Some(w.alphabet_size())).unwrap();
        prop_assert_eq!(&caret, &w);
        let shown = Word::parse(&w.to_string(), Some(w.alphabet_size())).unwrap();
        prop_assert_eq!(shown, w);
    }
}
