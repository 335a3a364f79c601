mod common;

use std::collections::HashSet;

use common::{a0, hedge_count};
use schemadet::oracle::{
    accessible_part, enum_hedges, enum_words, iso_check, lang_equal_bounded, naive_determinize,
    Equivalence,
};
use schemadet::random::{instance_rng, letters, random_nfa, word_instance};
use schemadet::schemas::one_x_over;
use schemadet::{determinize, product, schema_clean, Nfa};

#[test]
fn word_counts() {
    for k in 0..=3usize {
        for len in 0..=5u32 {
            let expected: usize = (0..=len).map(|i| k.pow(i)).sum();
            let words: Vec<_> = enum_words(k, len as usize).collect();
            assert_eq!(words.len(), expected);
            assert!(words.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        }
    }
}

#[test]
fn hedge_counts_match_the_recurrence() {
    assert_eq!(hedge_count(1, 2, 1), 8);
    assert_eq!(hedge_count(1, 8, 3), 40_367);
    assert_eq!(hedge_count(2, 8, 3), 393_424);
    for k in 0..=2 {
        for items in 0..=5 {
            for depth in 0..=3 {
                let all: Vec<_> = enum_hedges(k, items, depth).collect();
                assert_eq!(all.len() as u64, hedge_count(k as u64, items, depth));
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
                assert!(all.iter().all(|h| h.size() <= items && h.depth() <= depth));
            }
        }
    }
}

#[test]
fn naive_powerset_against_determinize() {
    for i in 0..1000 {
        let mut rng = instance_rng(61, i);
        let n = 1 + (i % 5) as usize;
        let a = random_nfa(&mut rng, &letters(2), n, [0.2, 0.5, 0.8][i as usize % 3]);
        let naive = naive_determinize(&a).unwrap();
        assert!(naive.num_states() < 1 << n);
        let det = determinize(&a).automaton;
        assert_eq!(lang_equal_bounded(&naive, &det, 6).unwrap(), Equivalence::Equal);
        assert_eq!(lang_equal_bounded(&naive, &a, 6).unwrap(), Equivalence::Equal);
        let (part, _) = accessible_part(&naive);
        assert!(iso_check(&part, &det).unwrap().is_some(), "instance {i}");
    }
}

#[test]
fn bounded_equality_examples() {
    let a = a0();
    assert!(lang_equal_bounded(&a, &a, 8).unwrap().is_equal());
    let det = determinize(&a).automaton;
    assert!(lang_equal_bounded(&a, &det, 8).unwrap().is_equal());
    let onex = one_x_over(a.alphabet()).unwrap();
    let cleaned = schema_clean(&det, &onex).unwrap().automaton;
    assert_eq!(
        lang_equal_bounded(&det, &cleaned, 8).unwrap(),
        Equivalence::Differ(vec![])
    );
}

#[test]
fn iso_examples() {
    let d = one_x_over(a0().alphabet()).unwrap();
    assert_eq!(iso_check(&d, &d).unwrap(), Some(vec![0, 1]));
    let fin = common::nfa("nfa\nalphabet a\nstates 0\ninitial 0\nfinal 0\n");
    let non = common::nfa("nfa\nalphabet a\nstates 0\ninitial 0\n");
    assert_eq!(iso_check(&fin, &non).unwrap(), None);
    let unreachable = common::nfa("nfa\nalphabet a\nstates 0 1\ninitial 0\n");
    assert!(iso_check(&unreachable, &unreachable).is_err());
}

#[test]
fn footnote_isomorphism() {
    for i in 0..300 {
        let (a, s) = word_instance(62, i);
        let left = determinize(&product(&a, &s).unwrap().automaton).automaton;
        let right = product(&determinize(&a).automaton, &s).unwrap().automaton;
        let map = schemadet::check::footnote(&a, &s).unwrap();
        assert!(schemadet::oracle::is_isomorphism(&left, &right, &map));
    }
}

#[test]
fn empty_automaton_language() {
    let empty = Nfa::empty(letters(2));
    for w in enum_words(2, 4) {
        assert!(!empty.accepts_letters(&w));
    }
}
