mod common;

use common::{a0, nfa, word};
use schemadet::oracle::{self, iso_check, lang_equal_bounded, Equivalence};
use schemadet::random::{instance_rng, letters, random_dfa, random_nfa, word_instance};
use schemadet::schemas::{one_x_dfa, one_x_over};
use schemadet::{
    canon, determinize, product, project_first, schema_clean, schema_determinize, Error, Nfa,
    StateSet,
};

fn set(states: &[usize]) -> StateSet {
    states.iter().copied().collect()
}

#[test]
fn runs_follow_the_rules() {
    let a = a0();
    assert_eq!(a.run(&set(&[1]), &[]), set(&[1]));
    let onex = one_x_dfa(&common::sigma_a()).unwrap();
    assert_eq!(onex.run_word(&set(&[0]), &["x", "a"]).unwrap(), set(&[1]));
    let reached = a.run(&a.initial().iter().copied().collect(), &word(&a, "x a"));
    assert!(reached.iter().any(|&q| a.is_final(q)));
    assert_eq!(
        a.run_word(&set(&[0]), &["b"]).unwrap_err(),
        Error::UnknownLetter("b".into())
    );
}

#[test]
fn a0_membership() {
    let a = a0();
    for w in ["x", "x a", "x x a", ""] {
        assert!(a.accepts(&schemadet::format::parse_word(w)).unwrap(), "{w:?}");
    }
    assert!(!a.accepts(&["a"]).unwrap());
    let empty = Nfa::empty(a.alphabet().clone());
    assert!(!empty.accepts::<&str>(&[]).unwrap());
}

#[test]
fn a0_language_is_x_opt_then_xa_star() {
    let a = a0();
    let x = a.alphabet().letter("x").unwrap();
    let l = a.alphabet().letter("a").unwrap();
    for w in oracle::enum_words(2, 8) {
        let body = if w.first() == Some(&x) && w.len() % 2 == 1 { &w[1..] } else { &w[..] };
        let expected = body.len() % 2 == 0 && body.chunks(2).all(|c| c == [x, l]);
        assert_eq!(a.accepts_letters(&w), expected, "{w:?}");
    }
}

#[test]
fn determinism() {
    assert!(one_x_dfa(&letters(3)).unwrap().is_deterministic());
    assert!(!a0().is_deterministic());
    assert!(Nfa::empty(letters(1)).is_deterministic());
}

#[test]
fn determinize_a0() {
    let det = determinize(&a0());
    assert_eq!(det.automaton.num_states(), 4);
    let subsets: Vec<Vec<String>> = det
        .subsets
        .iter()
        .map(|s| s.iter().map(|&q| a0().state_name(q)).collect())
        .collect();
    assert_eq!(subsets, [vec!["2", "4"], vec!["2", "3"], vec!["2"], vec!["3"]]);
    assert_eq!(
        lang_equal_bounded(&a0(), &det.automaton, 8).unwrap(),
        Equivalence::Equal
    );
}

#[test]
fn determinize_of_a_dfa_renames_to_singletons() {
    for i in 0..50 {
        let mut rng = instance_rng(11, i);
        let d = random_dfa(&mut rng, &letters(2), 4, 0.7);
        let (d, _) = oracle::accessible_part(&d);
        let det = determinize(&d);
        let map = iso_check(&d, &det.automaton).unwrap().expect("isomorphic");
        for (q, &image) in map.iter().enumerate() {
            assert_eq!(det.subsets.subset(image), &[q]);
        }
    }
}

#[test]
fn determinize_without_initial_states() {
    let a = nfa("nfa\nalphabet a\nstates 0 1\nfinal 1\nrule 0 a 1\n");
    assert_eq!(determinize(&a).automaton.num_states(), 0);
}

#[test]
fn product_examples() {
    let d = one_x_over(a0().alphabet()).unwrap();
    let p = product(&d, &d).unwrap();
    let proj = project_first(&p.automaton, &p.pairs).unwrap();
    assert_eq!(proj.automaton, d);
    assert!(proj.automaton.rules().len() <= p.automaton.rules().len());

    let with_onex = product(&a0(), &d).unwrap().automaton;
    let accepted: Vec<String> = oracle::enum_words(2, 4)
        .filter(|w| with_onex.accepts_letters(w))
        .map(|w| oracle::show_word(with_onex.alphabet(), &w))
        .collect();
    assert_eq!(accepted, ["x", "x a"]);

    let no_initial = nfa("nfa\nalphabet a x\nstates 0\n");
    assert_eq!(product(&a0(), &no_initial).unwrap().automaton.num_states(), 0);
    let empty = product(&no_initial, &no_initial).unwrap();
    assert_eq!(project_first(&empty.automaton, &empty.pairs).unwrap().automaton.num_states(), 0);
}

#[test]
fn cleaning_det_a0_drops_epsilon_and_xxa() {
    let det = determinize(&a0()).automaton;
    let onex = one_x_over(det.alphabet()).unwrap();
    let cleaned = schema_clean(&det, &onex).unwrap().automaton;
    for w in ["", "x x a"] {
        assert!(det.accepts_letters(&word(&det, w)));
        assert!(!cleaned.accepts_letters(&word(&det, w)), "{w:?}");
    }
    match lang_equal_bounded(&det, &cleaned, 8).unwrap() {
        Equivalence::Differ(w) => assert!(w.is_empty()),
        Equivalence::Equal => panic!("cleaning changed nothing"),
    }
}

#[test]
fn a0_is_schema_clean() {
    let a = a0();
    let onex = one_x_over(a.alphabet()).unwrap();
    let c = schema_clean(&a, &onex).unwrap();
    assert_eq!(c.automaton, a);
    assert_eq!(c.automaton.num_states(), 3);
    assert_eq!(c.automaton.rules().len(), 4);
}

#[test]
fn clean_but_not_perfect() {
    let a = match common::fixture("not_perfect.aut") {
        schemadet::Automaton::Nfa(a) => a,
        _ => unreachable!(),
    };
    assert!(a.is_deterministic());
    let onex = one_x_over(a.alphabet()).unwrap();
    assert_eq!(schema_clean(&a, &onex).unwrap().automaton, a);
    assert!(a.accepts(&["x", "a", "x", "a"]).unwrap());
    assert!(!onex.accepts(&["x", "a", "x", "a"]).unwrap());
    let from = set(a.initial());
    assert_eq!(a.run_word(&from, &["a"]).unwrap(), set(&[1]));
    assert_eq!(a.run_word(&from, &["x", "a"]).unwrap(), set(&[1]));
}

#[test]
fn cleaning_with_itself_keeps_accessible_dfas() {
    for i in 0..50 {
        let mut rng = instance_rng(12, i);
        let (d, _) = oracle::accessible_part(&random_dfa(&mut rng, &letters(2), 5, 0.6));
        assert_eq!(schema_clean(&d, &d).unwrap().automaton, d);
    }
}

#[test]
fn theorem_one_on_a0() {
    let a = a0();
    let onex = one_x_over(a.alphabet()).unwrap();
    let sd = schema_determinize(&a, &onex).unwrap();
    let det = determinize(&a);
    let cleaned = schema_clean(&det.automaton, &onex).unwrap();
    let (left, _) = canon::by_subsets(&sd.automaton, &sd.alignment.subsets).unwrap();
    let subsets = canon::restrict(&det.subsets, &cleaned.origin);
    let (right, _) = canon::by_subsets(&cleaned.automaton, &subsets).unwrap();
    assert_eq!(
        schemadet::format::write_nfa(&left),
        schemadet::format::write_nfa(&right)
    );
}

#[test]
fn sdet_never_exceeds_det() {
    for i in 0..1000 {
        let (a, s) = word_instance(21, i);
        let det = determinize(&a).automaton.num_states();
        let sdet = schema_determinize(&a, &s).unwrap().automaton.num_states();
        assert!(sdet <= det, "instance {i}");
    }
}

#[test]
fn sdet_with_empty_schema() {
    let s = nfa("nfa\nalphabet a x\nstates 0\n");
    assert_eq!(schema_determinize(&a0(), &s).unwrap().automaton.num_states(), 0);
}

#[test]
fn random_nfa_product_language() {
    for i in 0..100 {
        let mut rng = instance_rng(13, i);
        let a = random_nfa(&mut rng, &letters(2), 4, 0.5);
        let s = random_nfa(&mut rng, &letters(2), 3, 0.5);
        assert_eq!(schemadet::check::product_language(&a, &s, 6), Ok(()));
    }
}
