mod common;

use common::{hedge, sha, sigma_a};
use schemadet::format::parse_nested_word;
use schemadet::oracle::{self, iso_check_sha};
use schemadet::random::{hedge_instance, instance_rng, letters, random_dsha, random_sha};
use schemadet::schemas::one_x_sha;
use schemadet::{
    canon, determinize_sha, product_sha, schema_clean_sha, schema_determinize_sha, ApplyRule,
    Error, Nfa, Sha, StateSet,
};

fn set(states: &[usize]) -> StateSet {
    states.iter().copied().collect()
}

#[test]
fn evaluation_examples() {
    let d = one_x_sha(&sigma_a()).unwrap();
    let p = hedge(d.alphabet(), "< x >");
    assert_eq!(d.eval(&set(&[0]), &hedge(d.alphabet(), "")), set(&[0]));
    assert_eq!(d.eval(&set(&[0]), &p), set(&[1]));
    assert_eq!(d.eval(&set(&[0]), &hedge(d.alphabet(), "< x > < x >")), set(&[]));
    assert_eq!(
        oracle::eval_sha(&d, &set(&[0]), &hedge(d.alphabet(), "< x > < x >")),
        set(&[])
    );
    let bad = parse_nested_word("< y >").unwrap();
    assert_eq!(d.eval_hedge(&set(&[0]), &bad).unwrap_err(), Error::UnknownLetter("y".into()));
}

#[test]
fn acceptance_examples() {
    let d = one_x_sha(&sigma_a()).unwrap();
    let yes = parse_nested_word("a < x a >").unwrap();
    assert!(d.accepts_nested(&yes).unwrap());
    assert!(oracle::accepts_sha(&d, &yes.encode(d.alphabet()).unwrap()));
    assert!(!d.accepts_nested(&parse_nested_word("a").unwrap()).unwrap());
    let no_tree_init = sha("sha\nalphabet a\nstates 0\ninitial 0\nfinal 0\napply 0 0 0\n");
    assert!(!no_tree_init.accepts_nested(&parse_nested_word("< >").unwrap()).unwrap());
}

#[test]
fn determinism_of_hedge_automata() {
    assert!(one_x_sha(&letters(2)).unwrap().is_deterministic());
    let two = sha("sha\nalphabet a\nstates 0 1 2\napply 0 0 1\napply 0 0 2\n");
    assert!(!two.is_deterministic());
    for i in 0..30 {
        let mut rng = instance_rng(31, i);
        let a = schemadet::random::random_nfa(&mut rng, &letters(2), 3, 0.5);
        assert_eq!(Sha::from_nfa(a.clone()).is_deterministic(), a.is_deterministic());
    }
}

#[test]
fn determinize_examples() {
    let d = one_x_sha(&sigma_a()).unwrap();
    let det = determinize_sha(&d);
    let map = iso_check_sha(&d, &det.automaton).unwrap().unwrap();
    assert!(map.iter().enumerate().all(|(q, &m)| det.subsets.subset(m) == [q]));

    let none = Sha::new(Nfa::new(letters(1), 2, [], [0], []).unwrap(), [], []).unwrap();
    assert_eq!(determinize_sha(&none).automaton.num_states(), 0);
    let tree_only = Sha::new(Nfa::new(letters(1), 2, [], [0], []).unwrap(), [1], []).unwrap();
    let det = determinize_sha(&tree_only).automaton;
    assert_eq!(det.num_states(), 1);
    assert_eq!(det.tree_initial(), &[0]);
}

#[test]
fn determinize_preserves_languages() {
    for i in 0..40 {
        let mut rng = instance_rng(32, i);
        let a = random_sha(&mut rng, &letters(2), 4, 0.5, 0.5);
        assert_eq!(schemadet::check::sha_det_language(&a, 6, 3), Ok(()), "instance {i}");
    }
}

#[test]
fn product_examples() {
    for i in 0..30 {
        let mut rng = instance_rng(33, i);
        let d = random_dsha(&mut rng, &letters(2), 4, 0.7, 0.7);
        let (part, _) = oracle::accessible_part_sha(&d);
        let p = product_sha(&d, &d).unwrap();
        assert!(p.pairs.pairs().iter().all(|(x, y)| x == y));
        assert!(iso_check_sha(&part, &p.automaton).unwrap().is_some());
        let a = random_sha(&mut rng, &letters(2), 3, 0.5, 0.5);
        assert_eq!(schemadet::check::sha_product_language(&a, &d, 6, 3), Ok(()));
    }
}

#[test]
fn cleaning_examples() {
    for i in 0..50 {
        let (a, s) = hedge_instance(34, i);
        let c = schema_clean_sha(&a, &s).unwrap();
        assert!(c.automaton.size() <= a.size());
        assert_eq!(schemadet::check::sha_clean_containment(&a, &s), Ok(()));
        let onex = schemadet::schemas::one_x_sha_over(
            &schemadet::Alphabet::new(["a", "x", "not-x"]).unwrap(),
        )
        .unwrap();
        assert!(schema_clean_sha(&onex, &onex).unwrap().automaton == onex);
    }
}

#[test]
fn theorem_two_examples() {
    for i in 0..500 {
        let (a, s) = hedge_instance(35, i);
        assert_eq!(schemadet::check::theorem2(&a, &s), Ok(()), "instance {i}");
        let det = determinize_sha(&a).automaton.num_states();
        let sdet = schema_determinize_sha(&a, &s).unwrap().automaton.num_states();
        assert!(sdet <= det);
    }
    let d = one_x_sha(&sigma_a()).unwrap();
    let empty = Sha::empty(d.alphabet().clone());
    assert_eq!(schema_determinize_sha(&d, &empty).unwrap().automaton.num_states(), 0);
}

#[test]
fn embedded_word_automata_give_word_results() {
    for i in 0..200 {
        let (a, s) = schemadet::random::word_instance(36, i);
        assert_eq!(schemadet::check::conservativity(&a, &s), Ok(()), "instance {i}");
    }
}

#[test]
fn missing_schema_apply_rules_prune() {
    let a = sha("sha\nalphabet a\nstates 0 1\ninitial 0\nfinal 1\ntreeinit 0\napply 0 0 1\n");
    let s = sha("sha\nalphabet a\nstates 0 1\ninitial 0\nfinal 0 1\ntreeinit 1\n");
    let sd = schema_determinize_sha(&a, &s).unwrap();
    assert!(sd.automaton.apply_rules().is_empty());
    let det = determinize_sha(&a);
    assert_eq!(det.automaton.apply_rules().len(), 1);
    let (left, _) = canon::sha_by_subsets(&sd.automaton, &sd.alignment.subsets).unwrap();
    assert_eq!(schemadet::check::theorem2_pair(&a, &s).unwrap().0, left);
    assert_eq!(ApplyRule::new(0, 0, 1), det.automaton.apply_rules()[0]);
}
