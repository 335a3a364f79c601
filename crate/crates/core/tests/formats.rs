mod common;

use schemadet::format::{parse_automaton, parse_nested_word, write_nfa, write_sha, Automaton};
use schemadet::random::{instance_rng, letters, random_nfa, random_sha};
use schemadet::schemas::{one_x_dfa, one_x_sha};
use schemadet::{Error, Hedge, Item, NestedWord};

fn leaf(s: &str) -> Item<String> {
    Item::Letter(s.to_string())
}

fn tree(items: Vec<Item<String>>) -> Item<String> {
    Item::Tree(Hedge::from_items(items))
}

#[test]
fn random_automata_round_trip() {
    for i in 0..1000u64 {
        let mut rng = instance_rng(51, i);
        let sigma = letters(1 + (i % 3) as usize);
        let n = (i % 6) as usize;
        let a = random_nfa(&mut rng, &sigma, n, 0.5);
        let named = a
            .clone()
            .with_names((0..n).map(|q| format!("s{q}")).collect())
            .unwrap();
        for x in [a, named] {
            let text = write_nfa(&x);
            let back = parse_automaton(&text).unwrap();
            assert_eq!(back, Automaton::Nfa(x.clone()));
            assert_eq!(back.to_text(), text);
        }
        let h = random_sha(&mut rng, &sigma, n, 0.5, 0.5);
        let text = write_sha(&h);
        let back = parse_automaton(&text).unwrap();
        assert_eq!(back, Automaton::Sha(h));
        assert_eq!(back.to_text(), text);
    }
}

#[test]
fn fixtures_are_canonical() {
    for name in ["a0.aut", "not_perfect.aut", "one_x_nw.aut"] {
        let text = std::fs::read_to_string(common::fixture_path(name)).unwrap();
        assert_eq!(parse_automaton(&text).unwrap().to_text(), text, "{name}");
    }
}

#[test]
fn error_lines() {
    let err = parse_automaton("nfa\nalphabet a\nstates 0 1\nrule 0 a 5\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }));
    assert!(err.to_string().contains("line 4"));
    assert!(matches!(
        parse_automaton("nfa\nalphabet a >\nstates 0\n"),
        Err(Error::Parse { line: 2, .. })
    ));
}

#[test]
fn nested_word_example() {
    let h = parse_nested_word("< a < b > > c < d < > >").unwrap();
    let expected: NestedWord = Hedge::from_items(vec![
        tree(vec![leaf("a"), tree(vec![leaf("b")])]),
        leaf("c"),
        tree(vec![leaf("d"), tree(vec![])]),
    ]);
    assert_eq!(h, expected);
    assert_eq!(h.size(), 8);
    assert_eq!(h.depth(), 2);
    assert_eq!(parse_nested_word("").unwrap(), Hedge::empty());
    assert!(matches!(parse_nested_word("< a"), Err(Error::Unbalanced { position: 0 })));
    assert!(matches!(parse_nested_word("a >"), Err(Error::Unbalanced { position: 1 })));
}

#[test]
fn enumerated_hedges_round_trip() {
    let sigma = letters(2);
    for h in schemadet::oracle::enum_hedges(2, 5, 3) {
        let text = h.decode(&sigma).to_string();
        let back = parse_nested_word(&text).unwrap().encode(&sigma).unwrap();
        assert_eq!(back, h, "{text}");
    }
}

#[test]
fn dot_output() {
    let d = Automaton::Nfa(one_x_dfa(&common::sigma_a()).unwrap());
    let dot = d.to_dot();
    let rule_edges = dot
        .lines()
        .filter(|l| l.contains("->") && !l.contains("class=\"initial\""))
        .count();
    assert_eq!(rule_edges, 3);
    assert!(dot.contains("doublecircle"));
    assert_eq!(dot, d.to_dot());

    let s = Automaton::Sha(one_x_sha(&common::sigma_a()).unwrap());
    let dot = s.to_dot();
    assert_eq!(dot.lines().filter(|l| l.contains("class=\"apply\"")).count(), 3);
    assert!(dot.contains("class=\"tree-initial\""));
}
