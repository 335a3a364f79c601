#![allow(dead_code)]

use std::path::PathBuf;

use schemadet::format::{parse_automaton, Automaton};
use schemadet::{Alphabet, Hedge, Letter, Nfa, Sha};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> Automaton {
    parse_automaton(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub fn nfa(text: &str) -> Nfa {
    match parse_automaton(text).unwrap() {
        Automaton::Nfa(a) => a,
        Automaton::Sha(_) => panic!("expected a word automaton"),
    }
}

pub fn sha(text: &str) -> Sha {
    match parse_automaton(text).unwrap() {
        Automaton::Sha(a) => a,
        Automaton::Nfa(_) => panic!("expected a hedge automaton"),
    }
}

/// The running example: 3 states named 2, 3, 4 recognizing (x + ε)(x a)*.
pub fn a0() -> Nfa {
    match fixture("a0.aut") {
        Automaton::Nfa(a) => a,
        Automaton::Sha(_) => unreachable!(),
    }
}

pub fn sigma_a() -> Alphabet {
    Alphabet::new(["a"]).unwrap()
}

pub fn word(a: &Nfa, text: &str) -> Vec<Letter> {
    a.alphabet().encode(&schemadet::format::parse_word(text)).unwrap()
}

pub fn hedge(alphabet: &Alphabet, text: &str) -> Hedge<Letter> {
    schemadet::format::parse_nested_word(text).unwrap().encode(alphabet).unwrap()
}

/// Hedges of exactly `n` items and depth at most `d` over `k` letters.
pub fn hedge_count_exact(k: u64, n: usize, d: usize) -> u64 {
    let mut table = vec![vec![0u64; n + 1]; d + 1];
    for dd in 0..=d {
        table[dd][0] = 1;
        for nn in 1..=n {
            let mut c = k * table[dd][nn - 1];
            if dd > 0 {
                for m in 0..nn {
                    c += table[dd - 1][m] * table[dd][nn - 1 - m];
                }
            }
            table[dd][nn] = c;
        }
    }
    table[d][n]
}

pub fn hedge_count(k: u64, items: usize, depth: usize) -> u64 {
    (0..=items).map(|n| hedge_count_exact(k, n, depth)).sum()
}
