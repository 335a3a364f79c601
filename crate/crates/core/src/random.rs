//! Seeded random automata for property checks.
//!
//! Every instance is derived from `(seed, index)` alone, so instances can be
//! generated in any order or in parallel with identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::nfa::{Dfa, Nfa, Rule, State};
use crate::sha::{ApplyRule, Dsha, Sha};

/// Rule densities cycled through by the instance generators.
pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

const LETTERS: [&str; 4] = ["a", "b", "c", "d"];

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// The alphabet `a`, `b`, ... with `size` letters.
pub fn letters(size: usize) -> Alphabet {
    Alphabet::new(LETTERS[..size].iter().copied()).expect("distinct valid symbols")
}

fn subset<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<State> {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Each possible rule is present independently, with probability chosen so
/// that a state has about `2 * density` successors per letter.
pub fn random_nfa<R: Rng>(rng: &mut R, alphabet: &Alphabet, n: usize, density: f64) -> Nfa {
    let p = if n == 0 { 0.0 } else { (2.0 * density / n as f64).min(1.0) };
    let mut rules = Vec::new();
    for src in 0..n {
        for letter in alphabet.letters() {
            for dst in 0..n {
                if rng.gen_bool(p) {
                    rules.push(Rule::new(src, letter, dst));
                }
            }
        }
    }
    let initial = subset(rng, n, 0.4);
    let finals = subset(rng, n, 0.4);
    Nfa::new(alphabet.clone(), n, initial, finals, rules).expect("valid by construction")
}

/// A partial DFA with initial state 0 where each transition exists with
/// probability `density`.
pub fn random_dfa<R: Rng>(rng: &mut R, alphabet: &Alphabet, n: usize, density: f64) -> Dfa {
    let mut rules = Vec::new();
    for src in 0..n {
        for letter in alphabet.letters() {
            if rng.gen_bool(density) {
                rules.push(Rule::new(src, letter, rng.gen_range(0..n)));
            }
        }
    }
    let finals = subset(rng, n, 0.5);
    Nfa::new(alphabet.clone(), n, (n > 0).then_some(0), finals, rules)
        .expect("valid by construction")
}

pub fn random_sha<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    n: usize,
    density: f64,
    apply_density: f64,
) -> Sha {
    let word = random_nfa(rng, alphabet, n, density);
    let tree_initial = subset(rng, n, 0.4);
    let p = if n == 0 { 0.0 } else { (2.0 * apply_density / n as f64).min(1.0) };
    let mut apply = Vec::new();
    for left in 0..n {
        for tree in 0..n {
            for dst in 0..n {
                if rng.gen_bool(p) {
                    apply.push(ApplyRule::new(left, tree, dst));
                }
            }
        }
    }
    Sha::new(word, tree_initial, apply).expect("valid by construction")
}

/// A dSHA with initial state 0, a random tree-initial state, and partial
/// transition functions.
pub fn random_dsha<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    n: usize,
    density: f64,
    apply_density: f64,
) -> Dsha {
    let word = random_dfa(rng, alphabet, n, density);
    let tree_initial = (n > 0).then(|| rng.gen_range(0..n));
    let mut apply = Vec::new();
    for left in 0..n {
        for tree in 0..n {
            if rng.gen_bool(apply_density) {
                apply.push(ApplyRule::new(left, tree, rng.gen_range(0..n)));
            }
        }
    }
    Sha::new(word, tree_initial, apply).expect("valid by construction")
}

/// An NFA query with a DFA schema: `|Q| <= 6`, `|Σ| <= 3`, density cycled by index.
pub fn word_instance(seed: u64, index: u64) -> (Nfa, Dfa) {
    let mut rng = instance_rng(seed, index);
    let density = DENSITIES[index as usize % DENSITIES.len()];
    let alphabet = letters(rng.gen_range(1..=3));
    let n = rng.gen_range(1..=6);
    let a = random_nfa(&mut rng, &alphabet, n, density);
    let m = rng.gen_range(1..=6);
    let schema_density = rng.gen_range(0.5..1.0);
    let s = random_dfa(&mut rng, &alphabet, m, schema_density);
    (a, s)
}

/// A SHA query with a dSHA schema: `|Q| <= 5`, `|Σ| <= 2`, apply density cycled by index.
pub fn hedge_instance(seed: u64, index: u64) -> (Sha, Dsha) {
    let mut rng = instance_rng(seed, index);
    let apply_density = DENSITIES[index as usize % DENSITIES.len()];
    let alphabet = letters(rng.gen_range(1..=2));
    let n = rng.gen_range(1..=5);
    let density = DENSITIES[rng.gen_range(0..DENSITIES.len())];
    let a = random_sha(&mut rng, &alphabet, n, density, apply_density);
    let m = rng.gen_range(1..=5);
    let schema_density = rng.gen_range(0.5..1.0);
    let schema_apply = rng.gen_range(0.3..1.0);
    let s = random_dsha(&mut rng, &alphabet, m, schema_density, schema_apply);
    (a, s)
}
