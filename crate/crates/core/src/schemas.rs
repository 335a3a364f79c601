//! The one-x schemas and monadic queries defined by query automata.
//!
//! A query automaton over Σ reads Σ ⊎ {x} (words) or Σ ⊎ {x, not-x} (nested
//! words). A position or node is selected when the input annotated with x at
//! that place is accepted.

use std::collections::BTreeSet;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::nested::{Hedge, Item, NestedWord};
use crate::nfa::{Dfa, Nfa, Rule};
use crate::sha::{ApplyRule, Dsha, Sha};

/// The selection variable.
pub const X: &str = "x";
/// Marks a node that is not selected.
pub const NOT_X: &str = "not-x";

/// The DFA over Σ ⊎ {x} accepting the words with exactly one x.
///
/// States 0 (no x yet) and 1 (one x seen); 1 is final. Reading a second x
/// has no transition.
pub fn one_x_dfa(sigma: &Alphabet) -> Result<Dfa> {
    if sigma.contains(X) {
        return Err(Error::ReservedSymbol(X.into()));
    }
    one_x_over(&sigma.extended([X])?)
}

/// [`one_x_dfa`] built over an alphabet that already contains `x`.
pub fn one_x_over(alphabet: &Alphabet) -> Result<Dfa> {
    let x = alphabet
        .letter(X)
        .ok_or_else(|| Error::Precondition(format!("alphabet lacks `{X}`")))?;
    let mut rules = vec![Rule::new(0, x, 1)];
    for letter in alphabet.letters().filter(|&l| l != x) {
        rules.push(Rule::new(0, letter, 0));
        rules.push(Rule::new(1, letter, 1));
    }
    Nfa::new(alphabet.clone(), 2, [0], [1], rules)
}

/// The dSHA over Σ ⊎ {x, not-x} accepting the nested words with exactly one x.
pub fn one_x_sha(sigma: &Alphabet) -> Result<Dsha> {
    for reserved in [X, NOT_X] {
        if sigma.contains(reserved) {
            return Err(Error::ReservedSymbol(reserved.into()));
        }
    }
    one_x_sha_over(&sigma.extended([X, NOT_X])?)
}

/// [`one_x_sha`] built over an alphabet that already contains `x`.
pub fn one_x_sha_over(alphabet: &Alphabet) -> Result<Dsha> {
    let word = one_x_over(alphabet)?;
    Sha::new(
        word,
        [0],
        [
            ApplyRule::new(0, 0, 0),
            ApplyRule::new(0, 1, 1),
            ApplyRule::new(1, 0, 1),
        ],
    )
}

/// Inserts x after position `pi`; position 0 is the start of the word.
pub fn insert_word<S: AsRef<str>>(w: &[S], pi: usize) -> Result<Vec<String>> {
    if pi > w.len() {
        return Err(Error::PositionOutOfRange {
            position: pi,
            len: w.len(),
        });
    }
    let mut out: Vec<String> = w.iter().map(|s| s.as_ref().to_owned()).collect();
    out.insert(pi, X.to_owned());
    Ok(out)
}

/// Positions of `w` selected by the query automaton `a`.
pub fn select_word<S: AsRef<str>>(a: &Nfa, w: &[S]) -> Result<BTreeSet<usize>> {
    if let Some(s) = w.iter().find(|s| s.as_ref() == X) {
        return Err(Error::ReservedSymbol(s.as_ref().to_owned()));
    }
    let mut selected = BTreeSet::new();
    for pi in 0..=w.len() {
        if a.accepts(&insert_word(w, pi)?)? {
            selected.insert(pi);
        }
    }
    Ok(selected)
}

/// Node ids of `h`: its trees numbered from 1 in document order (preorder).
pub fn nodes<L>(h: &Hedge<L>) -> BTreeSet<usize> {
    (1..=h.num_trees()).collect()
}

/// Prepends x to the children of node `pi` and not-x to those of every other node.
pub fn annotate(h: &NestedWord, pi: usize) -> Result<NestedWord> {
    if pi == 0 || pi > h.num_trees() {
        return Err(Error::InvalidNode(pi));
    }
    let mut next = 1;
    Ok(annotate_from(h, pi, &mut next))
}

fn annotate_from(h: &NestedWord, pi: usize, next: &mut usize) -> NestedWord {
    let items = h
        .items()
        .iter()
        .map(|item| match item {
            Item::Letter(l) => Item::Letter(l.clone()),
            Item::Tree(inner) => {
                let id = *next;
                *next += 1;
                let mark = if id == pi { X } else { NOT_X };
                let children = annotate_from(inner, pi, next);
                Item::Tree(NestedWord::word(&[mark]).concat(children))
            }
        })
        .collect();
    Hedge::from_items(items)
}

/// Nodes of `h` selected by the query automaton `a`.
pub fn select_nodes(a: &Sha, h: &NestedWord) -> Result<BTreeSet<usize>> {
    if let Some(s) = h.letters().find(|s| *s == X || *s == NOT_X) {
        return Err(Error::ReservedSymbol(s.clone()));
    }
    let mut selected = BTreeSet::new();
    for pi in nodes(h) {
        if a.accepts_nested(&annotate(h, pi)?)? {
            selected.insert(pi);
        }
    }
    Ok(selected)
}
