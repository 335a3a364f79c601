//! Nested words (hedges): sequences of letters and trees.
//!
//! A hedge is stored as its flat item list, so concatenation is associative
//! with the empty hedge as neutral element, and every nested word has exactly
//! one representation.

use std::fmt;

use crate::alphabet::{Alphabet, Letter, CLOSE, OPEN};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item<L> {
    Letter(L),
    Tree(Hedge<L>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hedge<L> {
    items: Vec<Item<L>>,
}

/// A nested word over symbol names.
pub type NestedWord = Hedge<String>;

impl<L> Default for Hedge<L> {
    fn default() -> Self {
        Hedge { items: Vec::new() }
    }
}

impl<L> Hedge<L> {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_items(items: Vec<Item<L>>) -> Self {
        Hedge { items }
    }

    pub fn letter(l: L) -> Self {
        Hedge {
            items: vec![Item::Letter(l)],
        }
    }

    /// The hedge consisting of the single tree `<self>`.
    pub fn into_tree(self) -> Self {
        Hedge {
            items: vec![Item::Tree(self)],
        }
    }

    pub fn concat(mut self, mut other: Self) -> Self {
        self.items.append(&mut other.items);
        self
    }

    pub fn push(&mut self, item: Item<L>) {
        self.items.push(item);
    }

    pub fn items(&self) -> &[Item<L>] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Item<L>> {
        self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Number of items, counting trees and their contents recursively.
    pub fn size(&self) -> usize {
        self.items
            .iter()
            .map(|item| match item {
                Item::Letter(_) => 1,
                Item::Tree(h) => 1 + h.size(),
            })
            .sum()
    }

    /// Maximal nesting of trees; 0 for a plain word.
    pub fn depth(&self) -> usize {
        self.items
            .iter()
            .map(|item| match item {
                Item::Letter(_) => 0,
                Item::Tree(h) => 1 + h.depth(),
            })
            .max()
            .unwrap_or(0)
    }

    /// Number of tree items at any depth.
    pub fn num_trees(&self) -> usize {
        self.items
            .iter()
            .map(|item| match item {
                Item::Letter(_) => 0,
                Item::Tree(h) => 1 + h.num_trees(),
            })
            .sum()
    }

    pub fn letters(&self) -> Box<dyn Iterator<Item = &L> + '_> {
        Box::new(self.items.iter().flat_map(|item| -> Box<dyn Iterator<Item = &L>> {
            match item {
                Item::Letter(l) => Box::new(std::iter::once(l)),
                Item::Tree(h) => h.letters(),
            }
        }))
    }

    pub fn map<M>(&self, f: &mut impl FnMut(&L) -> M) -> Hedge<M> {
        Hedge {
            items: self
                .items
                .iter()
                .map(|item| match item {
                    Item::Letter(l) => Item::Letter(f(l)),
                    Item::Tree(h) => Item::Tree(h.map(f)),
                })
                .collect(),
        }
    }
}

impl NestedWord {
    /// Builds a plain word from symbol names.
    pub fn word<S: AsRef<str>>(symbols: &[S]) -> Self {
        Hedge {
            items: symbols
                .iter()
                .map(|s| Item::Letter(s.as_ref().to_owned()))
                .collect(),
        }
    }

    pub fn encode(&self, alphabet: &Alphabet) -> Result<Hedge<Letter>> {
        let mut unknown = None;
        let encoded = self.map(&mut |s: &String| match alphabet.letter(s) {
            Some(l) => l,
            None => {
                unknown.get_or_insert_with(|| s.clone());
                0
            }
        });
        match unknown {
            Some(s) => Err(Error::UnknownLetter(s)),
            None => Ok(encoded),
        }
    }
}

impl Hedge<Letter> {
    pub fn decode(&self, alphabet: &Alphabet) -> NestedWord {
        self.map(&mut |&l| alphabet.symbol(l).to_owned())
    }
}

/// Token syntax: letters separated by whitespace, `<` and `>` around trees.
impl<L: fmt::Display> fmt::Display for Hedge<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for item in &self.items {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match item {
                Item::Letter(l) => write!(f, "{l}")?,
                Item::Tree(h) if h.is_empty() => write!(f, "{OPEN} {CLOSE}")?,
                Item::Tree(h) => write!(f, "{OPEN} {h} {CLOSE}")?,
            }
        }
        Ok(())
    }
}
