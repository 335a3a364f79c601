use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`].
pub type Letter = usize;

/// Tokens that delimit trees in the nested-word syntax.
pub const OPEN: &str = "<";
pub const CLOSE: &str = ">";

/// A finite ordered set of symbol names.
///
/// The declaration order is the iteration order everywhere: constructions visit
/// letters in this order and serializers print them in this order.
#[derive(Clone, Default)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for symbol in symbols {
            alphabet.push(symbol.into())?;
        }
        Ok(alphabet)
    }

    /// Returns a copy extended by `extra`, in order.
    pub fn extended<I, S>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = self.clone();
        for symbol in extra {
            alphabet.push(symbol.into())?;
        }
        Ok(alphabet)
    }

    fn push(&mut self, symbol: String) -> Result<()> {
        if !is_valid_symbol(&symbol) {
            return Err(if symbol == OPEN || symbol == CLOSE {
                Error::ReservedSymbol(symbol)
            } else {
                Error::InvalidSymbol(symbol)
            });
        }
        if self.index.contains_key(&symbol) {
            return Err(Error::DuplicateSymbol(symbol));
        }
        self.index.insert(symbol.clone(), self.symbols.len());
        self.symbols.push(symbol);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).copied()
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.index.contains_key(symbol)
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    /// Maps symbol names to letters, failing on the first unknown one.
    pub fn encode<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<Letter>> {
        word.iter()
            .map(|s| {
                let s = s.as_ref();
                self.letter(s).ok_or_else(|| Error::UnknownLetter(s.to_owned()))
            })
            .collect()
    }

    pub fn decode(&self, word: &[Letter]) -> Vec<String> {
        word.iter().map(|&l| self.symbols[l].clone()).collect()
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.symbols.join(" "),
                right: other.symbols.join(" "),
            })
        }
    }
}

/// Symbols are non-empty, free of whitespace and control characters, and not a parenthesis token.
pub fn is_valid_symbol(symbol: &str) -> bool {
    !symbol.is_empty()
        && symbol != OPEN
        && symbol != CLOSE
        && symbol.chars().all(|c| !c.is_whitespace() && !c.is_control())
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}
