//! Finite automata on words and stepwise hedge automata on nested words, with
//! accessible determinization, accessible products, schema-based cleaning and
//! schema-based determinization.

pub mod alphabet;
pub mod bench;
pub mod canon;
pub mod check;
pub mod error;
pub mod format;
pub mod hedges;
mod lazy_subsets;
pub mod nested;
pub mod nfa;
pub mod oracle;
pub mod random;
pub mod saturation;
pub mod schemas;
pub mod sha;
pub mod words;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use format::{parse_automaton, parse_nested_word, Automaton};
pub use hedges::{
    determinize_sha, product_sha, project_sha, schema_clean_sha, schema_determinize_sha,
};
pub use nested::{Hedge, Item, NestedWord};
pub use nfa::{Dfa, Nfa, Rule, State, StateSet};
pub use saturation::RunStats;
pub use sha::{ApplyRule, Dsha, Sha};
pub use words::{
    determinize, product, project_first, schema_clean, schema_determinize, AlignmentMap,
    PairMap, SubsetStateMap,
};
