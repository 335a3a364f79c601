use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// States are dense indices `0..num_states`.
pub type State = usize;

/// Ordered set of states, as returned by runs.
pub type StateSet = BTreeSet<State>;

/// Internal transition `src -letter-> dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub src: State,
    pub letter: Letter,
    pub dst: State,
}

impl Rule {
    pub fn new(src: State, letter: Letter, dst: State) -> Self {
        Rule { src, letter, dst }
    }
}

/// A nondeterministic finite automaton on words, without epsilon rules.
///
/// Automata are partial: a missing transition rejects. The rule, initial and
/// final sets are kept sorted and duplicate free, so two automata with the same
/// structure compare equal and serialize identically. Display names are carried
/// along for output but ignored by equality.
#[derive(Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    num_states: usize,
    names: Option<Vec<String>>,
    initial: Vec<State>,
    finals: Vec<State>,
    rules: Vec<Rule>,
}

/// A deterministic automaton is an [`Nfa`] for which [`Nfa::is_deterministic`] holds.
pub type Dfa = Nfa;

pub(crate) fn sorted_states<I: IntoIterator<Item = State>>(
    states: I,
    num_states: usize,
) -> Result<Vec<State>> {
    let mut out: Vec<State> = states.into_iter().collect();
    if let Some(&state) = out.iter().find(|&&q| q >= num_states) {
        return Err(Error::StateOutOfRange { state, num_states });
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl Nfa {
    pub fn new<I, F, R>(
        alphabet: Alphabet,
        num_states: usize,
        initial: I,
        finals: F,
        rules: R,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = State>,
        F: IntoIterator<Item = State>,
        R: IntoIterator<Item = Rule>,
    {
        let initial = sorted_states(initial, num_states)?;
        let finals = sorted_states(finals, num_states)?;
        let mut rules: Vec<Rule> = rules.into_iter().collect();
        for r in &rules {
            for state in [r.src, r.dst] {
                if state >= num_states {
                    return Err(Error::StateOutOfRange { state, num_states });
                }
            }
            if r.letter >= alphabet.len() {
                return Err(Error::Precondition(format!(
                    "letter index {} out of range for alphabet of size {}",
                    r.letter,
                    alphabet.len()
                )));
            }
        }
        rules.sort_unstable();
        rules.dedup();
        Ok(Nfa {
            alphabet,
            num_states,
            names: None,
            initial,
            finals,
            rules,
        })
    }

    /// The automaton with no states over `alphabet`.
    pub fn empty(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            num_states: 0,
            names: None,
            initial: Vec::new(),
            finals: Vec::new(),
            rules: Vec::new(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.num_states {
            return Err(Error::Precondition(format!(
                "{} names given for {} states",
                names.len(),
                self.num_states
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn states(&self) -> std::ops::Range<State> {
        0..self.num_states
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `q`: its given name, or its index.
    pub fn state_name(&self, q: State) -> String {
        match &self.names {
            Some(names) => names[q].clone(),
            None => q.to_string(),
        }
    }

    pub fn initial(&self) -> &[State] {
        &self.initial
    }

    pub fn finals(&self) -> &[State] {
        &self.finals
    }

    pub fn is_final(&self, q: State) -> bool {
        self.finals.binary_search(&q).is_ok()
    }

    pub fn is_initial(&self, q: State) -> bool {
        self.initial.binary_search(&q).is_ok()
    }

    /// Rules sorted by (src, letter, dst).
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn has_rule(&self, rule: &Rule) -> bool {
        self.rules.binary_search(rule).is_ok()
    }

    /// `|Q| + |Δ|`.
    pub fn size(&self) -> usize {
        self.num_states + self.rules.len()
    }

    /// At most one initial state and at most one rule per (state, letter).
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1
            && self
                .rules
                .windows(2)
                .all(|w| (w[0].src, w[0].letter) != (w[1].src, w[1].letter))
    }

    pub(crate) fn delta(&self) -> Delta {
        Delta::new(self)
    }

    /// All states reachable from a state of `from` by reading `word`.
    pub fn run_word<S: AsRef<str>>(&self, from: &StateSet, word: &[S]) -> Result<StateSet> {
        let letters = self.alphabet.encode(word)?;
        Ok(self.run(from, &letters))
    }

    pub fn run(&self, from: &StateSet, word: &[Letter]) -> StateSet {
        let delta = self.delta();
        let mut current = from.clone();
        for &letter in word {
            if current.is_empty() {
                break;
            }
            current = delta.step(&current, letter);
        }
        current
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        let letters = self.alphabet.encode(word)?;
        Ok(self.accepts_letters(&letters))
    }

    pub fn accepts_letters(&self, word: &[Letter]) -> bool {
        let start: StateSet = self.initial.iter().copied().collect();
        self.run(&start, word).iter().any(|&q| self.is_final(q))
    }
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.num_states == other.num_states
            && self.initial == other.initial
            && self.finals == other.finals
            && self.rules == other.rules
    }
}

impl Eq for Nfa {}

impl fmt::Debug for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_nfa(self))
    }
}

/// Successor lists indexed by (state, letter), built once per construction.
pub(crate) struct Delta {
    width: usize,
    offsets: Vec<usize>,
    targets: Vec<State>,
}

impl Delta {
    fn new(nfa: &Nfa) -> Self {
        let width = nfa.alphabet.len();
        let mut offsets = vec![0; nfa.num_states * width + 1];
        for r in &nfa.rules {
            offsets[r.src * width + r.letter + 1] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        // rules are sorted by (src, letter, dst), so targets come out grouped
        let targets = nfa.rules.iter().map(|r| r.dst).collect();
        Delta {
            width,
            offsets,
            targets,
        }
    }

    pub(crate) fn successors(&self, q: State, letter: Letter) -> &[State] {
        let slot = q * self.width + letter;
        &self.targets[self.offsets[slot]..self.offsets[slot + 1]]
    }

    /// The unique successor, for deterministic automata.
    pub(crate) fn next(&self, q: State, letter: Letter) -> Option<State> {
        self.successors(q, letter).first().copied()
    }

    pub(crate) fn step(&self, from: &StateSet, letter: Letter) -> StateSet {
        from.iter()
            .flat_map(|&q| self.successors(q, letter).iter().copied())
            .collect()
    }
}
