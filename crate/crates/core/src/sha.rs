use std::collections::HashMap;
use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::nested::{Hedge, Item, NestedWord};
use crate::nfa::{sorted_states, Delta, Nfa, Rule, State, StateSet};

/// Apply rule `left @ tree -> dst`: a hedge in state `left`, extended by a
/// tree evaluated to `tree`, continues in `dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ApplyRule {
    pub left: State,
    pub tree: State,
    pub dst: State,
}

impl ApplyRule {
    pub fn new(left: State, tree: State, dst: State) -> Self {
        ApplyRule { left, tree, dst }
    }
}

/// A stepwise hedge automaton: an [`Nfa`] for the letters, plus tree-initial
/// states and apply rules for the trees.
#[derive(Clone, PartialEq, Eq)]
pub struct Sha {
    word: Nfa,
    tree_initial: Vec<State>,
    apply: Vec<ApplyRule>,
}

/// A deterministic SHA is a [`Sha`] for which [`Sha::is_deterministic`] holds.
pub type Dsha = Sha;

impl Sha {
    pub fn new<T, A>(word: Nfa, tree_initial: T, apply: A) -> Result<Self>
    where
        T: IntoIterator<Item = State>,
        A: IntoIterator<Item = ApplyRule>,
    {
        let n = word.num_states();
        let tree_initial = sorted_states(tree_initial, n)?;
        let mut apply: Vec<ApplyRule> = apply.into_iter().collect();
        for r in &apply {
            for state in [r.left, r.tree, r.dst] {
                if state >= n {
                    return Err(Error::StateOutOfRange {
                        state,
                        num_states: n,
                    });
                }
            }
        }
        apply.sort_unstable();
        apply.dedup();
        Ok(Sha {
            word,
            tree_initial,
            apply,
        })
    }

    /// Embeds a word automaton: no tree-initial states, no apply rules.
    pub fn from_nfa(word: Nfa) -> Self {
        Sha {
            word,
            tree_initial: Vec::new(),
            apply: Vec::new(),
        }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Sha::from_nfa(Nfa::empty(alphabet))
    }

    pub fn word(&self) -> &Nfa {
        &self.word
    }

    pub fn into_word(self) -> Nfa {
        self.word
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        self.word = self.word.with_names(names)?;
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.word.alphabet()
    }

    pub fn num_states(&self) -> usize {
        self.word.num_states()
    }

    pub fn state_name(&self, q: State) -> String {
        self.word.state_name(q)
    }

    pub fn initial(&self) -> &[State] {
        self.word.initial()
    }

    pub fn finals(&self) -> &[State] {
        self.word.finals()
    }

    pub fn is_final(&self, q: State) -> bool {
        self.word.is_final(q)
    }

    pub fn rules(&self) -> &[Rule] {
        self.word.rules()
    }

    pub fn tree_initial(&self) -> &[State] {
        &self.tree_initial
    }

    /// Apply rules sorted by (left, tree, dst).
    pub fn apply_rules(&self) -> &[ApplyRule] {
        &self.apply
    }

    /// `|Q| + |Δ|`, counting internal and apply rules.
    pub fn size(&self) -> usize {
        self.word.size() + self.apply.len()
    }

    pub fn is_deterministic(&self) -> bool {
        self.word.is_deterministic()
            && self.tree_initial.len() <= 1
            && self
                .apply
                .windows(2)
                .all(|w| (w[0].left, w[0].tree) != (w[1].left, w[1].tree))
    }

    pub(crate) fn delta(&self) -> Delta {
        self.word.delta()
    }

    pub(crate) fn apply_index(&self) -> ApplyIndex {
        ApplyIndex::new(&self.apply)
    }

    /// States reachable from `from` by reading the nested word `h`.
    pub fn eval_hedge(&self, from: &StateSet, h: &NestedWord) -> Result<StateSet> {
        let h = h.encode(self.alphabet())?;
        Ok(self.eval(from, &h))
    }

    pub fn eval(&self, from: &StateSet, h: &Hedge<Letter>) -> StateSet {
        let mut eval = Evaluator {
            delta: self.delta(),
            apply: self.apply_index(),
            tree_initial: self.tree_initial.iter().copied().collect(),
        };
        eval.run(from.clone(), h)
    }

    pub fn accepts_nested(&self, h: &NestedWord) -> Result<bool> {
        let h = h.encode(self.alphabet())?;
        Ok(self.accepts_hedge(&h))
    }

    pub fn accepts_hedge(&self, h: &Hedge<Letter>) -> bool {
        let start: StateSet = self.initial().iter().copied().collect();
        self.eval(&start, h).iter().any(|&q| self.is_final(q))
    }
}

struct Evaluator {
    delta: Delta,
    apply: ApplyIndex,
    tree_initial: StateSet,
}

impl Evaluator {
    fn run(&mut self, mut current: StateSet, h: &Hedge<Letter>) -> StateSet {
        for item in h.items() {
            if current.is_empty() {
                break;
            }
            current = match item {
                Item::Letter(l) => self.delta.step(&current, *l),
                Item::Tree(inner) => {
                    let tree = self.run(self.tree_initial.clone(), inner);
                    let mut next = StateSet::new();
                    for &q1 in &current {
                        for &q in &tree {
                            next.extend(self.apply.targets(q1, q).iter().copied());
                        }
                    }
                    next
                }
            };
        }
        current
    }
}

impl fmt::Debug for Sha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_sha(self))
    }
}

/// Apply-rule targets indexed by (left, tree).
pub(crate) struct ApplyIndex {
    targets: HashMap<(State, State), Vec<State>>,
}

impl ApplyIndex {
    fn new(rules: &[ApplyRule]) -> Self {
        let mut targets: HashMap<(State, State), Vec<State>> = HashMap::new();
        for r in rules {
            targets.entry((r.left, r.tree)).or_default().push(r.dst);
        }
        ApplyIndex { targets }
    }

    pub(crate) fn targets(&self, left: State, tree: State) -> &[State] {
        self.targets
            .get(&(left, tree))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub(crate) fn next(&self, left: State, tree: State) -> Option<State> {
        self.targets(left, tree).first().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_nested_word;

    fn sigma() -> Alphabet {
        Alphabet::new(["a"]).unwrap()
    }

    #[test]
    fn tree_needs_tree_initial_state() {
        // accepts iff a tree evaluates to state 0; but there are no tree-initial states
        let word = Nfa::new(sigma(), 1, [0], [0], []).unwrap();
        let a = Sha::new(word, [], [ApplyRule::new(0, 0, 0)]).unwrap();
        let h = parse_nested_word("< >").unwrap();
        assert!(!a.accepts_nested(&h).unwrap());
        let word = Nfa::new(sigma(), 1, [0], [0], []).unwrap();
        let b = Sha::new(word, [0], [ApplyRule::new(0, 0, 0)]).unwrap();
        assert!(b.accepts_nested(&h).unwrap());
    }

    #[test]
    fn deterministic_apply_must_be_functional() {
        let word = Nfa::new(sigma(), 3, [0], [], []).unwrap();
        let a = Sha::new(word, [0], [ApplyRule::new(0, 0, 1), ApplyRule::new(0, 0, 2)]).unwrap();
        assert!(!a.is_deterministic());
        let word = Nfa::new(sigma(), 3, [0], [], []).unwrap();
        let b = Sha::new(word, [0, 1], []).unwrap();
        assert!(!b.is_deterministic());
    }

    #[test]
    fn embedded_dfa_keeps_determinism() {
        let d = Nfa::new(sigma(), 2, [0], [1], [Rule::new(0, 0, 1)]).unwrap();
        assert!(Sha::from_nfa(d.clone()).is_deterministic());
        let n = Nfa::new(sigma(), 2, [0], [1], [Rule::new(0, 0, 1), Rule::new(0, 0, 0)]).unwrap();
        assert!(!Sha::from_nfa(n).is_deterministic());
    }

    #[test]
    fn empty_hedge_returns_start() {
        let word = Nfa::new(sigma(), 2, [0], [1], []).unwrap();
        let a = Sha::new(word, [0], []).unwrap();
        let from: StateSet = [1].into();
        assert_eq!(a.eval_hedge(&from, &NestedWord::empty()).unwrap(), from);
    }
}
