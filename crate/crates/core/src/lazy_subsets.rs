//! Transitions of the subset automaton, computed only for subsets that are asked for.

use std::collections::HashMap;

use indexmap::IndexSet;

use crate::alphabet::Letter;
use crate::nfa::{Delta, State};
use crate::sha::ApplyIndex;
use crate::words::SubsetBuilder;

pub(crate) struct LazySubsets {
    delta: Delta,
    apply: Option<ApplyIndex>,
    subsets: IndexSet<Vec<State>>,
    internal: HashMap<(usize, Letter), Option<usize>>,
    applied: HashMap<(usize, usize), Option<usize>>,
    image: SubsetBuilder,
}

impl LazySubsets {
    pub(crate) fn new(delta: Delta, apply: Option<ApplyIndex>, num_states: usize) -> Self {
        LazySubsets {
            delta,
            apply,
            subsets: IndexSet::new(),
            internal: HashMap::new(),
            applied: HashMap::new(),
            image: SubsetBuilder::new(num_states),
        }
    }

    pub(crate) fn intern(&mut self, subset: Vec<State>) -> usize {
        self.subsets.insert_full(subset).0
    }

    /// Successor subset of `q` on `letter`, if non-empty.
    pub(crate) fn internal(&mut self, q: usize, letter: Letter) -> Option<usize> {
        if let Some(&known) = self.internal.get(&(q, letter)) {
            return known;
        }
        for &p in &self.subsets[q] {
            for &p2 in self.delta.successors(p, letter) {
                self.image.insert(p2);
            }
        }
        let target = self.image.finish();
        let result = (!target.is_empty()).then(|| self.intern(target));
        self.internal.insert((q, letter), result);
        result
    }

    /// Subset reached from `left` by a tree evaluated to `tree`, if non-empty.
    pub(crate) fn apply(&mut self, left: usize, tree: usize) -> Option<usize> {
        if let Some(&known) = self.applied.get(&(left, tree)) {
            return known;
        }
        let index = self.apply.as_ref().expect("apply index for hedge automata");
        for &p in &self.subsets[left] {
            for &t in &self.subsets[tree] {
                for &p2 in index.targets(p, t) {
                    self.image.insert(p2);
                }
            }
        }
        let target = self.image.finish();
        let result = (!target.is_empty()).then(|| self.intern(target));
        self.applied.insert((left, tree), result);
        result
    }

    pub(crate) fn into_subsets(self) -> Vec<Vec<State>> {
        self.subsets.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::nfa::{Nfa, Rule};

    #[test]
    fn successors_are_interned_once() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let rules = [Rule::new(0, 0, 1), Rule::new(1, 0, 1), Rule::new(0, 0, 0)];
        let a = Nfa::new(sigma, 2, [0], [1], rules).unwrap();
        let mut lazy = LazySubsets::new(a.delta(), None, 2);
        let start = lazy.intern(vec![0]);
        let next = lazy.internal(start, 0).unwrap();
        assert_eq!(lazy.internal(next, 0), Some(next));
        assert_eq!(lazy.intern(vec![0, 1]), next);
        assert_eq!(lazy.into_subsets(), [vec![0], vec![0, 1]]);
    }
}
