//! Agenda/store saturation shared by the accessible constructions.
//!
//! Every discovered key is stored once and pushed on the LIFO agenda once; the
//! store membership test comes before the push. Store ids are dense and follow
//! insertion order, so they double as result state ids.

use std::hash::Hash;

use indexmap::IndexSet;

/// Instrumentation of one saturation run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub agenda_pushes: usize,
    pub agenda_pops: usize,
    /// Rule insertions attempted, counting repeats of an already collected rule.
    pub rules_emitted: usize,
}

pub(crate) struct Worklist<K> {
    store: IndexSet<K>,
    agenda: Vec<usize>,
    pub(crate) stats: RunStats,
}

impl<K: Hash + Eq> Worklist<K> {
    pub(crate) fn new() -> Self {
        Worklist {
            store: IndexSet::new(),
            agenda: Vec::new(),
            stats: RunStats::default(),
        }
    }

    /// Stores `key` and pushes it if it is new. Returns its id.
    pub(crate) fn discover(&mut self, key: K) -> usize {
        let (id, fresh) = self.store.insert_full(key);
        if fresh {
            self.agenda.push(id);
            self.stats.agenda_pushes += 1;
        }
        id
    }

    pub(crate) fn pop(&mut self) -> Option<usize> {
        let id = self.agenda.pop()?;
        self.stats.agenda_pops += 1;
        Some(id)
    }

    pub(crate) fn get(&self, id: usize) -> &K {
        &self.store[id]
    }

    pub(crate) fn len(&self) -> usize {
        self.store.len()
    }

    pub(crate) fn into_store(self) -> (IndexSet<K>, RunStats) {
        (self.store, self.stats)
    }
}

/// Rule collection with set semantics, counting every insertion attempt.
pub(crate) struct RuleSet<R> {
    rules: IndexSet<R>,
}

impl<R: Hash + Eq> RuleSet<R> {
    pub(crate) fn new() -> Self {
        RuleSet {
            rules: IndexSet::new(),
        }
    }

    pub(crate) fn add(&mut self, rule: R, stats: &mut RunStats) {
        stats.rules_emitted += 1;
        self.rules.insert(rule);
    }

    pub(crate) fn into_iter(self) -> impl Iterator<Item = R> {
        self.rules.into_iter()
    }
}
