//! Accessible constructions on word automata.
//!
//! All four constructions saturate an agenda/store pair: a state enters the
//! result only once it is derived from an initial state, and each result state
//! is processed exactly once.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::lazy_subsets::LazySubsets;
use crate::nfa::{Dfa, Nfa, Rule, State};
use crate::saturation::{RuleSet, RunStats, Worklist};

/// Result state id to the sorted set of source states it stands for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubsetStateMap {
    subsets: Vec<Vec<State>>,
}

impl SubsetStateMap {
    pub fn new(subsets: Vec<Vec<State>>) -> Self {
        SubsetStateMap { subsets }
    }

    pub fn subset(&self, state: State) -> &[State] {
        &self.subsets[state]
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[State]> {
        self.subsets.iter().map(Vec::as_slice)
    }

    pub fn find(&self, subset: &[State]) -> Option<State> {
        self.subsets.iter().position(|s| s.as_slice() == subset)
    }
}

/// Result state id to the pair of component states it stands for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairMap {
    pairs: Vec<(State, State)>,
}

impl PairMap {
    pub fn new(pairs: Vec<(State, State)>) -> Self {
        PairMap { pairs }
    }

    pub fn pair(&self, state: State) -> (State, State) {
        self.pairs[state]
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(State, State)] {
        &self.pairs
    }
}

/// The alignments `Q ~ s` derived by schema-based determinization.
///
/// `subsets` gives the subset of every result state. `alignments` lists each
/// derived judgment as (result state, schema state), in discovery order; a
/// result state may be aligned to several schema states.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlignmentMap {
    pub subsets: SubsetStateMap,
    pub alignments: Vec<(State, State)>,
}

impl AlignmentMap {
    /// Schema states aligned with `state`.
    pub fn schema_states(&self, state: State) -> impl Iterator<Item = State> + '_ {
        self.alignments
            .iter()
            .filter(move |(q, _)| *q == state)
            .map(|&(_, s)| s)
    }
}

#[derive(Clone, Debug)]
pub struct Determinization {
    pub automaton: Dfa,
    pub subsets: SubsetStateMap,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct Product {
    pub automaton: Nfa,
    pub pairs: PairMap,
    pub stats: RunStats,
}

/// First-component image of a product. `origin[i]` is the source state that
/// result state `i` stands for; it is strictly increasing.
#[derive(Clone, Debug)]
pub struct Projection {
    pub automaton: Nfa,
    pub origin: Vec<State>,
}

#[derive(Clone, Debug)]
pub struct Cleaning {
    pub automaton: Nfa,
    pub origin: Vec<State>,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct SchemaDeterminization {
    pub automaton: Dfa,
    pub alignment: AlignmentMap,
    pub stats: RunStats,
}

/// Computes the sorted image of a subset under a successor function.
pub(crate) struct SubsetBuilder {
    marks: Vec<bool>,
    members: Vec<State>,
}

impl SubsetBuilder {
    pub(crate) fn new(num_states: usize) -> Self {
        SubsetBuilder {
            marks: vec![false; num_states],
            members: Vec::new(),
        }
    }

    pub(crate) fn insert(&mut self, q: State) {
        if !self.marks[q] {
            self.marks[q] = true;
            self.members.push(q);
        }
    }

    pub(crate) fn finish(&mut self) -> Vec<State> {
        for &q in &self.members {
            self.marks[q] = false;
        }
        let mut out = std::mem::take(&mut self.members);
        out.sort_unstable();
        out
    }
}

pub(crate) fn subset_name(names: impl Fn(State) -> String, subset: &[State]) -> String {
    let inner: Vec<String> = subset.iter().map(|&q| names(q)).collect();
    format!("{{{}}}", inner.join(","))
}

pub(crate) fn intersects(sorted: &[State], other: &[State]) -> bool {
    sorted.iter().any(|q| other.binary_search(q).is_ok())
}

/// Accessible subset construction.
pub fn determinize(a: &Nfa) -> Determinization {
    let delta = a.delta();
    let mut work: Worklist<Vec<State>> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut image = SubsetBuilder::new(a.num_states());
    if !a.initial().is_empty() {
        work.discover(a.initial().to_vec());
    }
    while let Some(id) = work.pop() {
        for letter in a.alphabet().letters() {
            for &q in work.get(id) {
                for &q2 in delta.successors(q, letter) {
                    image.insert(q2);
                }
            }
            let target = image.finish();
            if target.is_empty() {
                continue;
            }
            let target = work.discover(target);
            rules.add(Rule::new(id, letter, target), &mut work.stats);
        }
    }
    let (store, stats) = work.into_store();
    let subsets: Vec<Vec<State>> = store.into_iter().collect();
    let initial = subsets
        .iter()
        .position(|s| !s.is_empty() && s.as_slice() == a.initial());
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| intersects(s, a.finals()))
        .map(|(i, _)| i);
    let names = subsets
        .iter()
        .map(|s| subset_name(|q| a.state_name(q), s))
        .collect();
    let automaton = Nfa::new(
        a.alphabet().clone(),
        subsets.len(),
        initial,
        finals,
        rules.into_iter(),
    )
    .and_then(|d| d.with_names(names))
    .expect("subset construction yields a valid automaton");
    Determinization {
        automaton,
        subsets: SubsetStateMap::new(subsets),
        stats,
    }
}

/// Accessible synchronous product; recognizes `L(a) ∩ L(s)`.
pub fn product(a: &Nfa, s: &Nfa) -> Result<Product> {
    a.alphabet().ensure_same(s.alphabet())?;
    let delta_a = a.delta();
    let delta_s = s.delta();
    let mut work: Worklist<(State, State)> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut initial = Vec::new();
    for &q in a.initial() {
        for &p in s.initial() {
            initial.push(work.discover((q, p)));
        }
    }
    while let Some(id) = work.pop() {
        let (q1, s1) = *work.get(id);
        for letter in a.alphabet().letters() {
            for &q2 in delta_a.successors(q1, letter) {
                for &s2 in delta_s.successors(s1, letter) {
                    let target = work.discover((q2, s2));
                    rules.add(Rule::new(id, letter, target), &mut work.stats);
                }
            }
        }
    }
    let (store, stats) = work.into_store();
    let pairs: Vec<(State, State)> = store.into_iter().collect();
    let finals = pairs
        .iter()
        .enumerate()
        .filter(|(_, (q, p))| a.is_final(*q) && s.is_final(*p))
        .map(|(i, _)| i);
    let names = pairs
        .iter()
        .map(|&(q, p)| format!("({},{})", a.state_name(q), s.state_name(p)))
        .collect();
    let automaton = Nfa::new(
        a.alphabet().clone(),
        pairs.len(),
        initial,
        finals,
        rules.into_iter(),
    )?
    .with_names(names)?;
    Ok(Product {
        automaton,
        pairs: PairMap::new(pairs),
        stats,
    })
}

pub(crate) struct FirstComponents {
    pub(crate) origin: Vec<State>,
    index: HashMap<State, State>,
}

impl FirstComponents {
    pub(crate) fn new(pairs: &PairMap) -> Self {
        let origin: Vec<State> = pairs
            .pairs()
            .iter()
            .map(|&(q, _)| q)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = origin.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        FirstComponents { origin, index }
    }

    /// New id of the first component of product state `state`.
    pub(crate) fn map(&self, pairs: &PairMap, state: State) -> State {
        self.index[&pairs.pair(state).0]
    }
}

/// Projects a product onto its first component, merging equal images.
pub fn project_first(p: &Nfa, pairs: &PairMap) -> Result<Projection> {
    if pairs.len() != p.num_states() {
        return Err(Error::Precondition(format!(
            "pair map has {} entries for {} states",
            pairs.len(),
            p.num_states()
        )));
    }
    let first = FirstComponents::new(pairs);
    let map = |q: State| first.map(pairs, q);
    let automaton = Nfa::new(
        p.alphabet().clone(),
        first.origin.len(),
        p.initial().iter().map(|&q| map(q)),
        p.finals().iter().map(|&q| map(q)),
        p.rules()
            .iter()
            .map(|r| Rule::new(map(r.src), r.letter, map(r.dst))),
    )?;
    Ok(Projection {
        automaton,
        origin: first.origin,
    })
}

fn check_schema(a: &Nfa, s: &Dfa) -> Result<()> {
    a.alphabet().ensure_same(s.alphabet())?;
    if !s.is_deterministic() {
        return Err(Error::NondeterministicSchema);
    }
    Ok(())
}

/// Keeps the part of `a` that is used to read some word of the schema.
///
/// Result state `i` is source state `origin[i]`; states keep their relative order.
pub fn schema_clean(a: &Nfa, s: &Dfa) -> Result<Cleaning> {
    check_schema(a, s)?;
    let product = product(a, s)?;
    let projection = project_first(&product.automaton, &product.pairs)?;
    let automaton = match a.names() {
        Some(names) => {
            let kept = projection.origin.iter().map(|&q| names[q].clone()).collect();
            projection.automaton.with_names(kept)?
        }
        None => projection.automaton,
    };
    Ok(Cleaning {
        automaton,
        origin: projection.origin,
        stats: product.stats,
    })
}

/// Subset construction restricted to subsets that align with a schema state.
///
/// Produces the same automaton as cleaning the accessible determinization
/// with `s`, without materializing the subsets that no schema run can reach.
pub fn schema_determinize(a: &Nfa, s: &Dfa) -> Result<SchemaDeterminization> {
    schema_determinize_impl(a, s, false)
}

/// Deliberately broken variant that aligns a successor subset with the
/// current schema state when the schema has no transition.
#[doc(hidden)]
pub fn schema_determinize_mutant(a: &Nfa, s: &Dfa) -> Result<SchemaDeterminization> {
    schema_determinize_impl(a, s, true)
}

fn schema_determinize_impl(a: &Nfa, s: &Dfa, mutant: bool) -> Result<SchemaDeterminization> {
    check_schema(a, s)?;
    let delta_s = s.delta();
    let mut subsets = LazySubsets::new(a.delta(), None, a.num_states());
    let mut work: Worklist<(usize, State)> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut initial = None;
    if let (false, [s0]) = (a.initial().is_empty(), s.initial()) {
        let q0 = subsets.intern(a.initial().to_vec());
        work.discover((q0, *s0));
        initial = Some(q0);
    }
    while let Some(id) = work.pop() {
        let (q1, s1) = *work.get(id);
        for letter in a.alphabet().letters() {
            let s2 = match delta_s.next(s1, letter) {
                Some(s2) => s2,
                None if mutant => s1,
                None => continue,
            };
            let Some(q2) = subsets.internal(q1, letter) else {
                continue;
            };
            rules.add(Rule::new(q1, letter, q2), &mut work.stats);
            work.discover((q2, s2));
        }
    }
    let (store, stats) = work.into_store();
    let alignments: Vec<(State, State)> = store.into_iter().collect();
    let subsets = subsets.into_subsets();
    let finals: Vec<State> = alignments
        .iter()
        .filter(|&&(q, p)| s.is_final(p) && intersects(&subsets[q], a.finals()))
        .map(|&(q, _)| q)
        .collect();
    let names = subsets
        .iter()
        .map(|q| subset_name(|x| a.state_name(x), q))
        .collect();
    let automaton = Nfa::new(
        a.alphabet().clone(),
        subsets.len(),
        initial,
        finals,
        rules.into_iter(),
    )?
    .with_names(names)?;
    Ok(SchemaDeterminization {
        automaton,
        alignment: AlignmentMap {
            subsets: SubsetStateMap::new(subsets),
            alignments,
        },
        stats,
    })
}
