//! The accessible constructions lifted from word automata to stepwise hedge automata.
//!
//! Apply rules combine two states, so whenever a state is popped it is paired
//! with every stored state, itself included, in both argument orders. States
//! stored later meet the popped one when they are popped in turn.

use crate::error::{Error, Result};
use crate::lazy_subsets::LazySubsets;
use crate::nfa::{Nfa, Rule, State};
use crate::saturation::{RuleSet, RunStats, Worklist};
use crate::sha::{ApplyRule, Dsha, Sha};
use crate::words::{
    intersects, subset_name, AlignmentMap, FirstComponents, PairMap, SubsetBuilder,
    SubsetStateMap,
};

#[derive(Clone, Debug)]
pub struct ShaDeterminization {
    pub automaton: Dsha,
    pub subsets: SubsetStateMap,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct ShaProduct {
    pub automaton: Sha,
    pub pairs: PairMap,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct ShaProjection {
    pub automaton: Sha,
    pub origin: Vec<State>,
}

#[derive(Clone, Debug)]
pub struct ShaCleaning {
    pub automaton: Sha,
    pub origin: Vec<State>,
    pub stats: RunStats,
}

#[derive(Clone, Debug)]
pub struct ShaSchemaDeterminization {
    pub automaton: Dsha,
    pub alignment: AlignmentMap,
    pub stats: RunStats,
}

#[allow(clippy::too_many_arguments)]
fn build(
    source: &Sha,
    num_states: usize,
    initial: Option<State>,
    tree_initial: Option<State>,
    finals: impl IntoIterator<Item = State>,
    rules: RuleSet<Rule>,
    apply: RuleSet<ApplyRule>,
    names: Vec<String>,
) -> Result<Sha> {
    let word = Nfa::new(
        source.alphabet().clone(),
        num_states,
        initial,
        finals,
        rules.into_iter(),
    )?;
    Sha::new(word, tree_initial, apply.into_iter())?.with_names(names)
}

/// Accessible subset construction for SHAs.
///
/// Besides the initial subset, the set of tree-initial states is a result
/// state when it is non-empty, and it is the unique tree-initial state.
pub fn determinize_sha(a: &Sha) -> ShaDeterminization {
    let delta = a.delta();
    let apply = a.apply_index();
    let mut work: Worklist<Vec<State>> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut apply_rules = RuleSet::new();
    let mut image = SubsetBuilder::new(a.num_states());
    let initial = (!a.initial().is_empty()).then(|| work.discover(a.initial().to_vec()));
    let tree_initial =
        (!a.tree_initial().is_empty()).then(|| work.discover(a.tree_initial().to_vec()));
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
        let stored = work.len();
        for other in 0..stored {
            for (left, tree) in [(id, other), (other, id)] {
                for &q in work.get(left) {
                    for &t in work.get(tree) {
                        for &q2 in apply.targets(q, t) {
                            image.insert(q2);
                        }
                    }
                }
                let target = image.finish();
                if target.is_empty() {
                    continue;
                }
                let target = work.discover(target);
                apply_rules.add(ApplyRule::new(left, tree, target), &mut work.stats);
            }
        }
    }
    let (store, stats) = work.into_store();
    let subsets: Vec<Vec<State>> = store.into_iter().collect();
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| intersects(s, a.finals()))
        .map(|(i, _)| i);
    let names = subsets
        .iter()
        .map(|s| subset_name(|q| a.state_name(q), s))
        .collect();
    let automaton = build(
        a,
        subsets.len(),
        initial,
        tree_initial,
        finals,
        rules,
        apply_rules,
        names,
    )
    .expect("subset construction yields a valid automaton");
    ShaDeterminization {
        automaton,
        subsets: SubsetStateMap::new(subsets),
        stats,
    }
}

/// Accessible product of SHAs; recognizes `L(a) ∩ L(s)`.
pub fn product_sha(a: &Sha, s: &Sha) -> Result<ShaProduct> {
    a.alphabet().ensure_same(s.alphabet())?;
    let (delta_a, delta_s) = (a.delta(), s.delta());
    let (apply_a, apply_s) = (a.apply_index(), s.apply_index());
    let mut work: Worklist<(State, State)> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut apply_rules = RuleSet::new();
    let mut initial = Vec::new();
    let mut tree_initial = Vec::new();
    for &q in a.initial() {
        for &p in s.initial() {
            initial.push(work.discover((q, p)));
        }
    }
    for &q in a.tree_initial() {
        for &p in s.tree_initial() {
            tree_initial.push(work.discover((q, p)));
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
        let stored = work.len();
        for other in 0..stored {
            for (left, tree) in [(id, other), (other, id)] {
                let (ql, sl) = *work.get(left);
                let (qt, st) = *work.get(tree);
                for &q2 in apply_a.targets(ql, qt) {
                    for &s2 in apply_s.targets(sl, st) {
                        let target = work.discover((q2, s2));
                        apply_rules.add(ApplyRule::new(left, tree, target), &mut work.stats);
                    }
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
    let word = Nfa::new(
        a.alphabet().clone(),
        pairs.len(),
        initial,
        finals,
        rules.into_iter(),
    )?;
    let automaton = Sha::new(word, tree_initial, apply_rules.into_iter())?.with_names(names)?;
    Ok(ShaProduct {
        automaton,
        pairs: PairMap::new(pairs),
        stats,
    })
}

/// First-component projection of a SHA product, merging equal images.
pub fn project_sha(p: &Sha, pairs: &PairMap) -> Result<ShaProjection> {
    if pairs.len() != p.num_states() {
        return Err(Error::Precondition(format!(
            "pair map has {} entries for {} states",
            pairs.len(),
            p.num_states()
        )));
    }
    let first = FirstComponents::new(pairs);
    let map = |q: State| first.map(pairs, q);
    let word = Nfa::new(
        p.alphabet().clone(),
        first.origin.len(),
        p.initial().iter().map(|&q| map(q)),
        p.finals().iter().map(|&q| map(q)),
        p.rules()
            .iter()
            .map(|r| Rule::new(map(r.src), r.letter, map(r.dst))),
    )?;
    let automaton = Sha::new(
        word,
        p.tree_initial().iter().map(|&q| map(q)),
        p.apply_rules()
            .iter()
            .map(|r| ApplyRule::new(map(r.left), map(r.tree), map(r.dst))),
    )?;
    Ok(ShaProjection {
        automaton,
        origin: first.origin,
    })
}

fn check_schema(a: &Sha, s: &Dsha) -> Result<()> {
    a.alphabet().ensure_same(s.alphabet())?;
    if !s.is_deterministic() {
        return Err(Error::NondeterministicSchema);
    }
    Ok(())
}

/// Schema-based cleaning of a SHA with respect to a dSHA schema.
pub fn schema_clean_sha(a: &Sha, s: &Dsha) -> Result<ShaCleaning> {
    check_schema(a, s)?;
    let product = product_sha(a, s)?;
    let projection = project_sha(&product.automaton, &product.pairs)?;
    let automaton = match a.word().names() {
        Some(names) => {
            let kept = projection.origin.iter().map(|&q| names[q].clone()).collect();
            projection.automaton.with_names(kept)?
        }
        None => projection.automaton,
    };
    Ok(ShaCleaning {
        automaton,
        origin: projection.origin,
        stats: product.stats,
    })
}

/// Schema-based determinization of a SHA with respect to a dSHA schema.
pub fn schema_determinize_sha(a: &Sha, s: &Dsha) -> Result<ShaSchemaDeterminization> {
    check_schema(a, s)?;
    let delta_s = s.delta();
    let apply_s = s.apply_index();
    let mut subsets = LazySubsets::new(a.delta(), Some(a.apply_index()), a.num_states());
    let mut work: Worklist<(usize, State)> = Worklist::new();
    let mut rules = RuleSet::new();
    let mut apply_rules = RuleSet::new();
    let mut initial = None;
    let mut tree_initial = None;
    if let (false, [s0]) = (a.initial().is_empty(), s.initial()) {
        let q0 = subsets.intern(a.initial().to_vec());
        work.discover((q0, *s0));
        initial = Some(q0);
    }
    if let (false, [t0]) = (a.tree_initial().is_empty(), s.tree_initial()) {
        let q0 = subsets.intern(a.tree_initial().to_vec());
        work.discover((q0, *t0));
        tree_initial = Some(q0);
    }
    while let Some(id) = work.pop() {
        let (q1, s1) = *work.get(id);
        for letter in a.alphabet().letters() {
            let Some(s2) = delta_s.next(s1, letter) else {
                continue;
            };
            let Some(q2) = subsets.internal(q1, letter) else {
                continue;
            };
            rules.add(Rule::new(q1, letter, q2), &mut work.stats);
            work.discover((q2, s2));
        }
        let stored = work.len();
        for other in 0..stored {
            let (q, p) = *work.get(other);
            for ((left, sl), (tree, st)) in [((q1, s1), (q, p)), ((q, p), (q1, s1))] {
                let Some(s2) = apply_s.next(sl, st) else {
                    continue;
                };
                let Some(q2) = subsets.apply(left, tree) else {
                    continue;
                };
                apply_rules.add(ApplyRule::new(left, tree, q2), &mut work.stats);
                work.discover((q2, s2));
            }
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
    let automaton = build(
        a,
        subsets.len(),
        initial,
        tree_initial,
        finals,
        rules,
        apply_rules,
        names,
    )?;
    Ok(ShaSchemaDeterminization {
        automaton,
        alignment: AlignmentMap {
            subsets: SubsetStateMap::new(subsets),
            alignments,
        },
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::oracle::iso_check_sha;
    use crate::schemas::one_x_sha;

    fn sigma() -> Alphabet {
        Alphabet::new(["a"]).unwrap()
    }

    #[test]
    fn det_of_one_x_is_isomorphic_to_it() {
        let d = one_x_sha(&sigma()).unwrap();
        let det = determinize_sha(&d);
        let map = iso_check_sha(&d, &det.automaton).unwrap().expect("isomorphic");
        for (q, &image) in map.iter().enumerate() {
            assert_eq!(det.subsets.subset(image), &[q]);
        }
        assert_eq!(det.stats.agenda_pushes, 2);
    }

    #[test]
    fn det_without_initial_states_is_empty() {
        let a = Sha::new(Nfa::new(sigma(), 2, [], [1], []).unwrap(), [], [ApplyRule::new(0, 0, 1)])
            .unwrap();
        assert_eq!(determinize_sha(&a).automaton.num_states(), 0);
    }

    #[test]
    fn product_without_tree_initial_reads_no_trees() {
        let d = one_x_sha(&sigma()).unwrap();
        let s = Sha::new(d.word().clone(), [], d.apply_rules().iter().copied()).unwrap();
        let p = product_sha(&d, &s).unwrap();
        assert!(p.automaton.tree_initial().is_empty());
        let tree = crate::format::parse_nested_word("< x >").unwrap();
        assert!(d.accepts_nested(&tree).unwrap());
        assert!(!p.automaton.accepts_nested(&tree).unwrap());
    }

    #[test]
    fn cleaning_with_itself_is_identity() {
        let d = one_x_sha(&sigma()).unwrap();
        let c = schema_clean_sha(&d, &d).unwrap();
        assert_eq!(c.automaton, d);
    }

    #[test]
    fn sdet_with_empty_schema_is_empty() {
        let d = one_x_sha(&sigma()).unwrap();
        let s = Sha::empty(d.alphabet().clone());
        assert_eq!(schema_determinize_sha(&d, &s).unwrap().automaton.num_states(), 0);
    }

    #[test]
    fn schemas_must_be_deterministic() {
        let d = one_x_sha(&sigma()).unwrap();
        let s = Sha::new(d.word().clone(), [0, 1], []).unwrap();
        assert_eq!(schema_clean_sha(&d, &s).unwrap_err(), Error::NondeterministicSchema);
        assert_eq!(schema_determinize_sha(&d, &s).unwrap_err(), Error::NondeterministicSchema);
    }
}
