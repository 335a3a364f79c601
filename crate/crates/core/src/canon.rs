//! Canonical renaming of subset-labelled automata.
//!
//! Two constructions that produce the same subsets in a different discovery
//! order become byte-identical once both are renumbered by ascending subset.

use crate::error::Result;
use crate::nfa::{Nfa, Rule, State};
use crate::sha::{ApplyRule, Sha};
use crate::words::SubsetStateMap;

/// Renumbers so that new state `i` is old state `order[i]`.
pub fn permute(a: &Nfa, order: &[State]) -> Result<Nfa> {
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let out = Nfa::new(
        a.alphabet().clone(),
        a.num_states(),
        a.initial().iter().map(|&q| rank[q]),
        a.finals().iter().map(|&q| rank[q]),
        a.rules()
            .iter()
            .map(|r| Rule::new(rank[r.src], r.letter, rank[r.dst])),
    )?;
    match a.names() {
        Some(names) => out.with_names(order.iter().map(|&q| names[q].clone()).collect()),
        None => Ok(out),
    }
}

pub fn permute_sha(a: &Sha, order: &[State]) -> Result<Sha> {
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    Sha::new(
        permute(a.word(), order)?,
        a.tree_initial().iter().map(|&q| rank[q]),
        a.apply_rules()
            .iter()
            .map(|r| ApplyRule::new(rank[r.left], rank[r.tree], rank[r.dst])),
    )
}

fn subset_order(subsets: &SubsetStateMap) -> Vec<State> {
    let mut order: Vec<State> = (0..subsets.len()).collect();
    order.sort_by(|&x, &y| subsets.subset(x).cmp(subsets.subset(y)));
    order
}

fn reorder(subsets: &SubsetStateMap, order: &[State]) -> SubsetStateMap {
    SubsetStateMap::new(order.iter().map(|&q| subsets.subset(q).to_vec()).collect())
}

/// Renumbers states by ascending (lexicographic) subset.
pub fn by_subsets(a: &Nfa, subsets: &SubsetStateMap) -> Result<(Nfa, SubsetStateMap)> {
    let order = subset_order(subsets);
    Ok((permute(a, &order)?, reorder(subsets, &order)))
}

pub fn sha_by_subsets(a: &Sha, subsets: &SubsetStateMap) -> Result<(Sha, SubsetStateMap)> {
    let order = subset_order(subsets);
    Ok((permute_sha(a, &order)?, reorder(subsets, &order)))
}

/// Subsets of a projection result, read through the determinization it was cleaned from.
pub fn restrict(subsets: &SubsetStateMap, origin: &[State]) -> SubsetStateMap {
    SubsetStateMap::new(origin.iter().map(|&q| subsets.subset(q).to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn renumbers_by_ascending_subset() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let a = Nfa::new(sigma, 3, [0], [2], [Rule::new(0, 0, 1), Rule::new(1, 0, 2)]).unwrap();
        let subsets = SubsetStateMap::new(vec![vec![2], vec![0, 1], vec![0]]);
        let (b, sorted) = by_subsets(&a, &subsets).unwrap();
        assert_eq!(sorted.iter().collect::<Vec<_>>(), [&[0][..], &[0, 1], &[2]]);
        assert_eq!(b.initial(), &[2]);
        assert_eq!(b.finals(), &[0]);
        assert_eq!(b.rules(), &[Rule::new(1, 0, 0), Rule::new(2, 0, 1)]);
        assert_eq!(permute(&a, &[0, 1, 2]).unwrap(), a);
    }
}
