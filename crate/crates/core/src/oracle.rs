//! Brute-force machinery used to check the constructions.
//!
//! Nothing here calls the constructions it is meant to check: evaluation runs
//! on its own bitset representation built straight from the rule lists, and
//! [`naive_determinize`] builds the full powerset automaton.
//!
//! Enumeration order. Words come by length, then lexicographically by letter
//! index. Hedges come by size (letters plus trees, counted recursively), then
//! lexicographically by items, where letters precede trees, letters compare by
//! index, and trees compare by the size and then the order of their contents.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::nested::{Hedge, Item};
use crate::nfa::{Dfa, Nfa, Rule, State, StateSet};
use crate::sha::{ApplyRule, Sha};

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBound {
    pub max_word_length: usize,
    pub max_hedge_items: usize,
    pub max_depth: usize,
}

impl EnumerationBound {
    pub fn words(max_word_length: usize) -> Self {
        EnumerationBound {
            max_word_length,
            max_hedge_items: 0,
            max_depth: 0,
        }
    }

    pub fn hedges(max_hedge_items: usize, max_depth: usize) -> Self {
        EnumerationBound {
            max_word_length: 0,
            max_hedge_items,
            max_depth,
        }
    }
}

/// Outcome of a bounded language comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence<W> {
    Equal,
    /// The first input, in enumeration order, on which the languages differ.
    Differ(W),
}

impl<W> Equivalence<W> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// All words over `num_letters` letters of length at most `max_len`.
pub fn enum_words(num_letters: usize, max_len: usize) -> impl Iterator<Item = Vec<Letter>> {
    let mut next = Some(Vec::new());
    std::iter::from_fn(move || {
        let current = next.take()?;
        next = successor_word(&current, num_letters, max_len);
        Some(current)
    })
}

fn successor_word(w: &[Letter], k: usize, max_len: usize) -> Option<Vec<Letter>> {
    if k == 0 {
        return None;
    }
    let mut out = w.to_vec();
    // odometer increment; on overflow move to the next length
    for i in (0..out.len()).rev() {
        if out[i] + 1 < k {
            out[i] += 1;
            return Some(out);
        }
        out[i] = 0;
    }
    (w.len() < max_len).then(|| vec![0; w.len() + 1])
}

/// All hedges over `num_letters` letters within the bound, in enumeration order.
pub fn enum_hedges(
    num_letters: usize,
    max_items: usize,
    max_depth: usize,
) -> impl Iterator<Item = Hedge<Letter>> {
    let mut table: Vec<Vec<Vec<Hedge<Letter>>>> = Vec::new();
    for d in 0..=max_depth {
        let mut by_size: Vec<Vec<Hedge<Letter>>> = Vec::new();
        for n in 0..=max_items {
            let level = exact_hedges(num_letters, n, d, &table, &by_size);
            by_size.push(level);
        }
        table.push(by_size);
    }
    table.pop().unwrap_or_default().into_iter().flatten()
}

// hedges of exactly `n` items and depth at most `d`; `shallower[d-1]` and
// `same[..n]` hold the already built levels
fn exact_hedges(
    k: usize,
    n: usize,
    d: usize,
    shallower: &[Vec<Vec<Hedge<Letter>>>],
    same: &[Vec<Hedge<Letter>>],
) -> Vec<Hedge<Letter>> {
    if n == 0 {
        return vec![Hedge::empty()];
    }
    let mut out = Vec::new();
    for l in 0..k {
        for rest in &same[n - 1] {
            out.push(Hedge::letter(l).concat(rest.clone()));
        }
    }
    if d > 0 {
        for m in 0..n {
            for inner in &shallower[d - 1][m] {
                for rest in &same[n - 1 - m] {
                    out.push(inner.clone().into_tree().concat(rest.clone()));
                }
            }
        }
    }
    out
}

/// Fixed-width bitset over the states of a [`Machine`].
type Bits = Vec<u64>;
/// Hedges of one exact size, each with the states it evaluates to.
type Level = Vec<(Hedge<Letter>, Bits)>;

fn bit(bits: &[u64], q: usize) -> bool {
    bits[q / 64] >> (q % 64) & 1 == 1
}

fn set(bits: &mut [u64], q: usize) {
    bits[q / 64] |= 1 << (q % 64);
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

/// Disjoint union of several automata over one alphabet, evaluated on bitsets.
struct Machine {
    width: usize,
    letters: usize,
    succ: Vec<u64>,
    apply_from: Vec<Vec<(State, Bits)>>,
    initial: Bits,
    tree_initial: Bits,
    finals: Vec<Bits>,
}

impl Machine {
    fn new(parts: &[&Sha]) -> Result<Self> {
        let alphabet = parts.first().map(|a| a.alphabet().clone()).unwrap_or_default();
        for a in parts {
            a.alphabet().ensure_same(&alphabet)?;
        }
        let total: usize = parts.iter().map(|a| a.num_states()).sum();
        let width = total.div_ceil(64).max(1);
        let letters = alphabet.len();
        let mut m = Machine {
            width,
            letters,
            succ: vec![0; total * letters * width],
            apply_from: vec![Vec::new(); total],
            initial: vec![0; width],
            tree_initial: vec![0; width],
            finals: Vec::new(),
        };
        let mut offset = 0;
        for a in parts {
            let mut fin = vec![0; width];
            for &q in a.word().initial() {
                set(&mut m.initial, offset + q);
            }
            for &q in a.tree_initial() {
                set(&mut m.tree_initial, offset + q);
            }
            for &q in a.word().finals() {
                set(&mut fin, offset + q);
            }
            m.finals.push(fin);
            for r in a.word().rules() {
                let base = ((offset + r.src) * letters + r.letter) * width;
                set(&mut m.succ[base..base + width], offset + r.dst);
            }
            for r in a.apply_rules() {
                let list = &mut m.apply_from[offset + r.left];
                let tree = offset + r.tree;
                let slot = match list.iter().position(|(t, _)| *t == tree) {
                    Some(i) => i,
                    None => {
                        list.push((tree, vec![0; width]));
                        list.len() - 1
                    }
                };
                set(&mut list[slot].1, offset + r.dst);
            }
            offset += a.num_states();
        }
        Ok(m)
    }

    fn step(&self, cur: &[u64], letter: Letter) -> Bits {
        let mut out = vec![0; self.width];
        for q in ones(cur) {
            let base = (q * self.letters + letter) * self.width;
            or_into(&mut out, &self.succ[base..base + self.width]);
        }
        out
    }

    fn step_tree(&self, cur: &[u64], tree: &[u64]) -> Bits {
        let mut out = vec![0; self.width];
        for q in ones(cur) {
            for (t, targets) in &self.apply_from[q] {
                if bit(tree, *t) {
                    or_into(&mut out, targets);
                }
            }
        }
        out
    }

    fn eval(&self, mut cur: Bits, h: &Hedge<Letter>) -> Bits {
        for item in h.items() {
            cur = match item {
                Item::Letter(l) => self.step(&cur, *l),
                Item::Tree(inner) => {
                    let t = self.eval(self.tree_initial.clone(), inner);
                    self.step_tree(&cur, &t)
                }
            };
        }
        cur
    }

    fn verdicts(&self, cur: &[u64], out: &mut Vec<bool>) {
        out.clear();
        out.extend(
            self.finals
                .iter()
                .map(|f| f.iter().zip(cur).any(|(a, b)| a & b != 0)),
        );
    }
}

/// Evaluates `h` from `from` by brute force.
pub fn eval_sha(a: &Sha, from: &StateSet, h: &Hedge<Letter>) -> StateSet {
    let m = Machine::new(&[a]).expect("single automaton");
    let mut start = vec![0; m.width];
    for &q in from {
        set(&mut start, q);
    }
    ones(&m.eval(start, h)).collect()
}

pub fn accepts_sha(a: &Sha, h: &Hedge<Letter>) -> bool {
    let m = Machine::new(&[a]).expect("single automaton");
    let end = m.eval(m.initial.clone(), h);
    m.finals[0].iter().zip(&end).any(|(x, y)| x & y != 0)
}

pub fn accepts_nfa(a: &Nfa, w: &[Letter]) -> bool {
    accepts_sha(&Sha::from_nfa(a.clone()), &Hedge::from_items(w.iter().map(|&l| Item::Letter(l)).collect()))
}

/// Visits every word within `max_len`, in enumeration order, with the
/// acceptance verdict of each automaton. The automata must share an alphabet.
pub fn explore_words<F>(automata: &[&Nfa], max_len: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[Letter], &[bool]) -> ControlFlow<()>,
{
    let shas: Vec<Sha> = automata.iter().map(|a| Sha::from_nfa((*a).clone())).collect();
    let refs: Vec<&Sha> = shas.iter().collect();
    let m = Machine::new(&refs)?;
    let mut verdicts = Vec::new();
    let mut level: Vec<(Vec<Letter>, Bits)> = vec![(Vec::new(), m.initial.clone())];
    for len in 0..=max_len {
        for (w, bits) in &level {
            m.verdicts(bits, &mut verdicts);
            if visit(w, &verdicts).is_break() {
                return Ok(());
            }
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(level.len() * m.letters);
        for (w, bits) in &level {
            for l in 0..m.letters {
                let mut w2 = w.clone();
                w2.push(l);
                next.push((w2, m.step(bits, l)));
            }
        }
        level = next;
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Step {
    Letter(Letter),
    Tree { depth: usize, size: usize, index: usize },
}

/// A hedge under exploration; materialized only on demand.
pub struct HedgeView<'a> {
    steps: &'a [Step],
    trees: &'a [Vec<Level>],
}

impl HedgeView<'_> {
    pub fn to_hedge(&self) -> Hedge<Letter> {
        Hedge::from_items(
            self.steps
                .iter()
                .map(|s| match *s {
                    Step::Letter(l) => Item::Letter(l),
                    Step::Tree { depth, size, index } => {
                        Item::Tree(self.trees[depth][size][index].0.clone())
                    }
                })
                .collect(),
        )
    }
}

struct HedgeWalk<'m> {
    m: &'m Machine,
    // trees[d][m]: hedges of exactly m items and depth <= d, evaluated from
    // the tree-initial states
    trees: Vec<Vec<Level>>,
    steps: Vec<Step>,
    verdicts: Vec<bool>,
}

impl<'m> HedgeWalk<'m> {
    fn new(m: &'m Machine, max_items: usize, max_depth: usize) -> Self {
        let mut walk = HedgeWalk {
            m,
            trees: Vec::new(),
            steps: Vec::new(),
            verdicts: Vec::new(),
        };
        for d in 0..max_depth {
            let mut by_size = Vec::new();
            for n in 0..max_items {
                let mut level = Vec::new();
                let start = m.tree_initial.clone();
                let _ = walk.exact(n, d, start, &mut |view: &HedgeView, bits: &Bits| {
                    level.push((view.to_hedge(), bits.clone()));
                    ControlFlow::Continue(())
                });
                by_size.push(level);
            }
            walk.trees.push(by_size);
        }
        walk
    }

    fn exact<F>(&mut self, n: usize, d: usize, cur: Bits, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&HedgeView, &Bits) -> ControlFlow<()>,
    {
        if n == 0 {
            let view = HedgeView {
                steps: &self.steps,
                trees: &self.trees,
            };
            return visit(&view, &cur);
        }
        for l in 0..self.m.letters {
            let next = self.m.step(&cur, l);
            self.steps.push(Step::Letter(l));
            let flow = self.exact(n - 1, d, next, visit);
            self.steps.pop();
            flow?;
        }
        if d > 0 {
            for size in 0..n {
                for index in 0..self.trees[d - 1][size].len() {
                    let next = self.m.step_tree(&cur, &self.trees[d - 1][size][index].1);
                    self.steps.push(Step::Tree {
                        depth: d - 1,
                        size,
                        index,
                    });
                    let flow = self.exact(n - 1 - size, d, next, visit);
                    self.steps.pop();
                    flow?;
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits every hedge within the bound, in enumeration order, with the
/// acceptance verdict of each automaton. The automata must share an alphabet.
pub fn explore_hedges<F>(
    automata: &[&Sha],
    max_items: usize,
    max_depth: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&HedgeView, &[bool]) -> ControlFlow<()>,
{
    let m = Machine::new(automata)?;
    let mut walk = HedgeWalk::new(&m, max_items, max_depth);
    let mut verdicts = std::mem::take(&mut walk.verdicts);
    for n in 0..=max_items {
        let flow = walk.exact(n, max_depth, m.initial.clone(), &mut |view, bits| {
            m.verdicts(bits, &mut verdicts);
            visit(view, &verdicts)
        });
        if flow.is_break() {
            break;
        }
    }
    Ok(())
}

/// Compares two word automata on all words up to `max_len`.
pub fn lang_equal_bounded(a: &Nfa, b: &Nfa, max_len: usize) -> Result<Equivalence<Vec<Letter>>> {
    let mut result = Equivalence::Equal;
    explore_words(&[a, b], max_len, |w, v| {
        if v[0] != v[1] {
            result = Equivalence::Differ(w.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(result)
}

/// Compares two hedge automata on all hedges within the bound.
pub fn lang_equal_bounded_sha(
    a: &Sha,
    b: &Sha,
    bound: EnumerationBound,
) -> Result<Equivalence<Hedge<Letter>>> {
    let mut result = Equivalence::Equal;
    explore_hedges(&[a, b], bound.max_hedge_items, bound.max_depth, |h, v| {
        if v[0] != v[1] {
            result = Equivalence::Differ(h.to_hedge());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(result)
}

/// Largest input accepted by [`naive_determinize`].
pub const NAIVE_STATE_LIMIT: usize = 12;

/// Full powerset construction: one state per non-empty subset, accessible or not.
///
/// State `m - 1` stands for the subset with bitmask `m`.
pub fn naive_determinize(a: &Nfa) -> Result<Dfa> {
    let n = a.num_states();
    if n > NAIVE_STATE_LIMIT {
        return Err(Error::Precondition(format!(
            "naive determinization is limited to {NAIVE_STATE_LIMIT} states, got {n}"
        )));
    }
    let k = a.alphabet().len();
    let mut succ = vec![0u32; n * k];
    for r in a.rules() {
        succ[r.src * k + r.letter] |= 1 << r.dst;
    }
    let mask_of = |states: &[State]| states.iter().fold(0u32, |m, &q| m | 1 << q);
    let init = mask_of(a.initial());
    let fin = mask_of(a.finals());
    let subsets = (1u32 << n) - 1;
    let mut rules = Vec::new();
    for m in 1..=subsets {
        for l in 0..k {
            let target = (0..n)
                .filter(|q| m >> q & 1 == 1)
                .fold(0, |t, q| t | succ[q * k + l]);
            if target != 0 {
                rules.push(Rule::new(m as usize - 1, l, target as usize - 1));
            }
        }
    }
    Nfa::new(
        a.alphabet().clone(),
        subsets as usize,
        (init != 0).then(|| init as usize - 1),
        (1..=subsets).filter(|m| m & fin != 0).map(|m| m as usize - 1),
        rules,
    )
}

/// Bitmask subset behind a state of [`naive_determinize`].
pub fn naive_subset(state: State) -> Vec<State> {
    let m = state + 1;
    (0..usize::BITS as usize).filter(|q| m >> q & 1 == 1).collect()
}

fn reachable(a: &Sha) -> Vec<bool> {
    let mut seen = vec![false; a.num_states()];
    let mut queue: VecDeque<State> = VecDeque::new();
    for &q in a.word().initial().iter().chain(a.tree_initial()) {
        if !seen[q] {
            seen[q] = true;
            queue.push_back(q);
        }
    }
    loop {
        while let Some(q) = queue.pop_front() {
            for r in a.word().rules().iter().filter(|r| r.src == q) {
                if !seen[r.dst] {
                    seen[r.dst] = true;
                    queue.push_back(r.dst);
                }
            }
        }
        let mut grew = false;
        for r in a.apply_rules() {
            if seen[r.left] && seen[r.tree] && !seen[r.dst] {
                seen[r.dst] = true;
                queue.push_back(r.dst);
                grew = true;
            }
        }
        if !grew {
            return seen;
        }
    }
}

/// Restriction to the states reachable from the initial and tree-initial
/// states; `origin[i]` is the source of state `i`.
pub fn accessible_part_sha(a: &Sha) -> (Sha, Vec<State>) {
    let seen = reachable(a);
    let origin: Vec<State> = (0..a.num_states()).filter(|&q| seen[q]).collect();
    let mut rank = vec![usize::MAX; a.num_states()];
    for (i, &q) in origin.iter().enumerate() {
        rank[q] = i;
    }
    let keep = |q: &State| seen[*q];
    let word = Nfa::new(
        a.alphabet().clone(),
        origin.len(),
        a.word().initial().iter().filter(|q| keep(q)).map(|&q| rank[q]),
        a.word().finals().iter().filter(|q| keep(q)).map(|&q| rank[q]),
        a.word()
            .rules()
            .iter()
            .filter(|r| seen[r.src])
            .map(|r| Rule::new(rank[r.src], r.letter, rank[r.dst])),
    )
    .expect("restriction of a valid automaton");
    let sha = Sha::new(
        word,
        a.tree_initial().iter().filter(|q| keep(q)).map(|&q| rank[q]),
        a.apply_rules()
            .iter()
            .filter(|r| seen[r.left] && seen[r.tree])
            .map(|r| ApplyRule::new(rank[r.left], rank[r.tree], rank[r.dst])),
    )
    .expect("restriction of a valid automaton");
    (sha, origin)
}

pub fn accessible_part(a: &Nfa) -> (Nfa, Vec<State>) {
    let (sha, origin) = accessible_part_sha(&Sha::from_nfa(a.clone()));
    (sha.into_word(), origin)
}

pub fn is_accessible_sha(a: &Sha) -> bool {
    reachable(a).into_iter().all(|r| r)
}

/// Whether `map` is a bijection from the states of `a` onto those of `b`
/// that carries initial states, final states and rules exactly onto each other.
pub fn is_isomorphism(a: &Nfa, b: &Nfa, map: &[State]) -> bool {
    let n = a.num_states();
    if map.len() != n || b.num_states() != n || a.alphabet() != b.alphabet() {
        return false;
    }
    let mut hit = vec![false; n];
    for &q in map {
        if q >= n || std::mem::replace(&mut hit[q], true) {
            return false;
        }
    }
    let image = |states: &[State]| states.iter().map(|&q| map[q]).collect::<BTreeSet<_>>();
    let rules: BTreeSet<Rule> = a
        .rules()
        .iter()
        .map(|r| Rule::new(map[r.src], r.letter, map[r.dst]))
        .collect();
    image(a.initial()) == b.initial().iter().copied().collect()
        && image(a.finals()) == b.finals().iter().copied().collect()
        && rules == b.rules().iter().copied().collect()
}

/// Largest automata accepted by [`iso_check`].
pub const ISO_STATE_LIMIT: usize = 64;

fn check_iso_input(a: &Sha) -> Result<()> {
    if !a.is_deterministic() {
        return Err(Error::Precondition("iso_check needs deterministic automata".into()));
    }
    if a.num_states() > ISO_STATE_LIMIT {
        return Err(Error::Precondition(format!(
            "iso_check is limited to {ISO_STATE_LIMIT} states, got {}",
            a.num_states()
        )));
    }
    if !is_accessible_sha(a) {
        return Err(Error::Precondition("iso_check needs accessible automata".into()));
    }
    Ok(())
}

/// Isomorphism of deterministic accessible word automata.
///
/// Returns `map` with `map[q]` the state of `b` matching state `q` of `a`.
pub fn iso_check(a: &Nfa, b: &Nfa) -> Result<Option<Vec<State>>> {
    iso_check_sha(&Sha::from_nfa(a.clone()), &Sha::from_nfa(b.clone()))
}

/// Isomorphism of deterministic accessible hedge automata, found by exploring
/// both in parallel from their initial and tree-initial states.
pub fn iso_check_sha(a: &Sha, b: &Sha) -> Result<Option<Vec<State>>> {
    check_iso_input(a)?;
    check_iso_input(b)?;
    if a.alphabet() != b.alphabet()
        || a.num_states() != b.num_states()
        || a.word().rules().len() != b.word().rules().len()
        || a.apply_rules().len() != b.apply_rules().len()
    {
        return Ok(None);
    }
    Ok(IsoSearch::new(a, b).run())
}

struct IsoSearch<'a> {
    a: &'a Sha,
    b: &'a Sha,
    fwd: Vec<Option<State>>,
    bwd: Vec<Option<State>>,
    mapped: Vec<State>,
    queue: VecDeque<State>,
}

impl<'a> IsoSearch<'a> {
    fn new(a: &'a Sha, b: &'a Sha) -> Self {
        IsoSearch {
            a,
            b,
            fwd: vec![None; a.num_states()],
            bwd: vec![None; b.num_states()],
            mapped: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn pair(&mut self, x: Option<State>, y: Option<State>) -> bool {
        match (x, y) {
            (None, None) => true,
            (Some(x), Some(y)) => match (self.fwd[x], self.bwd[y]) {
                (None, None) => {
                    self.fwd[x] = Some(y);
                    self.bwd[y] = Some(x);
                    self.mapped.push(x);
                    self.queue.push_back(x);
                    true
                }
                (Some(y2), Some(x2)) => y2 == y && x2 == x,
                _ => false,
            },
            _ => false,
        }
    }

    fn run(mut self) -> Option<Vec<State>> {
        let (a, b) = (self.a, self.b);
        let next = |s: &Sha, q: State, l: Letter| {
            s.word().rules().iter().find(|r| r.src == q && r.letter == l).map(|r| r.dst)
        };
        let apply = |s: &Sha, q1: State, q: State| {
            s.apply_rules().iter().find(|r| r.left == q1 && r.tree == q).map(|r| r.dst)
        };
        if !self.pair(a.word().initial().first().copied(), b.word().initial().first().copied())
            || !self.pair(a.tree_initial().first().copied(), b.tree_initial().first().copied())
        {
            return None;
        }
        while let Some(x) = self.queue.pop_front() {
            let y = self.fwd[x].unwrap();
            if a.is_final(x) != b.is_final(y) {
                return None;
            }
            for l in a.alphabet().letters() {
                if !self.pair(next(a, x, l), next(b, y, l)) {
                    return None;
                }
            }
            let mut i = 0;
            while i < self.mapped.len() {
                let p = self.mapped[i];
                let p2 = self.fwd[p].unwrap();
                if !self.pair(apply(a, x, p), apply(b, y, p2))
                    || !self.pair(apply(a, p, x), apply(b, p2, y))
                {
                    return None;
                }
                i += 1;
            }
        }
        self.fwd.into_iter().collect()
    }
}

/// Renders a word of letters with the symbols of `alphabet`.
pub fn show_word(alphabet: &Alphabet, w: &[Letter]) -> String {
    if w.is_empty() {
        return "ε".into();
    }
    alphabet.decode(w).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemas::one_x_over;

    fn show_all(k: usize, items: usize, depth: usize) -> Vec<String> {
        let sigma = Alphabet::new(["a", "b", "c"][..k].iter().copied()).unwrap();
        enum_hedges(k, items, depth).map(|h| h.decode(&sigma).to_string()).collect()
    }

    #[test]
    fn words_by_length_then_letter() {
        assert_eq!(enum_words(1, 2).collect::<Vec<_>>(), [vec![], vec![0], vec![0, 0]]);
        assert_eq!(enum_words(2, 3).count(), 15);
        assert_eq!(enum_words(0, 5).collect::<Vec<_>>(), [Vec::<Letter>::new()]);
        let w: Vec<_> = enum_words(2, 2).collect();
        assert_eq!(w, [vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn hedges_in_canonical_order() {
        assert_eq!(show_all(1, 1, 1), ["", "a", "< >"]);
        assert_eq!(
            show_all(1, 2, 1),
            ["", "a", "< >", "a a", "a < >", "< > a", "< > < >", "< a >"]
        );
    }

    #[test]
    fn explorer_visits_enumeration_order() {
        let sigma = Alphabet::new(["a", "b"]).unwrap();
        let a = Sha::empty(sigma);
        let mut seen = Vec::new();
        explore_hedges(&[&a], 4, 2, |h, v| {
            assert_eq!(v, [false]);
            seen.push(h.to_hedge());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen, enum_hedges(2, 4, 2).collect::<Vec<_>>());
    }

    #[test]
    fn naive_powerset_size() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let a = Nfa::new(sigma, 3, [0], [2], [Rule::new(0, 0, 1), Rule::new(0, 0, 2)]).unwrap();
        let n = naive_determinize(&a).unwrap();
        assert_eq!(n.num_states(), 7);
        assert!(n.is_deterministic());
        assert_eq!(naive_subset(5), [1, 2]);
        let big = Nfa::new(a.alphabet().clone(), 13, [], [], []).unwrap();
        assert!(matches!(naive_determinize(&big), Err(Error::Precondition(_))));
    }

    #[test]
    fn iso_on_small_cases() {
        let sigma = Alphabet::new(["a", "x"]).unwrap();
        let d = one_x_over(&sigma).unwrap();
        assert_eq!(iso_check(&d, &d).unwrap(), Some(vec![0, 1]));
        let fin = Nfa::new(sigma.clone(), 1, [0], [0], []).unwrap();
        let non = Nfa::new(sigma.clone(), 1, [0], [], []).unwrap();
        assert_eq!(iso_check(&fin, &non).unwrap(), None);
        let nondet = Nfa::new(sigma, 1, [0], [], [Rule::new(0, 0, 0)]).unwrap();
        assert!(iso_check(&nondet, &nondet).is_ok());
        assert!(iso_check(&Nfa::new(nondet.alphabet().clone(), 2, [0, 1], [], []).unwrap(), &fin).is_err());
    }

    #[test]
    fn bounded_equality() {
        let sigma = Alphabet::new(["a", "x"]).unwrap();
        let d = one_x_over(&sigma).unwrap();
        assert_eq!(lang_equal_bounded(&d, &d, 5).unwrap(), Equivalence::Equal);
        let all = Nfa::new(sigma.clone(), 1, [0], [0], [Rule::new(0, 0, 0), Rule::new(0, 1, 0)]).unwrap();
        assert_eq!(lang_equal_bounded(&d, &all, 5).unwrap(), Equivalence::Differ(vec![]));
        let other = Nfa::empty(Alphabet::new(["a"]).unwrap());
        assert!(lang_equal_bounded(&d, &other, 2).is_err());
    }

    #[test]
    fn accessible_part_drops_unreachable_states() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let a = Nfa::new(sigma, 3, [1], [2], [Rule::new(1, 0, 2), Rule::new(0, 0, 1)]).unwrap();
        let (part, origin) = accessible_part(&a);
        assert_eq!(origin, [1, 2]);
        assert_eq!(part.rules(), &[Rule::new(0, 0, 1)]);
    }
}
