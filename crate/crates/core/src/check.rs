//! The randomized property suite behind `schemadet check`.

use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Letter};
use crate::canon;
use crate::error::Result;
use crate::format::{write_nfa, write_sha};
use crate::hedges::{
    determinize_sha, product_sha, schema_clean_sha, schema_determinize_sha,
};
use crate::nested::{Hedge, NestedWord};
use crate::nfa::{Dfa, Nfa, Rule, State, StateSet};
use crate::oracle::{self, accessible_part, explore_hedges, explore_words, ISO_STATE_LIMIT};
use crate::random::{hedge_instance, word_instance};
use crate::saturation::RunStats;
use crate::schemas::{self, NOT_X, X};
use crate::sha::{ApplyRule, Dsha, Sha};
use crate::words::{
    determinize, product, schema_clean, schema_determinize, schema_determinize_mutant,
};

/// Outcome of one property on one instance; the error explains the violation.
pub type Verdict = std::result::Result<(), String>;

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    pub count: usize,
    pub max_word_length: usize,
    pub max_hedge_items: usize,
    pub max_depth: usize,
    pub mutate_alignment: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            count: 100,
            max_word_length: 6,
            max_hedge_items: 5,
            max_depth: 2,
            mutate_alignment: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    fn record(&mut self, name: &'static str, verdict: Verdict, context: impl FnOnce() -> String) {
        let idx = match self.properties.iter().position(|p| p.name == name) {
            Some(i) => i,
            None => {
                self.properties.push(PropertyResult {
                    name,
                    checked: 0,
                    failed: 0,
                    counterexample: None,
                });
                self.properties.len() - 1
            }
        };
        let p = &mut self.properties[idx];
        p.checked += 1;
        if let Err(why) = verdict {
            p.failed += 1;
            if p.counterexample.is_none() {
                p.counterexample = Some(format!("{why}\n{}", context()));
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<32} {:>8} {:>8}", "property", "checked", "failed")?;
        for p in &self.properties {
            writeln!(f, "{:<32} {:>8} {:>8}", p.name, p.checked, p.failed)?;
        }
        for p in &self.properties {
            if let Some(cx) = &p.counterexample {
                writeln!(f, "\ncounterexample for {}:\n{}", p.name, cx.trim_end())?;
            }
        }
        write!(f, "\nresult: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn fail<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs every property on `config.count` word instances and as many hedge
/// instances, plus the fixed schema characterizations.
pub fn run_check(config: &CheckConfig) -> CheckReport {
    let words: Vec<_> = (0..config.count as u64)
        .into_par_iter()
        .map(|i| {
            let (a, s) = word_instance(config.seed, i);
            (i, word_properties(&a, &s, config), a, s)
        })
        .collect();
    let hedges: Vec<_> = (0..config.count as u64)
        .into_par_iter()
        .map(|i| {
            let (a, s) = hedge_instance(config.seed, i);
            (i, hedge_properties(&a, &s, config), a, s)
        })
        .collect();
    let mut report = CheckReport {
        properties: Vec::new(),
    };
    for (i, verdicts, a, s) in words {
        for (name, v) in verdicts {
            report.record(name, v, || {
                format!("word instance {i}\n--- query\n{}--- schema\n{}", write_nfa(&a), write_nfa(&s))
            });
        }
    }
    for (i, verdicts, a, s) in hedges {
        for (name, v) in verdicts {
            report.record(name, v, || {
                format!("hedge instance {i}\n--- query\n{}--- schema\n{}", write_sha(&a), write_sha(&s))
            });
        }
    }
    for (name, v) in schema_properties(config) {
        report.record(name, v, String::new);
    }
    report
}

/// All word-automaton properties for one (query, schema) instance.
pub fn word_properties(a: &Nfa, s: &Dfa, config: &CheckConfig) -> Vec<(&'static str, Verdict)> {
    let len = config.max_word_length;
    let mut out = vec![
        (
            "theorem-1",
            if config.mutate_alignment {
                theorem1_with(a, s, schema_determinize_mutant)
            } else {
                theorem1(a, s)
            },
        ),
        ("det-language", det_language(a, len)),
        ("det-accessible", det_accessible(a)),
        ("det-naive-oracle", det_matches_naive(a)),
        ("product-language", product_language(a, s, len)),
        ("clean-containment", clean_containment(a, s)),
        ("clean-preservation", clean_preservation(a, s, len)),
        ("clean-idempotence", clean_idempotence(a, s)),
        ("footnote-isomorphism", footnote(a, s).map(|_| ())),
        ("agenda-discipline", word_agenda(a, s)),
        ("sdet-not-larger", sdet_not_larger(a, s)),
        ("conservativity", conservativity(a, s)),
    ];
    if let Some(v) = query_invariance(a, len.min(4)) {
        out.push(("query-invariance", v));
    }
    out
}

/// All hedge-automaton properties for one (query, schema) instance.
pub fn hedge_properties(a: &Sha, s: &Dsha, config: &CheckConfig) -> Vec<(&'static str, Verdict)> {
    let (items, depth) = (config.max_hedge_items, config.max_depth);
    let mut out = vec![
        ("theorem-2", theorem2(a, s)),
        ("sha-det-language", sha_det_language(a, items, depth)),
        ("sha-det-accessible", sha_det_accessible(a)),
        ("sha-product-language", sha_product_language(a, s, items, depth)),
        ("sha-clean-containment", sha_clean_containment(a, s)),
        ("sha-clean-preservation", sha_clean_preservation(a, s, items, depth)),
        ("sha-agenda-discipline", sha_agenda(a, s)),
        ("sha-sdet-not-larger", sha_sdet_not_larger(a, s)),
        ("eval-compositional", eval_compositional(a)),
        ("dsha-single-state", dsha_single_state(s, items, depth)),
    ];
    if let Some(v) = sha_query_invariance(a) {
        out.push(("sha-query-invariance", v));
    }
    out
}

fn schema_properties(config: &CheckConfig) -> Vec<(&'static str, Verdict)> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let sigma = crate::random::letters(k);
        out.push(("one-x-dfa-language", one_x_dfa_language(&sigma, config.max_word_length)));
        out.push((
            "one-x-sha-language",
            one_x_sha_language(&sigma, config.max_hedge_items, config.max_depth),
        ));
    }
    out
}

/// Schema-based determinization, renumbered by subsets, next to the cleaned
/// determinization, renumbered the same way.
pub fn theorem1_pair(a: &Nfa, s: &Dfa) -> Result<(Nfa, Nfa)> {
    theorem1_pair_with(a, s, schema_determinize)
}

fn theorem1_pair_with(
    a: &Nfa,
    s: &Dfa,
    sdet: fn(&Nfa, &Dfa) -> Result<crate::words::SchemaDeterminization>,
) -> Result<(Nfa, Nfa)> {
    let det = determinize(a);
    let cleaned = schema_clean(&det.automaton, s)?;
    let subsets = canon::restrict(&det.subsets, &cleaned.origin);
    let (right, _) = canon::by_subsets(&cleaned.automaton, &subsets)?;
    let direct = sdet(a, s)?;
    let (left, _) = canon::by_subsets(&direct.automaton, &direct.alignment.subsets)?;
    Ok((left, right))
}

pub fn theorem1(a: &Nfa, s: &Dfa) -> Verdict {
    theorem1_with(a, s, schema_determinize)
}

fn theorem1_with(
    a: &Nfa,
    s: &Dfa,
    sdet: fn(&Nfa, &Dfa) -> Result<crate::words::SchemaDeterminization>,
) -> Verdict {
    let (left, right) = theorem1_pair_with(a, s, sdet).map_err(fail)?;
    let (l, r) = (write_nfa(&left), write_nfa(&right));
    ensure(l == r, || format!("det_S(A):\n{l}scl_S(det(A)):\n{r}"))
}

pub fn theorem2_pair(a: &Sha, s: &Dsha) -> Result<(Sha, Sha)> {
    let det = determinize_sha(a);
    let cleaned = schema_clean_sha(&det.automaton, s)?;
    let subsets = canon::restrict(&det.subsets, &cleaned.origin);
    let (right, _) = canon::sha_by_subsets(&cleaned.automaton, &subsets)?;
    let direct = schema_determinize_sha(a, s)?;
    let (left, _) = canon::sha_by_subsets(&direct.automaton, &direct.alignment.subsets)?;
    Ok((left, right))
}

pub fn theorem2(a: &Sha, s: &Dsha) -> Verdict {
    let (left, right) = theorem2_pair(a, s).map_err(fail)?;
    let (l, r) = (write_sha(&left), write_sha(&right));
    ensure(l == r, || format!("det_S(A):\n{l}scl_S(det(A)):\n{r}"))
}

fn show(alphabet: &Alphabet, w: &[Letter]) -> String {
    oracle::show_word(alphabet, w)
}

/// Bounded word check: `pred` receives the verdicts of `automata` in order.
fn words_agree(
    automata: &[&Nfa],
    len: usize,
    what: &str,
    pred: impl Fn(&[bool]) -> bool,
) -> Verdict {
    let mut bad = None;
    explore_words(automata, len, |w, v| {
        if pred(v) {
            ControlFlow::Continue(())
        } else {
            bad = Some(w.to_vec());
            ControlFlow::Break(())
        }
    })
    .map_err(fail)?;
    match bad {
        None => Ok(()),
        Some(w) => Err(format!("{what} fails on word {}", show(automata[0].alphabet(), &w))),
    }
}

fn hedges_agree(
    automata: &[&Sha],
    items: usize,
    depth: usize,
    what: &str,
    pred: impl Fn(&[bool]) -> bool,
) -> Verdict {
    let mut bad = None;
    explore_hedges(automata, items, depth, |h, v| {
        if pred(v) {
            ControlFlow::Continue(())
        } else {
            bad = Some(h.to_hedge());
            ControlFlow::Break(())
        }
    })
    .map_err(fail)?;
    match bad {
        None => Ok(()),
        Some(h) => Err(format!(
            "{what} fails on hedge \"{}\"",
            h.decode(automata[0].alphabet())
        )),
    }
}

pub fn det_language(a: &Nfa, len: usize) -> Verdict {
    let det = determinize(a);
    words_agree(&[a, &det.automaton], len, "L(A) = L(det(A))", |v| v[0] == v[1])
}

fn all_reachable(a: &Nfa) -> bool {
    accessible_part(a).0.num_states() == a.num_states()
}

pub fn det_accessible(a: &Nfa) -> Verdict {
    let det = determinize(a).automaton;
    ensure(det.is_deterministic(), || "det(A) is not deterministic".into())?;
    ensure(all_reachable(&det), || "det(A) has an inaccessible state".into())
}

/// The accessible part of the full powerset automaton is isomorphic to det(A),
/// through the subsets both constructions assign to their states.
pub fn det_matches_naive(a: &Nfa) -> Verdict {
    if a.num_states() > oracle::NAIVE_STATE_LIMIT {
        return Ok(());
    }
    let naive = oracle::naive_determinize(a).map_err(fail)?;
    let (part, origin) = accessible_part(&naive);
    let det = determinize(a);
    ensure(part.num_states() == det.automaton.num_states(), || {
        format!(
            "accessible powerset has {} states, det(A) has {}",
            part.num_states(),
            det.automaton.num_states()
        )
    })?;
    let map: Option<Vec<State>> = origin
        .iter()
        .map(|&q| det.subsets.find(&oracle::naive_subset(q)))
        .collect();
    let map = map.ok_or("a reachable powerset subset is missing from det(A)")?;
    ensure(oracle::is_isomorphism(&part, &det.automaton, &map), || {
        "subset correspondence is not an isomorphism".into()
    })?;
    if part.num_states() <= ISO_STATE_LIMIT {
        let found = oracle::iso_check(&part, &det.automaton).map_err(fail)?;
        ensure(found.is_some(), || "iso_check finds no isomorphism".into())?;
    }
    Ok(())
}

pub fn product_language(a: &Nfa, s: &Nfa, len: usize) -> Verdict {
    let p = product(a, s).map_err(fail)?;
    words_agree(&[a, s, &p.automaton], len, "L(A×S) = L(A) ∩ L(S)", |v| {
        v[2] == (v[0] && v[1])
    })
}

fn contained(a: &Nfa, c: &Nfa, origin: &[State]) -> Verdict {
    ensure(origin.windows(2).all(|w| w[0] < w[1]), || "origin is not increasing".into())?;
    ensure(c.initial().iter().all(|&q| a.is_initial(origin[q])), || {
        "an initial state is not initial in A".into()
    })?;
    ensure(c.finals().iter().all(|&q| a.is_final(origin[q])), || {
        "a final state is not final in A".into()
    })?;
    let missing = c
        .rules()
        .iter()
        .map(|r| Rule::new(origin[r.src], r.letter, origin[r.dst]))
        .find(|r| !a.has_rule(r));
    ensure(missing.is_none(), || format!("rule {missing:?} is not a rule of A"))?;
    ensure(c.size() <= a.size(), || "cleaning enlarged the automaton".into())
}

pub fn clean_containment(a: &Nfa, s: &Dfa) -> Verdict {
    let c = schema_clean(a, s).map_err(fail)?;
    contained(a, &c.automaton, &c.origin)
}

pub fn clean_preservation(a: &Nfa, s: &Dfa, len: usize) -> Verdict {
    let c = schema_clean(a, s).map_err(fail)?;
    words_agree(
        &[a, s, &c.automaton],
        len,
        "L(A) ∩ L(S) = L(scl_S(A)) ∩ L(S)",
        |v| !v[1] || v[0] == v[2],
    )?;
    words_agree(&[a, &c.automaton], len, "L(scl_S(A)) ⊆ L(A)", |v| !v[1] || v[0])
}

pub fn clean_idempotence(a: &Nfa, s: &Dfa) -> Verdict {
    let once = schema_clean(a, s).map_err(fail)?;
    let twice = schema_clean(&once.automaton, s).map_err(fail)?;
    ensure(once.automaton == twice.automaton, || {
        format!(
            "scl_S(scl_S(A)) differs:\n{}vs\n{}",
            write_nfa(&once.automaton),
            write_nfa(&twice.automaton)
        )
    })
}

/// det(A×S) against det(A)×S, matching each subset of pairs
/// `{(q1,s),…,(qn,s)}` with the pair `({q1,…,qn}, s)`. Returns that map.
pub fn footnote(a: &Nfa, s: &Dfa) -> std::result::Result<Vec<State>, String> {
    let p = product(a, s).map_err(fail)?;
    let left = determinize(&p.automaton);
    let det = determinize(a);
    let right = product(&det.automaton, s).map_err(fail)?;
    let mut map = Vec::with_capacity(left.subsets.len());
    for subset in left.subsets.iter() {
        let pairs: Vec<(State, State)> = subset.iter().map(|&x| p.pairs.pair(x)).collect();
        let sbar = pairs[0].1;
        if pairs.iter().any(|&(_, t)| t != sbar) {
            return Err("a subset of pairs mixes schema states".into());
        }
        let mut qs: Vec<State> = pairs.iter().map(|&(q, _)| q).collect();
        qs.sort_unstable();
        let q = det.subsets.find(&qs).ok_or("subset missing from det(A)")?;
        let target = right
            .pairs
            .pairs()
            .iter()
            .position(|&pair| pair == (q, sbar))
            .ok_or("pair missing from det(A)×S")?;
        map.push(target);
    }
    ensure(oracle::is_isomorphism(&left.automaton, &right.automaton, &map), || {
        "subset-pairing map is not an isomorphism".into()
    })?;
    let (l, r) = (&left.automaton, &right.automaton);
    if l.num_states() <= ISO_STATE_LIMIT && r.num_states() <= ISO_STATE_LIMIT {
        let found = oracle::iso_check(l, r).map_err(fail)?;
        ensure(found.as_deref() == Some(&map[..]), || {
            format!("iso_check returns {found:?}, expected {map:?}")
        })?;
    }
    Ok(map)
}

/// Every result state is pushed exactly once; for schema-based
/// determinization the agenda holds alignments, so it is pushed once per
/// alignment.
pub fn agenda_counts(stats: &RunStats, pushes: usize, what: &str) -> Verdict {
    ensure(stats.agenda_pops == stats.agenda_pushes, || {
        format!("{what}: {} pops for {} pushes", stats.agenda_pops, stats.agenda_pushes)
    })?;
    ensure(stats.agenda_pushes == pushes, || {
        format!("{what}: {} pushes, expected {pushes}", stats.agenda_pushes)
    })
}

pub fn word_agenda(a: &Nfa, s: &Dfa) -> Verdict {
    let det = determinize(a);
    agenda_counts(&det.stats, det.automaton.num_states(), "det")?;
    let p = product(a, s).map_err(fail)?;
    agenda_counts(&p.stats, p.automaton.num_states(), "product")?;
    let sd = schema_determinize(a, s).map_err(fail)?;
    agenda_counts(&sd.stats, sd.alignment.alignments.len(), "det_S")?;
    ensure(sd.stats.agenda_pushes >= sd.automaton.num_states(), || {
        "det_S: fewer pushes than states".into()
    })
}

pub fn sdet_not_larger(a: &Nfa, s: &Dfa) -> Verdict {
    let det = determinize(a).automaton.num_states();
    let sdet = schema_determinize(a, s).map_err(fail)?.automaton.num_states();
    ensure(sdet <= det, || format!("det_S has {sdet} states, det has {det}"))
}

/// Running the hedge constructions on an NFA embedded as a SHA gives the word
/// constructions' results, embedded.
pub fn conservativity(a: &Nfa, s: &Dfa) -> Verdict {
    let (ha, hs) = (Sha::from_nfa(a.clone()), Sha::from_nfa(s.clone()));
    let same = |what: &str, x: &Nfa, y: &Sha| {
        ensure(write_sha(&Sha::from_nfa(x.clone())) == write_sha(y), || {
            format!("{what} differs on the embedded automaton")
        })
    };
    same("det", &determinize(a).automaton, &determinize_sha(&ha).automaton)?;
    same(
        "product",
        &product(a, s).map_err(fail)?.automaton,
        &product_sha(&ha, &hs).map_err(fail)?.automaton,
    )?;
    same(
        "clean",
        &schema_clean(a, s).map_err(fail)?.automaton,
        &schema_clean_sha(&ha, &hs).map_err(fail)?.automaton,
    )?;
    let sd = schema_determinize(a, s).map_err(fail)?;
    let hsd = schema_determinize_sha(&ha, &hs).map_err(fail)?;
    let (x, _) = canon::by_subsets(&sd.automaton, &sd.alignment.subsets).map_err(fail)?;
    let (y, _) = canon::sha_by_subsets(&hsd.automaton, &hsd.alignment.subsets).map_err(fail)?;
    same("det_S", &x, &y)
}

fn relabel(a: &Nfa, alphabet: Alphabet) -> Nfa {
    Nfa::new(
        alphabet,
        a.num_states(),
        a.initial().iter().copied(),
        a.finals().iter().copied(),
        a.rules().iter().copied(),
    )
    .expect("same shape")
}

fn relabel_sha(a: &Sha, alphabet: Alphabet) -> Sha {
    Sha::new(
        relabel(a.word(), alphabet),
        a.tree_initial().iter().copied(),
        a.apply_rules().iter().copied(),
    )
    .expect("same shape")
}

/// Reads the last letter of `a` as the variable `x` and compares the
/// selected positions of `a`, scl(a), det(a) and det_S(a) under one-x.
pub fn query_invariance(a: &Nfa, len: usize) -> Option<Verdict> {
    let k = a.alphabet().len();
    if k < 2 {
        return None;
    }
    let mut symbols = a.alphabet().symbols().to_vec();
    symbols[k - 1] = X.to_string();
    let alphabet = Alphabet::new(symbols).ok()?;
    let q = relabel(a, alphabet.clone());
    Some(query_invariance_of(&q, len))
}

pub fn query_invariance_of(q: &Nfa, len: usize) -> Verdict {
    let alphabet = q.alphabet();
    let onex = schemas::one_x_over(alphabet).map_err(fail)?;
    let variants = [
        ("scl", schema_clean(q, &onex).map_err(fail)?.automaton),
        ("det", determinize(q).automaton),
        ("det_S", schema_determinize(q, &onex).map_err(fail)?.automaton),
    ];
    let x = alphabet.letter(X).expect("x present");
    let subject: Vec<Letter> = alphabet.letters().filter(|&l| l != x).collect();
    for w in oracle::enum_words(subject.len(), len) {
        let w: Vec<&str> = w.iter().map(|&i| alphabet.symbol(subject[i])).collect();
        let expected = schemas::select_word(q, &w).map_err(fail)?;
        for (what, v) in &variants {
            let got = schemas::select_word(v, &w).map_err(fail)?;
            ensure(got == expected, || {
                format!("select differs after {what} on \"{}\": {got:?} vs {expected:?}", w.join(" "))
            })?;
        }
    }
    Ok(())
}

pub fn theorem_sizes(a: &Nfa, s: &Dfa) -> Result<(usize, usize)> {
    Ok((
        determinize(a).automaton.num_states(),
        schema_determinize(a, s)?.automaton.num_states(),
    ))
}

pub fn sha_det_language(a: &Sha, items: usize, depth: usize) -> Verdict {
    let det = determinize_sha(a);
    hedges_agree(&[a, &det.automaton], items, depth, "L(A) = L(det(A))", |v| v[0] == v[1])
}

pub fn sha_det_accessible(a: &Sha) -> Verdict {
    let det = determinize_sha(a).automaton;
    ensure(det.is_deterministic(), || "det(A) is not deterministic".into())?;
    ensure(oracle::is_accessible_sha(&det), || "det(A) has an inaccessible state".into())
}

pub fn sha_product_language(a: &Sha, s: &Sha, items: usize, depth: usize) -> Verdict {
    let p = product_sha(a, s).map_err(fail)?;
    hedges_agree(&[a, s, &p.automaton], items, depth, "L(A×S) = L(A) ∩ L(S)", |v| {
        v[2] == (v[0] && v[1])
    })
}

pub fn sha_clean_containment(a: &Sha, s: &Dsha) -> Verdict {
    let c = schema_clean_sha(a, s).map_err(fail)?;
    let (c, origin) = (&c.automaton, &c.origin);
    contained(a.word(), c.word(), origin)?;
    ensure(
        c.tree_initial().iter().all(|&q| a.tree_initial().contains(&origin[q])),
        || "a tree-initial state is not tree-initial in A".into(),
    )?;
    let missing = c
        .apply_rules()
        .iter()
        .map(|r| ApplyRule::new(origin[r.left], origin[r.tree], origin[r.dst]))
        .find(|r| !a.apply_rules().contains(r));
    ensure(missing.is_none(), || format!("apply rule {missing:?} is not in A"))?;
    ensure(c.size() <= a.size(), || "cleaning enlarged the automaton".into())
}

pub fn sha_clean_preservation(a: &Sha, s: &Dsha, items: usize, depth: usize) -> Verdict {
    let c = schema_clean_sha(a, s).map_err(fail)?;
    hedges_agree(
        &[a, s, &c.automaton],
        items,
        depth,
        "L(A) ∩ L(S) = L(scl_S(A)) ∩ L(S)",
        |v| !v[1] || v[0] == v[2],
    )
}

pub fn sha_agenda(a: &Sha, s: &Dsha) -> Verdict {
    let det = determinize_sha(a);
    agenda_counts(&det.stats, det.automaton.num_states(), "det")?;
    let p = product_sha(a, s).map_err(fail)?;
    agenda_counts(&p.stats, p.automaton.num_states(), "product")?;
    let sd = schema_determinize_sha(a, s).map_err(fail)?;
    agenda_counts(&sd.stats, sd.alignment.alignments.len(), "det_S")?;
    ensure(sd.stats.agenda_pushes >= sd.automaton.num_states(), || {
        "det_S: fewer pushes than states".into()
    })
}

pub fn sha_sdet_not_larger(a: &Sha, s: &Dsha) -> Verdict {
    let det = determinize_sha(a).automaton.num_states();
    let sdet = schema_determinize_sha(a, s).map_err(fail)?.automaton.num_states();
    ensure(sdet <= det, || format!("det_S has {sdet} states, det has {det}"))
}

/// eval(P, h1·h2) = eval(eval(P, h1), h2) over small hedges and every
/// single-state or full starting set.
pub fn eval_compositional(a: &Sha) -> Verdict {
    let k = a.alphabet().len();
    let small: Vec<Hedge<Letter>> = oracle::enum_hedges(k, 3, 2).take(24).collect();
    let mut starts: Vec<StateSet> = a.word().states().map(|q| StateSet::from([q])).collect();
    starts.push(a.word().states().collect());
    for p in &starts {
        for h1 in &small {
            let mid = a.eval(p, h1);
            ensure(mid == oracle::eval_sha(a, p, h1), || {
                format!("evaluation of \"{}\" disagrees with the oracle", h1.decode(a.alphabet()))
            })?;
            for h2 in &small {
                let whole = a.eval(p, &h1.clone().concat(h2.clone()));
                ensure(whole == a.eval(&mid, h2), || {
                    format!(
                        "eval is not compositional on \"{}\" · \"{}\"",
                        h1.decode(a.alphabet()),
                        h2.decode(a.alphabet())
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// A dSHA evaluates every hedge from its tree-initial state to at most one state.
pub fn dsha_single_state(s: &Dsha, items: usize, depth: usize) -> Verdict {
    let start: StateSet = s.tree_initial().iter().copied().collect();
    let mut bad = None;
    for h in oracle::enum_hedges(s.alphabet().len(), items.min(4), depth) {
        if s.eval(&start, &h).len() > 1 {
            bad = Some(h);
            break;
        }
    }
    ensure(bad.is_none(), || {
        format!("hedge \"{}\" reaches several states", bad.unwrap().decode(s.alphabet()))
    })
}

/// Reads the letters of a two-letter SHA as `x` and `not-x` and compares the
/// nodes selected by `a`, scl(a), det(a) and det_S(a) under one-x-nw.
pub fn sha_query_invariance(a: &Sha) -> Option<Verdict> {
    if a.alphabet().len() != 2 {
        return None;
    }
    let alphabet = Alphabet::new([X, NOT_X]).ok()?;
    Some(sha_query_invariance_of(&relabel_sha(a, alphabet), 5, 3))
}

pub fn sha_query_invariance_of(q: &Sha, items: usize, depth: usize) -> Verdict {
    let onex = schemas::one_x_sha_over(q.alphabet()).map_err(fail)?;
    let variants = [
        ("scl", schema_clean_sha(q, &onex).map_err(fail)?.automaton),
        ("det", determinize_sha(q).automaton),
        ("det_S", schema_determinize_sha(q, &onex).map_err(fail)?.automaton),
    ];
    let reserved: Vec<Letter> = [X, NOT_X].iter().filter_map(|x| q.alphabet().letter(x)).collect();
    let subject: Vec<Letter> = q.alphabet().letters().filter(|l| !reserved.contains(l)).collect();
    for h in oracle::enum_hedges(subject.len(), items, depth) {
        let h: NestedWord = h.map(&mut |&i| q.alphabet().symbol(subject[i]).to_string());
        let expected = schemas::select_nodes(q, &h).map_err(fail)?;
        for (what, v) in &variants {
            let got = schemas::select_nodes(v, &h).map_err(fail)?;
            ensure(got == expected, || {
                format!("select differs after {what} on \"{h}\": {got:?} vs {expected:?}")
            })?;
        }
    }
    Ok(())
}

fn count_x(h: &Hedge<Letter>, x: Letter) -> usize {
    h.letters().filter(|&&l| l == x).count()
}

pub fn one_x_dfa_language(sigma: &Alphabet, len: usize) -> Verdict {
    let d = schemas::one_x_dfa(sigma).map_err(fail)?;
    let x = d.alphabet().letter(X).expect("x present");
    for w in oracle::enum_words(d.alphabet().len(), len) {
        let expected = w.iter().filter(|&&l| l == x).count() == 1;
        ensure(oracle::accepts_nfa(&d, &w) == expected, || {
            format!("one-x misclassifies {}", show(d.alphabet(), &w))
        })?;
    }
    Ok(())
}

pub fn one_x_sha_language(sigma: &Alphabet, items: usize, depth: usize) -> Verdict {
    let d = schemas::one_x_sha(sigma).map_err(fail)?;
    let x = d.alphabet().letter(X).expect("x present");
    let mut bad = None;
    explore_hedges(&[&d], items, depth, |h, v| {
        let h = h.to_hedge();
        if v[0] == (count_x(&h, x) == 1) {
            ControlFlow::Continue(())
        } else {
            bad = Some(h);
            ControlFlow::Break(())
        }
    })
    .map_err(fail)?;
    ensure(bad.is_none(), || {
        format!("one-x-nw misclassifies \"{}\"", bad.unwrap().decode(d.alphabet()))
    })
}
