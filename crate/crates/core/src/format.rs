//! Text formats: automaton files, words, nested words, and DOT output.
//!
//! Automaton files are line based:
//!
//! ```text
//! sha
//! alphabet a x not-x
//! states 0 1
//! # name 0 idle
//! initial 0
//! final 1
//! treeinit 0
//! rule 0 x 1
//! apply 0 1 1
//! ```
//!
//! `nfa` files use the same lines without `treeinit` and `apply`. Lines
//! starting with `#` are comments; `# name <state> <text>` attaches a display
//! name. The writer emits sections in the order above, with rules sorted, so
//! equal automata serialize to identical bytes.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::alphabet::{is_valid_symbol, Alphabet, CLOSE, OPEN};
use crate::error::{Error, Result};
use crate::nested::{Hedge, Item, NestedWord};
use crate::nfa::{Nfa, Rule, State};
use crate::sha::{ApplyRule, Sha};

/// A parsed automaton file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Sha(Sha),
}

impl Automaton {
    pub fn kind(&self) -> &'static str {
        match self {
            Automaton::Nfa(_) => "nfa",
            Automaton::Sha(_) => "sha",
        }
    }

    pub fn num_states(&self) -> usize {
        match self {
            Automaton::Nfa(a) => a.num_states(),
            Automaton::Sha(a) => a.num_states(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Automaton::Nfa(a) => a.size(),
            Automaton::Sha(a) => a.size(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Nfa(a) => a.alphabet(),
            Automaton::Sha(a) => a.alphabet(),
        }
    }

    pub fn is_deterministic(&self) -> bool {
        match self {
            Automaton::Nfa(a) => a.is_deterministic(),
            Automaton::Sha(a) => a.is_deterministic(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Automaton::Nfa(a) => write_nfa(a),
            Automaton::Sha(a) => write_sha(a),
        }
    }

    pub fn to_dot(&self) -> String {
        match self {
            Automaton::Nfa(a) => nfa_to_dot(a),
            Automaton::Sha(a) => sha_to_dot(a),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Sections {
    kind: Option<&'static str>,
    alphabet: Option<(usize, Vec<String>)>,
    states: Option<(usize, Vec<String>)>,
    initial: Option<(usize, Vec<String>)>,
    finals: Option<(usize, Vec<String>)>,
    tree_initial: Option<(usize, Vec<String>)>,
    rules: Vec<(usize, Vec<String>)>,
    apply: Vec<(usize, Vec<String>)>,
    names: Vec<(usize, String, String)>,
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut sections = Sections::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let head = tokens.next().unwrap_or_default();
        if head.starts_with('#') {
            if head == "#" {
                let rest: Vec<&str> = tokens.collect();
                if rest.first() == Some(&"name") {
                    let [_, state, text @ ..] = rest.as_slice() else {
                        return Err(err(line, "`# name` needs a state"));
                    };
                    sections
                        .names
                        .push((line, state.to_string(), text.join(" ")));
                }
            }
            continue;
        }
        let args: Vec<String> = tokens.map(str::to_owned).collect();
        if sections.kind.is_none() {
            sections.kind = Some(match (head, args.is_empty()) {
                ("nfa", true) => "nfa",
                ("sha", true) => "sha",
                _ => return Err(err(line, "expected header `nfa` or `sha`")),
            });
            continue;
        }
        let is_sha = sections.kind == Some("sha");
        let slot = match head {
            "alphabet" => &mut sections.alphabet,
            "states" => &mut sections.states,
            "initial" => &mut sections.initial,
            "final" => &mut sections.finals,
            "treeinit" if is_sha => &mut sections.tree_initial,
            "rule" => {
                sections.rules.push((line, args));
                continue;
            }
            "apply" if is_sha => {
                sections.apply.push((line, args));
                continue;
            }
            other => return Err(err(line, format!("unknown section `{other}`"))),
        };
        if slot.is_some() {
            return Err(err(line, format!("duplicate section `{head}`")));
        }
        *slot = Some((line, args));
    }
    build(sections)
}

fn build(sections: Sections) -> Result<Automaton> {
    let kind = sections
        .kind
        .ok_or_else(|| err(1, "missing header `nfa` or `sha`"))?;
    let (alpha_line, symbols) = sections
        .alphabet
        .ok_or_else(|| err(1, "missing `alphabet` section"))?;
    for s in &symbols {
        if !is_valid_symbol(s) {
            return Err(err(alpha_line, format!("`{s}` cannot be a symbol")));
        }
    }
    let alphabet =
        Alphabet::new(symbols).map_err(|e| err(alpha_line, e.to_string()))?;
    let (states_line, states) = sections
        .states
        .ok_or_else(|| err(1, "missing `states` section"))?;
    let num_states = states.len();
    let mut declared = vec![false; num_states];
    for s in &states {
        match s.parse::<usize>() {
            Ok(q) if q < num_states && !declared[q] => declared[q] = true,
            _ => {
                return Err(err(
                    states_line,
                    format!("states must list 0..{} exactly once, found `{s}`", num_states),
                ))
            }
        }
    }
    let state = |line: usize, token: &str| -> Result<State> {
        match token.parse::<usize>() {
            Ok(q) if q < num_states => Ok(q),
            _ => Err(err(line, format!("undeclared state `{token}`"))),
        }
    };
    let state_list = |section: Option<(usize, Vec<String>)>| -> Result<Vec<State>> {
        match section {
            None => Ok(Vec::new()),
            Some((line, tokens)) => tokens.iter().map(|t| state(line, t)).collect(),
        }
    };
    let initial = state_list(sections.initial)?;
    let finals = state_list(sections.finals)?;
    let tree_initial = state_list(sections.tree_initial)?;

    let mut seen = HashSet::new();
    let mut rules = Vec::with_capacity(sections.rules.len());
    for (line, args) in &sections.rules {
        let [src, letter, dst] = args.as_slice() else {
            return Err(err(*line, "rule needs `<src> <letter> <dst>`"));
        };
        let letter = alphabet
            .letter(letter)
            .ok_or_else(|| err(*line, format!("unknown letter `{letter}`")))?;
        let rule = Rule::new(state(*line, src)?, letter, state(*line, dst)?);
        if !seen.insert(rule) {
            return Err(err(*line, "duplicate rule"));
        }
        rules.push(rule);
    }
    let mut seen = HashSet::new();
    let mut apply = Vec::with_capacity(sections.apply.len());
    for (line, args) in &sections.apply {
        let [left, tree, dst] = args.as_slice() else {
            return Err(err(*line, "apply needs `<q1> <q> <q2>`"));
        };
        let rule = ApplyRule::new(state(*line, left)?, state(*line, tree)?, state(*line, dst)?);
        if !seen.insert(rule) {
            return Err(err(*line, "duplicate apply rule"));
        }
        apply.push(rule);
    }

    let mut nfa = Nfa::new(alphabet, num_states, initial, finals, rules)?;
    if !sections.names.is_empty() {
        let mut named: BTreeMap<State, String> = BTreeMap::new();
        for (line, q, text) in sections.names {
            named.insert(state(line, &q)?, text);
        }
        let names = (0..num_states)
            .map(|q| named.remove(&q).unwrap_or_else(|| q.to_string()))
            .collect();
        nfa = nfa.with_names(names)?;
    }
    Ok(match kind {
        "nfa" => Automaton::Nfa(nfa),
        _ => Automaton::Sha(Sha::new(nfa, tree_initial, apply)?),
    })
}

fn join<T: ToString>(head: &str, items: impl IntoIterator<Item = T>) -> String {
    let mut line = head.to_owned();
    for item in items {
        line.push(' ');
        line.push_str(&item.to_string());
    }
    line
}

fn write_common(out: &mut String, kind: &str, a: &Nfa) {
    writeln!(out, "{kind}").unwrap();
    writeln!(out, "{}", join("alphabet", a.alphabet().symbols())).unwrap();
    writeln!(out, "{}", join("states", a.states())).unwrap();
    if let Some(names) = a.names() {
        for (q, name) in names.iter().enumerate() {
            writeln!(out, "# name {q} {name}").unwrap();
        }
    }
    writeln!(out, "{}", join("initial", a.initial())).unwrap();
    writeln!(out, "{}", join("final", a.finals())).unwrap();
}

fn write_rules(out: &mut String, a: &Nfa) {
    for r in a.rules() {
        writeln!(out, "rule {} {} {}", r.src, a.alphabet().symbol(r.letter), r.dst).unwrap();
    }
}

pub fn write_nfa(a: &Nfa) -> String {
    let mut out = String::new();
    write_common(&mut out, "nfa", a);
    write_rules(&mut out, a);
    out
}

pub fn write_sha(a: &Sha) -> String {
    let mut out = String::new();
    write_common(&mut out, "sha", a.word());
    writeln!(out, "{}", join("treeinit", a.tree_initial())).unwrap();
    write_rules(&mut out, a.word());
    for r in a.apply_rules() {
        writeln!(out, "apply {} {} {}", r.left, r.tree, r.dst).unwrap();
    }
    out
}

/// Whitespace-separated letters.
pub fn parse_word(text: &str) -> Vec<String> {
    text.split_whitespace().map(str::to_owned).collect()
}

/// Whitespace-separated tokens; `<` opens a tree and `>` closes it.
pub fn parse_nested_word(text: &str) -> Result<NestedWord> {
    let mut stack: Vec<(usize, Vec<Item<String>>)> = vec![(0, Vec::new())];
    for (position, token) in text.split_whitespace().enumerate() {
        match token {
            OPEN => stack.push((position, Vec::new())),
            CLOSE => {
                if stack.len() == 1 {
                    return Err(Error::Unbalanced { position });
                }
                let (_, items) = stack.pop().unwrap();
                let tree = Item::Tree(Hedge::from_items(items));
                stack.last_mut().unwrap().1.push(tree);
            }
            letter => stack
                .last_mut()
                .unwrap()
                .1
                .push(Item::Letter(letter.to_owned())),
        }
    }
    if stack.len() > 1 {
        return Err(Error::Unbalanced {
            position: stack.last().unwrap().0,
        });
    }
    Ok(Hedge::from_items(stack.pop().unwrap().1))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot_states(out: &mut String, a: &Nfa) {
    out.push_str("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in a.states() {
        let shape = if a.is_final(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  q{q} [label={}, shape={shape}];", quote(&a.state_name(q))).unwrap();
    }
    for &q in a.initial() {
        writeln!(out, "  init{q} [shape=point, class=\"marker\"];").unwrap();
        writeln!(out, "  init{q} -> q{q} [class=\"initial\"];").unwrap();
    }
}

fn dot_rules(out: &mut String, a: &Nfa) {
    for r in a.rules() {
        writeln!(
            out,
            "  q{} -> q{} [label={}];",
            r.src,
            r.dst,
            quote(a.alphabet().symbol(r.letter))
        )
        .unwrap();
    }
}

/// Graphviz rendering: final states doubly circled, initial states with an in-arrow.
pub fn nfa_to_dot(a: &Nfa) -> String {
    let mut out = String::new();
    dot_states(&mut out, a);
    dot_rules(&mut out, a);
    out.push_str("}\n");
    out
}

/// Like [`nfa_to_dot`]; tree-initial in-arrows and apply edges are blue, and an
/// apply edge is labelled by the tree state it consumes.
pub fn sha_to_dot(a: &Sha) -> String {
    let mut out = String::new();
    dot_states(&mut out, a.word());
    for &q in a.tree_initial() {
        writeln!(out, "  tinit{q} [shape=point, color=blue, class=\"marker\"];").unwrap();
        writeln!(
            out,
            "  tinit{q} -> q{q} [class=\"tree-initial\", color=blue, style=dashed];"
        )
        .unwrap();
    }
    dot_rules(&mut out, a.word());
    for r in a.apply_rules() {
        writeln!(
            out,
            "  q{} -> q{} [label={}, class=\"apply\", color=blue, fontcolor=blue];",
            r.left,
            r.dst,
            quote(&a.state_name(r.tree))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
