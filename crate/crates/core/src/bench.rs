//! Synthetic benchmark comparing det(A), det(A×S) and det_S(A).
//!
//! This family is synthetic. It is not the query family of any published
//! experiment.
//!
//! The query `A(n)` selects the nodes whose annotated nested word has the
//! letter `a` exactly `n` letters after some `x`, at any depth. Its states are
//! `0` (idle), `1..=n` (counting letters since an `x`) and `F = n + 1` (match
//! found). Over words:
//! - `0` loops on every letter and `0 -x-> 1`;
//! - `i -σ-> i+1` for `1 <= i < n` and every letter σ;
//! - `n -a-> F` and `F` loops on every letter.
//!
//! Trees are read from the tree-initial state `0`: a subtree that ends in `0`
//! is skipped (`q @ 0 -> q`), and a subtree that contains a match makes the
//! whole nested word match (`q @ F -> F`). The alphabet is `{a, b, x, not-x}`
//! and the only final state is `F`.
//!
//! Because `0` keeps guessing, det(A) tracks the distance to every `x` seen so
//! far, while under the one-x schema det_S(A) tracks a single one.

use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use crate::alphabet::Alphabet;
use crate::hedges::{determinize_sha, product_sha, schema_determinize_sha};
use crate::nfa::{Nfa, Rule};
use crate::saturation::RunStats;
use crate::schemas::{one_x_sha, NOT_X, X};
use crate::sha::{ApplyRule, Sha};

pub fn family(n: usize) -> Sha {
    assert!(n >= 1, "the family starts at n = 1");
    let alphabet = Alphabet::new(["a", "b", X, NOT_X]).expect("valid symbols");
    let a = alphabet.letter("a").unwrap();
    let x = alphabet.letter(X).unwrap();
    let fin = n + 1;
    let mut rules = Vec::new();
    for l in alphabet.letters() {
        rules.push(Rule::new(0, l, 0));
        rules.push(Rule::new(fin, l, fin));
        for i in 1..n {
            rules.push(Rule::new(i, l, i + 1));
        }
    }
    rules.push(Rule::new(0, x, 1));
    rules.push(Rule::new(n, a, fin));
    let word = Nfa::new(alphabet, n + 2, [0], [fin], rules).expect("valid by construction");
    let apply = (0..n + 2)
        .map(|q| ApplyRule::new(q, 0, q))
        .chain((0..n + 2).map(|q| ApplyRule::new(q, fin, fin)));
    Sha::new(word, [0], apply).expect("valid by construction")
}

/// One filled table cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cell {
    pub size: usize,
    pub states: usize,
    pub seconds: f64,
    pub stats: Option<RunStats>,
}

impl Cell {
    fn of(a: &Sha, seconds: f64, stats: Option<RunStats>) -> Self {
        Cell {
            size: a.size(),
            states: a.num_states(),
            seconds,
            stats,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub query: Cell,
    /// `None` when the cell timed out.
    pub det: Option<Cell>,
    pub det_product: Option<Cell>,
    pub sdet: Option<Cell>,
}

impl BenchRow {
    /// det_S(A) never has more states than det(A); holds vacuously when a cell is blank.
    pub fn ordered(&self) -> bool {
        match (self.det, self.sdet) {
            (Some(d), Some(s)) => s.states <= d.states,
            _ => true,
        }
    }
}

fn timed<F>(timeout: Duration, job: F) -> Option<Cell>
where
    F: FnOnce() -> (Sha, Option<RunStats>) + Send + 'static,
{
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let start = Instant::now();
        let (a, stats) = job();
        let _ = tx.send(Cell::of(&a, start.elapsed().as_secs_f64(), stats));
    });
    rx.recv_timeout(timeout).ok()
}

pub fn bench_row(n: usize, timeout: Duration) -> BenchRow {
    let query = family(n);
    let schema = one_x_sha(&Alphabet::new(["a", "b"]).expect("valid symbols"))
        .expect("a and b are not reserved");
    let det = {
        let a = query.clone();
        timed(timeout, move || {
            let d = determinize_sha(&a);
            (d.automaton, Some(d.stats))
        })
    };
    let det_product = {
        let (a, s) = (query.clone(), schema.clone());
        timed(timeout, move || {
            let p = product_sha(&a, &s).expect("same alphabet");
            let d = determinize_sha(&p.automaton);
            (d.automaton, Some(d.stats))
        })
    };
    let sdet = {
        let (a, s) = (query.clone(), schema);
        timed(timeout, move || {
            let d = schema_determinize_sha(&a, &s).expect("deterministic schema");
            (d.automaton, Some(d.stats))
        })
    };
    BenchRow {
        n,
        query: Cell::of(&query, 0.0, None),
        det,
        det_product,
        sdet,
    }
}

pub fn run_bench(ns: impl IntoIterator<Item = usize>, timeout: Duration) -> Vec<BenchRow> {
    ns.into_iter().map(|n| bench_row(n, timeout)).collect()
}

fn size_cell(c: &Option<Cell>) -> String {
    c.map(|c| format!("{}({})", c.size, c.states)).unwrap_or_default()
}

fn time_cell(c: &Option<Cell>) -> String {
    c.map(|c| format!("{:.4}", c.seconds)).unwrap_or_default()
}

fn pushes_cell(c: &Option<Cell>) -> String {
    c.and_then(|c| c.stats)
        .map(|s| format!("{}/{}/{}", s.agenda_pushes, s.agenda_pops, s.rules_emitted))
        .unwrap_or_default()
}

/// The table as printed by `schemadet bench`. Sizes read `size(#states)`;
/// agenda columns read `pushes/pops/rules`.
pub fn render(rows: &[BenchRow], with_times: bool) -> String {
    let mut header = vec![
        "n".to_string(),
        "A".into(),
        "det(A)".into(),
        "det(AxS)".into(),
        "det_S(A)".into(),
    ];
    if with_times {
        header.extend(
            ["t det(A)", "t det(AxS)", "t det_S(A)", "agenda det(A)", "agenda det(AxS)", "agenda det_S(A)"]
                .map(String::from),
        );
    }
    let mut lines = vec![header];
    for r in rows {
        let mut line = vec![
            r.n.to_string(),
            size_cell(&Some(r.query)),
            size_cell(&r.det),
            size_cell(&r.det_product),
            size_cell(&r.sdet),
        ];
        if with_times {
            line.extend([&r.det, &r.det_product, &r.sdet].map(time_cell));
            line.extend([&r.det, &r.det_product, &r.sdet].map(pushes_cell));
        }
        lines.push(line);
    }
    let widths: Vec<usize> = (0..lines[0].len())
        .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in lines {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shape() {
        let a = family(3);
        assert_eq!(a.num_states(), 5);
        assert_eq!(a.tree_initial(), &[0]);
        assert_eq!(a.finals(), &[4]);
        assert!(!a.is_deterministic());
    }

    #[test]
    fn family_language_on_examples() {
        let a = family(2);
        let yes = crate::format::parse_nested_word("b x b a").unwrap();
        let nested = crate::format::parse_nested_word("b < not-x < x a a > > b").unwrap();
        let no = crate::format::parse_nested_word("x a b").unwrap();
        assert!(a.accepts_nested(&yes).unwrap());
        assert!(a.accepts_nested(&nested).unwrap());
        assert!(!a.accepts_nested(&no).unwrap());
    }

    #[test]
    fn rows_are_ordered() {
        let rows = run_bench(1..=3, Duration::from_secs(30));
        assert!(rows.iter().all(BenchRow::ordered));
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 2, 3]);
    }
}
