use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use schemadet::bench::{render, run_bench};
use schemadet::check::{run_check, CheckConfig};
use schemadet::format::{parse_automaton, parse_nested_word, parse_word, Automaton};
use schemadet::{canon, schemas, Error, RunStats};
use schemadet::{
    determinize, determinize_sha, product, product_sha, schema_clean, schema_clean_sha,
    schema_determinize, schema_determinize_sha,
};

/// Determinization, products and schema-based cleaning for automata on words
/// and stepwise hedge automata on nested words.
#[derive(Parser)]
#[command(name = "schemadet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Accessible determinization.
    Det {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Schema-based determinization.
    Sdet {
        input: PathBuf,
        #[command(flatten)]
        schema: SchemaArg,
        #[command(flatten)]
        out: Output,
    },
    /// Accessible product of two automata of the same kind.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Schema-based cleaning.
    Clean {
        input: PathBuf,
        #[command(flatten)]
        schema: SchemaArg,
        #[command(flatten)]
        out: Output,
    },
    /// Membership of a word or nested word (whitespace-separated tokens).
    Accepts { input: PathBuf, word: String },
    /// Positions or nodes selected by a query automaton over a subject.
    Select { input: PathBuf, subject: String },
    /// Randomized property suite.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_word_length: usize,
        #[arg(long, default_value_t = 5)]
        max_hedge_items: usize,
        #[arg(long, default_value_t = 2)]
        max_depth: usize,
        #[arg(long, hide = true)]
        mutate_alignment: bool,
    },
    /// Sizes of det(A), det(A×S) and det_S(A) on the synthetic query family.
    Bench {
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 6)]
        to: usize,
        /// Seconds per cell before it is left blank.
        #[arg(long, default_value_t = 100.0)]
        timeout: f64,
        /// Also report wall-clock times and agenda counters.
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Args)]
struct SchemaArg {
    /// Schema file, or `onex` / `onex-nw` for the one-x schema over the input's alphabet.
    #[arg(long)]
    schema: String,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the result in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Report agenda counters on standard error.
    #[arg(long)]
    stats: bool,
}

enum Failure {
    Reject(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NondeterministicSchema
            | Error::AlphabetMismatch { .. }
            | Error::Precondition(_)
            | Error::PositionOutOfRange { .. }
            | Error::InvalidNode(_) => Failure::Reject(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn read(path: &Path) -> Result<Automaton, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_automaton(&text).map_err(|e| match Failure::from(e) {
        Failure::Usage(m) | Failure::Reject(m) => Failure::Usage(format!("{}: {m}", path.display())),
    })
}

fn schema_for(arg: &SchemaArg, input: &Automaton) -> Result<Automaton, Failure> {
    match (arg.schema.as_str(), input) {
        ("onex" | "onex-nw", Automaton::Nfa(a)) => Ok(Automaton::Nfa(schemas::one_x_over(a.alphabet())?)),
        ("onex" | "onex-nw", Automaton::Sha(a)) => {
            Ok(Automaton::Sha(schemas::one_x_sha_over(a.alphabet())?))
        }
        (path, _) => read(Path::new(path)),
    }
}

fn kind_mismatch(left: &Automaton, right: &Automaton) -> Failure {
    Failure::Reject(format!(
        "cannot combine a {} with a {}",
        left.kind(),
        right.kind()
    ))
}

fn emit(result: Automaton, stats: RunStats, out: &Output) -> CmdResult {
    let text = result.to_text();
    match &out.output {
        Some(path) => fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(path) = &out.dot {
        fs::write(path, result.to_dot()).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    eprintln!("#states {}", result.num_states());
    eprintln!("size(#states) {}({})", result.size(), result.num_states());
    if out.stats {
        eprintln!(
            "agenda pushes {} pops {} rules emitted {}",
            stats.agenda_pushes, stats.agenda_pops, stats.rules_emitted
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_det(input: &Path, out: &Output) -> CmdResult {
    let (result, stats) = match read(input)? {
        Automaton::Nfa(a) => {
            let d = determinize(&a);
            (Automaton::Nfa(canon::by_subsets(&d.automaton, &d.subsets)?.0), d.stats)
        }
        Automaton::Sha(a) => {
            let d = determinize_sha(&a);
            (Automaton::Sha(canon::sha_by_subsets(&d.automaton, &d.subsets)?.0), d.stats)
        }
    };
    emit(result, stats, out)
}

fn cmd_sdet(input: &Path, schema: &SchemaArg, out: &Output) -> CmdResult {
    let a = read(input)?;
    let s = schema_for(schema, &a)?;
    let (result, stats) = match (&a, &s) {
        (Automaton::Nfa(a), Automaton::Nfa(s)) => {
            let d = schema_determinize(a, s)?;
            let c = canon::by_subsets(&d.automaton, &d.alignment.subsets)?.0;
            (Automaton::Nfa(c), d.stats)
        }
        (Automaton::Sha(a), Automaton::Sha(s)) => {
            let d = schema_determinize_sha(a, s)?;
            let c = canon::sha_by_subsets(&d.automaton, &d.alignment.subsets)?.0;
            (Automaton::Sha(c), d.stats)
        }
        _ => return Err(kind_mismatch(&a, &s)),
    };
    emit(result, stats, out)
}

fn cmd_product(left: &Path, right: &Path, out: &Output) -> CmdResult {
    let (a, s) = (read(left)?, read(right)?);
    let (result, stats) = match (&a, &s) {
        (Automaton::Nfa(a), Automaton::Nfa(s)) => {
            let p = product(a, s)?;
            (Automaton::Nfa(p.automaton), p.stats)
        }
        (Automaton::Sha(a), Automaton::Sha(s)) => {
            let p = product_sha(a, s)?;
            (Automaton::Sha(p.automaton), p.stats)
        }
        _ => return Err(kind_mismatch(&a, &s)),
    };
    emit(result, stats, out)
}

fn cmd_clean(input: &Path, schema: &SchemaArg, out: &Output) -> CmdResult {
    let a = read(input)?;
    let s = schema_for(schema, &a)?;
    let (result, stats) = match (&a, &s) {
        (Automaton::Nfa(a), Automaton::Nfa(s)) => {
            let c = schema_clean(a, s)?;
            (Automaton::Nfa(c.automaton), c.stats)
        }
        (Automaton::Sha(a), Automaton::Sha(s)) => {
            let c = schema_clean_sha(a, s)?;
            (Automaton::Sha(c.automaton), c.stats)
        }
        _ => return Err(kind_mismatch(&a, &s)),
    };
    emit(result, stats, out)
}

fn verdict(yes: bool) -> ExitCode {
    println!("{}", if yes { "yes" } else { "no" });
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_accepts(input: &Path, word: &str) -> CmdResult {
    match read(input)? {
        Automaton::Nfa(a) => {
            let w = parse_word(word);
            if w.iter().any(|t| t == "<" || t == ">") {
                return Err(Failure::Usage("word automata read flat words".into()));
            }
            Ok(verdict(a.accepts(&w)?))
        }
        Automaton::Sha(a) => Ok(verdict(a.accepts_nested(&parse_nested_word(word)?)?)),
    }
}

fn cmd_select(input: &Path, subject: &str) -> CmdResult {
    let selected = match read(input)? {
        Automaton::Nfa(a) => schemas::select_word(&a, &parse_word(subject))?,
        Automaton::Sha(a) => schemas::select_nodes(&a, &parse_nested_word(subject)?)?,
    };
    let ids: Vec<String> = selected.iter().map(usize::to_string).collect();
    println!("{}", ids.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Det { input, out } => cmd_det(&input, &out),
        Command::Sdet { input, schema, out } => cmd_sdet(&input, &schema, &out),
        Command::Product { left, right, out } => cmd_product(&left, &right, &out),
        Command::Clean { input, schema, out } => cmd_clean(&input, &schema, &out),
        Command::Accepts { input, word } => cmd_accepts(&input, &word),
        Command::Select { input, subject } => cmd_select(&input, &subject),
        Command::Check {
            seed,
            count,
            max_word_length,
            max_hedge_items,
            max_depth,
            mutate_alignment,
        } => {
            let report = run_check(&CheckConfig {
                seed,
                count,
                max_word_length,
                max_hedge_items,
                max_depth,
                mutate_alignment,
            });
            println!("{report}");
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench {
            from,
            to,
            timeout,
            stats,
        } => {
            if from == 0 || from > to {
                return Err(Failure::Usage("bench needs 1 <= --from <= --to".into()));
            }
            let timeout = Duration::try_from_secs_f64(timeout)
                .map_err(|e| Failure::Usage(format!("--timeout: {e}")))?;
            let rows = run_bench(from..=to, timeout);
            print!("{}", render(&rows, stats));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Reject(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
