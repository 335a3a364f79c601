use thiserror::Error;

/// Errors produced by automaton construction, the constructions and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("reserved symbol `{0}`")]
    ReservedSymbol(String),
    #[error("alphabets differ: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },
    #[error("schema is not deterministic")]
    NondeterministicSchema,
    #[error("state {state} out of range (automaton has {num_states} states)")]
    StateOutOfRange { state: usize, num_states: usize },
    #[error("position {position} out of range for word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("node {0} does not exist")]
    InvalidNode(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unbalanced parenthesis at token {position}")]
    Unbalanced { position: usize },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
