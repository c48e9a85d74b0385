//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while parsing, constructing or analysing automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line of a text document could not be understood.
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// The transition table has no entry for a state/letter pair.
    #[error("incomplete transition function at state {state}, letter {letter}")]
    IncompleteTransition { state: usize, letter: String },
    /// The same state/letter pair is given twice.
    #[error("duplicate transition at line {line}: state {state}, letter {letter}")]
    DuplicateTransition {
        line: usize,
        state: usize,
        letter: String,
    },
    /// A state id is not below the declared state count.
    #[error("state {state} out of range (states {count}){}", line_suffix(*.line))]
    StateOutOfRange {
        line: Option<usize>,
        state: usize,
        count: usize,
    },
    /// A letter is not part of the alphabet.
    #[error("unknown letter {letter}{}", line_suffix(*.line))]
    UnknownLetter { line: Option<usize>, letter: String },
    /// The alphabet is empty or lists a symbol twice.
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    /// Two automata do not share the same ordered alphabet.
    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },
    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A configured resource cap was hit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// A construction produced a value that contradicts its own contract.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
