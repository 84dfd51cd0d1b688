use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree literal `{0}`")]
    InvalidDegree(String),
    #[error("degree `{0}` is outside [0, 1]")]
    DegreeOutOfRange(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("automaton must have at least one {0}")]
    Empty(&'static str),
    #[error("duplicate transition {src} -{letter}-> {dst}")]
    DuplicateTransition { src: String, letter: String, dst: String },
    #[error("transition from {state} on {letter} is {problem}")]
    NotDeterministic {
        state: String,
        letter: String,
        problem: &'static str,
    },
    #[error("automaton is not complete: no successor of {state} on {letter}")]
    IncompleteAutomaton { state: String, letter: String },
    #[error("recognizer construction exceeded the state cap of {cap}")]
    StateCapExceeded { cap: usize },
    #[error("{0} is not supported by this construction")]
    UnsupportedKind(String),
    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("state set is not closed: {state} -{letter}-> {escaping} leaves it")]
    NotClosed {
        state: String,
        letter: String,
        escaping: String,
    },
    #[error("map does not induce an automaton: {first} and {second} disagree on letter {letter} into class {class}")]
    InconsistentQuotient {
        first: String,
        second: String,
        letter: String,
        class: String,
    },
    #[error("state map is invalid: {0}")]
    InvalidStateMap(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsatisfiable generator configuration: {0}")]
    Unsatisfiable(String),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}
