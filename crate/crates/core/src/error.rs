use crate::dumont::DumontViolation;
use crate::pairs::VertexPair;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..={max}")]
    VertexCount { n: usize, max: usize },

    #[error("vertex {v} out of range 1..={n}")]
    Vertex { v: usize, n: usize },

    #[error("pair endpoints must satisfy 1 <= a < b, got ({a}, {b})")]
    PairOrder { a: usize, b: usize },

    #[error("duplicate pair {a}-{b}")]
    DuplicatePair { a: usize, b: usize },

    #[error("not a valid order: {nested} is nested inside {outer} but listed after it")]
    OrderNotValid {
        nested: VertexPair,
        outer: VertexPair,
    },

    #[error("one-line word must have even positive length, got {len}")]
    WordLength { len: usize },

    #[error("word is not a bijection of its index range: value {value} at position {pos}")]
    WordNotBijection { pos: usize, value: usize },

    #[error("record n={n} does not match word length {len}")]
    RecordMismatch { n: usize, len: usize },

    #[error("{what} supports n in 1..={max}, got {n}")]
    Bound {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("consecutive pair index {i} out of range 1..={}", .n - 1)]
    ConsecutiveIndex { i: usize, n: usize },

    #[error("not a Dumont derangement of the second kind: {0}")]
    NotDumontDerangement(DumontViolation),

    #[error("edge {edge} is not in the graph")]
    EdgeAbsent { edge: VertexPair },

    #[error("edge {edge} is not minimal in the nesting order: {nested} nests inside it")]
    EdgeNotMinimal {
        edge: VertexPair,
        nested: VertexPair,
    },

    #[error("{0}")]
    OrderMismatch(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),

    #[error("count mismatch: {via_graphs} terrain-like graphs vs {via_permutations} Dumont derangements")]
    CountMismatch {
        via_graphs: u64,
        via_permutations: u64,
    },

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}

/// Position-annotated failure from the text input formats.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}
