use thiserror::Error;

/// Problems with a diagram supplied by the user.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("crossing {crossing}: a crossing needs at least 2 strands, got {size}")]
    TooFewStrands { crossing: u32, size: usize },
    #[error("crossing {crossing}: levels not a permutation of 1..={size}: {levels:?}")]
    NotAPermutation {
        crossing: u32,
        size: usize,
        levels: Vec<u32>,
    },
    #[error("duplicate crossing id {0}")]
    DuplicateCrossing(u32),
    #[error("edge refers to unknown crossing {0}")]
    UnknownCrossing(u32),
    #[error("crossing {crossing}: slot {slot} out of range (crossing has {slots} slots)")]
    SlotOutOfRange { crossing: u32, slot: u32, slots: u32 },
    #[error("slot matched twice: crossing {crossing}, slot {slot} (as written; canonical rotation offset {offset})")]
    SlotMatchedTwice { crossing: u32, slot: u32, offset: u32 },
    #[error("slot never matched: crossing {crossing}, slot {slot} (as written; canonical rotation offset {offset})")]
    SlotUnmatched { crossing: u32, slot: u32, offset: u32 },
    #[error("unknown surface {0:?}; expected \"sphere\", \"torus\" or \"auto\"")]
    UnknownSurface(String),
    #[error("inconsistent embedding: V - E + F = {euler} gives a non-integral or negative genus")]
    BadEmbedding { euler: i64 },
    #[error("declared surface {declared} but the embedding has genus {found:?} per component")]
    SurfaceMismatch { declared: String, found: Vec<u32> },
}

/// A bipyramid-size sequence that cannot be realized.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("first entry \u{2260} 4 (got {0})")]
    FirstNotFour(u32),
    #[error("last entry \u{2260} 4 (got {0})")]
    LastNotFour(u32),
    #[error("gap at index {index} is {gap}")]
    BadGap { index: usize, gap: u32 },
    #[error("sequence sum {sum} exceeds the cap {cap}")]
    TooLarge { sum: u64, cap: u64 },
    #[error("could not parse sequence entry {0:?}")]
    Parse(String),
}

/// A self-check inside a construction failed. Always a bug, never bad input.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("tetrahedron count mismatch for levels {levels:?}: signature sum {by_signature}, level-gap sum {by_gaps}")]
    TetrahedronCount {
        levels: Vec<u32>,
        by_signature: u64,
        by_gaps: u64,
    },
    #[error("decompositions disagree: face total {face_total}, crossing total {crossing_total}; first bad crossing {first_crossing:?}")]
    DualMismatch {
        face_total: u64,
        crossing_total: u64,
        first_crossing: Option<u32>,
    },
    #[error("{operation} produced levels {levels:?} with signature {got:?}, expected {expected:?}")]
    Construction {
        operation: &'static str,
        levels: Vec<u32>,
        got: Vec<u32>,
        expected: Vec<u32>,
    },
    #[error("classification mismatch for n = {n}: achieved-only {achieved_only:?}, admissible-only {admissible_only:?}")]
    Classification {
        n: usize,
        achieved_only: Vec<Vec<u32>>,
        admissible_only: Vec<Vec<u32>>,
    },
    #[error("extremal check for n = {n}: {what} is {got}, expected {expected}")]
    Extremal {
        n: usize,
        what: &'static str,
        got: f64,
        expected: f64,
    },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("non-finite argument {0}")]
    NonFinite(f64),
    #[error("crossing size {0} is below 3")]
    SizeTooSmall(usize),
    #[error("crossing size {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
}
