use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 65536")]
    NotPrime(u64),

    #[error("entry {value} is outside the field F_{modulus}")]
    EntryOutOfRange { value: u64, modulus: u16 },

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u16, right: u16 },

    #[error("dimension mismatch: ambient {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid type vector {dims:?} for ambient dimension {ambient}: {reason}")]
    InvalidType {
        dims: Vec<usize>,
        ambient: usize,
        reason: &'static str,
    },

    #[error("type mismatch: {left:?} vs {right:?}")]
    TypeMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("subspace {index} has dimension {found}, type requires {expected}")]
    WrongDimension {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("subspace {index} is not contained in subspace {next}", next = index + 1)]
    NotNested { index: usize },

    #[error("letter {letter:?} at index {index} is not one of U, H, D")]
    Alphabet { index: usize, letter: char },

    #[error("prefix ending at index {index} has more D than U steps (path drops below the axis)")]
    NotAPath { index: usize },

    #[error("word has {ups} U steps but {downs} D steps (path does not return to the axis)")]
    Imbalance { ups: usize, downs: usize },

    #[error("distance vector for n = {n} needs {expected} components, got {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },

    #[error("component {index} is negative ({value})")]
    Negative { index: usize, value: i64 },

    #[error(
        "not a distance vector: component {index} steps from {previous} to {value} \
         (consecutive entries, with zeros at both ends, must differ by at most 1)"
    )]
    NotADistanceVector {
        index: usize,
        previous: i64,
        value: i64,
    },

    #[error("component {index} is zero; the vector does not come from disjoint flags")]
    NotDisjoint { index: usize },

    #[error("flag code is empty")]
    EmptyCode,

    #[error("flags {first} and {second} are identical")]
    DuplicateFlag { first: usize, second: usize },

    #[error("the distance-vector set of a single-flag code is undefined")]
    SingletonCode,
}
