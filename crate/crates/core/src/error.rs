//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by ideal arithmetic, decomposition, homology and sdepth
/// computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring must have at least one variable")]
    EmptyRing,

    #[error("ring mismatch: expected {expected} variables, got {got}")]
    RingMismatch { expected: usize, got: usize },

    #[error("degree mismatch: expected degree {expected}, got {got}")]
    DegreeMismatch { expected: u64, got: u64 },

    #[error("lexsegment requires degree d >= 2, got {d}")]
    DegreeBelowTwo { d: u64 },

    #[error("lexsegment endpoints out of order: u <_lex v")]
    LexOrderViolated,

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("exponent arithmetic overflow")]
    ExponentOverflow,

    #[error("alpha entry {index} is zero; all entries must be >= 1")]
    AlphaZeroEntry { index: usize },

    #[error("ideal is not squarefree: generator {gen}")]
    NotSquarefree { gen: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("unknown variable {name} at line {line}, column {col}")]
    UnknownVariable {
        line: usize,
        col: usize,
        name: String,
    },

    #[error("zero exponent literal at line {line}, column {col}")]
    ZeroExponentLiteral { line: usize, col: usize },

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("ideal is not primary: variable x{var} has no pure power generator")]
    NotPrimary { var: usize },

    #[error("associated prime set is empty")]
    EmptyAss,

    #[error("generator count {count} exceeds cap {cap}")]
    GeneratorCapExceeded { count: usize, cap: usize },

    #[error("lcm lattice size {count} exceeds cap {cap}")]
    LatticeCapExceeded { count: usize, cap: usize },

    #[error("order complex face count exceeds cap {cap}")]
    FaceCapExceeded { cap: usize },

    #[error("characteristic poset box size {size} exceeds cap {cap}")]
    BoxCapExceeded { size: u128, cap: u64 },

    #[error("field characteristic {p} is neither 0 nor prime")]
    InvalidCharacteristic { p: u64 },

    #[error("g override entry {index} is smaller than the lcm exponent {min}")]
    GOverrideTooSmall { index: usize, min: u32 },

    #[error("infeasible generator parameters: {msg}")]
    InfeasibleParams { msg: String },

    #[error("exact rank arithmetic overflow; retry with a prime characteristic")]
    ExactArithmeticOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
