use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A bead count or sum exceeded the 64-bit range.
    #[error("bead count overflows 64 bits")]
    Overflow,

    /// The operation needs at least one bead but got the empty necklace.
    #[error("operation requires a non-empty necklace")]
    EmptyConfiguration,

    /// The operation needs at least one black bead (a gap anchor).
    #[error("operation requires at least one black bead (b >= 1)")]
    NoGaps,

    /// `reduce` asked to subtract more red beads than a gap holds.
    #[error("cannot subtract {amount} from gap {index} holding {value}")]
    ReductionTooLarge { index: usize, value: u64, amount: u64 },

    /// Binary words must have length >= 1.
    #[error("binary word must be non-empty")]
    EmptyWord,

    /// A word contained a character other than '0' or '1'.
    #[error("invalid bit {0:?}, expected '0' or '1'")]
    InvalidBit(char),

    /// Requested cyclic subword length is outside 1..=n.
    #[error("subword length {q} out of range 1..={n}")]
    SubwordLength { q: u64, n: u64 },

    /// Requested word weight is larger than the word length.
    #[error("weight {k} exceeds word length {n}")]
    WeightOutOfRange { k: u64, n: u64 },

    /// Shift graphs require 2 <= m < n.
    #[error("stride m={m} out of range for n={n} (need 2 <= m < n)")]
    StrideOutOfRange { n: u64, m: u64 },

    /// A configuration whose beads do not sum to n cannot close a walk.
    #[error("walk of {a} strides and {b} unit steps spans {span}, not n={n}")]
    WalkDoesNotClose { a: u64, b: u64, span: u64, n: u64 },

    /// A differential entry was neither 1 nor the stride m.
    #[error("difference {value} is not a shift step (expected 1 or {m})")]
    NotAShiftStep { value: u64, m: u64 },

    /// A brute-force guard was exceeded; raise the guard explicitly to proceed.
    #[error("guard '{guard}' exceeded: {value} > {limit}")]
    GuardExceeded {
        guard: &'static str,
        limit: u64,
        value: u64,
    },

    /// A packing that is guaranteed disjoint failed verification.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
