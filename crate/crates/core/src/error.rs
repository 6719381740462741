use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid class parameters a={a}, b={b}: need b >= 1 and 0 <= a < b")]
    InvalidClass { a: u64, b: u64 },
    #[error("forbidden pair (a={a}, b={b}): no n >= 2 with a^n = a (mod b)")]
    ForbiddenPair { a: u64, b: u64 },
    #[error("arity mismatch: expected {expected} operands, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("inadmissible length {len} for arity {arity}")]
    InadmissibleLength { len: usize, arity: u64 },
    #[error("{value} is not in the class [[{a}]]_{b}")]
    NotInClass { value: BigInt, a: u64, b: u64 },
    #[error("operands belong to different rings")]
    DescriptorMismatch,
    #[error("ring Z^[{a},{b}] has no unit, strict primality is undefined")]
    NotUnital { a: u64, b: u64 },
    #[error("ring Z^[{a},{b}] is not a limiting ring")]
    NotLimiting { a: u64, b: u64 },
    #[error("quotient is not unique: {candidates:?}")]
    NonUniqueQuotient { candidates: Vec<BigInt> },
    #[error("element index {index} does not return to itself within {steps} steps")]
    NoFiniteOrder { index: u64, steps: u64 },
    #[error("ring (a={a}, b={b}, q={q}) is not a field")]
    NotAField { a: u64, b: u64, q: u64 },
    #[error("ring (a={a}, b={b}, q={q}) has no units")]
    NoUnits { a: u64, b: u64, q: u64 },
    #[error("unknown appendix field (a={a}, b={b}, q={q})")]
    UnknownFieldId { a: u64, b: u64, q: u64 },
    #[error("invalid order q={q} for b={b}")]
    InvalidOrder { b: u64, q: u64 },
    #[error("value {value} is too large for divisor search")]
    TooLarge { value: BigInt },
    #[error("units disagree on the polyadic characteristic: {values:?}")]
    InconsistentCharacteristic { values: Vec<Option<u64>> },
    #[error("decomposition of zero is unbounded")]
    ZeroElement,
}
