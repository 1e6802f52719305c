use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported extension degree m={0} (need an even m with 4 <= m <= 16)")]
    UnsupportedM(u32),
    #[error("polynomial {poly} is not primitive of degree {m}: {reason}")]
    NonPrimitivePolynomial { poly: String, m: u32, reason: String },
    #[error("element is not in the index-2 subfield")]
    NotInSubfield,
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("empty input")]
    EmptyInput,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("designed distance {delta} outside [2, {n}]")]
    InvalidDelta { delta: u32, n: u32 },
    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),
    #[error("coefficient a must lie in the subfield F_2^s")]
    CoefficientNotInSubfield,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("closed form not applicable: {0}")]
    InapplicableParameters(String),
    #[error("non-integer count in row {row}: {value}")]
    NonIntegerCount { row: String, value: String },
    #[error("weight {weight} cannot be merged into the extended distribution")]
    WeightCollision { weight: u32 },
    #[error("quadratic form is zero for (a, b) = (0, 0)")]
    ZeroForm,
    #[error("exponential sum {0} is odd")]
    OddSum(i64),
    #[error("no codewords of weight {0}")]
    EmptyWeightClass(u32),
    #[error("blocks do not form a {t}-design: {first:?} in {first_count} blocks, {second:?} in {second_count}")]
    NotConstant {
        t: u32,
        first: Vec<u32>,
        first_count: u64,
        second: Vec<u32>,
        second_count: u64,
    },
    #[error("trivial design: block size {k} with t={t}, v={v}")]
    TrivialDesign { t: u32, k: u32, v: u32 },
    #[error("lambda is not an integer: {0}")]
    NonIntegerLambda(String),
}
