use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("padding too short: length {length} exceeds padding {padding}")]
    PaddingTooShort { length: usize, padding: usize },

    #[error("invalid beta set: {0}")]
    InvalidBetaSet(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("modulus t = {0} must be at least 2")]
    InvalidModulus(usize),

    #[error("residue {residue} out of range for t = {t}")]
    ResidueOutOfRange { residue: usize, t: usize },

    #[error("length overflow: {length} parts do not fit in {capacity}")]
    LengthOverflow { length: usize, capacity: usize },

    #[error("cyclotomic polynomial undefined for t = {0}")]
    NonPositiveOrder(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("elements belong to different cyclotomic fields (t = {0} vs t = {1})")]
    FieldMismatch(usize, usize),

    #[error("length exceeds variable count: partition of length {length} in {variables} variables")]
    LengthExceedsVariables { length: usize, variables: usize },

    #[error("degenerate point: {0} denominator vanishes")]
    DegeneratePoint(&'static str),

    #[error("could not find admissible points after {0} attempts")]
    SamplingExhausted(usize),

    #[error("epsilon undefined for this class: {0}")]
    EpsilonUndefined(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("nonpositive total growth: a + b = {0}")]
    NonpositiveGrowth(i64),

    #[error("negative exponent in theta series (a = {0}, b = {1})")]
    NegativeThetaExponent(i64, i64),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("not a {z}-asymmetric {t}-core: {partition}")]
    NotAZCore { partition: String, z: i64, t: usize },

    #[error("trials must be at least 1")]
    NoTrials,
}
