use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable index 0 at position {pos}; variables are numbered from X1")]
    ZeroVariable { pos: usize },

    #[error("formula mentions X{index} but the assignment has only {len} values")]
    VariableOutOfRange { index: usize, len: usize },

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("truth value {0} lies outside [0,1]")]
    TruthValueOutOfRange(String),

    #[error("cannot classify an empty list of values")]
    EmptyValues,

    #[error("invalid assignment class: {0}")]
    InvalidClass(String),

    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("forest over {n} variables is outside the supported range 1..={max}")]
    ForestTooLarge { n: usize, max: usize },

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("subforests live in different ambient forests ({left} vs {right} variables)")]
    AmbientMismatch { left: usize, right: usize },

    #[error("finite-valued logic needs t >= 2, got {0}")]
    InvalidTruthCount(usize),

    #[error("unknown logic {0:?}; expected `ginf` or `gT` with T >= 2")]
    UnknownLogic(String),

    #[error("grid oracle needs {t}^{n} assignments, above the budget of {budget}")]
    GridBudget { t: usize, n: usize, budget: u64 },

    #[error("fuzzy set {set:?}{}: {reason}", point.map(|p| format!(", point {p}")).unwrap_or_default())]
    InvalidFuzzySet {
        set: String,
        point: Option<usize>,
        reason: String,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("abscissa {0} lies outside [0,1]")]
    OutsideDomain(String),

    #[error("subforest is empty")]
    EmptySubforest,

    #[error("subforest is not a Ruspini subforest: {0}")]
    NotRuspini(String),

    #[error("counts are defined for n >= 1")]
    ZeroCount,

    #[error("count for n = {n} is too large to materialise (limit n <= {max})")]
    CountTooLarge { n: usize, max: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
