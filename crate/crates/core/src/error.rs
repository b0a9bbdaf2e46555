use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} is not defined for n = 0")]
    ZeroArgument { op: &'static str },

    #[error("nearest integer of {value} is ambiguous: it is an exact half-integer")]
    HalfInteger { value: String },

    #[error("empty partition has no {what}")]
    EmptyPartition { what: &'static str },

    #[error("brute-force enumeration refused for n = {n}: the enumeration cap is n <= {max_n}")]
    EnumerationBudget { n: i64, max_n: i64 },

    #[error(
        "closed form for p({n}, {k}) needs {estimate} summand evaluations, over the budget of {budget} \
         (k guard = {k_guard})"
    )]
    TermBudget {
        n: i64,
        k: i64,
        estimate: u128,
        budget: u64,
        k_guard: i64,
    },

    #[error("multi-sum needs at least one index")]
    EmptyMultiSum,

    #[error("multi-sum stopped after {0} summand evaluations (budget exhausted)")]
    WalkBudget(u64),

    #[error("unknown form `{0}`")]
    UnknownForm(String),

    #[error("form `{form}` is not defined for k = {k}")]
    FormNotApplicable { form: &'static str, k: i64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid range {lo}..={hi}")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("coefficient {index} is beyond the truncation order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("series with constant term {0} has no inverse over the integers")]
    NotInvertible(String),

    #[error("divisor modulus must be positive")]
    ZeroModulus,

    #[error("{0}")]
    Precondition(&'static str),
}
