use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("group order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },
    #[error("decoration not supported by the enumeration engine: {0}")]
    UnsupportedDecoration(String),
    #[error("Sylow {p}-subgroup search did not reach the full {p}-part")]
    SylowSearchFailed { p: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("f = {0} does not give a K4 group PSL(2,2^f)")]
    NotK4(u64),
    #[error("character sum is not an integer multiple of the element order: {0}")]
    NonIntegralDimension(String),
    #[error("closed forms and summation disagree: {0}")]
    CrossCheckMismatch(String),
    #[error("no fixed-point table loaded for {0}")]
    MissingTable(String),
    #[error("unsupported target: {0}")]
    UnsupportedTarget(String),
    #[error("catalog partition check failed: {0}")]
    PartitionMismatch(String),
    #[error("no module row matches the required fixed-point pattern: {0}")]
    NoMatchingRow(String),
    #[error("prime search budget exceeded for modulus {0}")]
    SearchBudgetExceeded(u128),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
