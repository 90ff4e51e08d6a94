use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("interval radius must be positive, got {0}")]
    NonPositiveRadius(Rational),
    #[error("interval contains zero; refine before inverting")]
    ContainsZero,
    #[error("enlargement must be positive, got {0}")]
    NonPositiveEnlargement(Rational),
    #[error("precision must be positive, got {0}")]
    InvalidPrecision(Rational),
    #[error("oracle cannot reach the requested precision: {0}")]
    OracleFailure(String),
    #[error("could not separate the value from zero within the budget")]
    SignUnknown,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("comparison did not certify a strict order within the budget")]
    NotSeparated,
    #[error("comparisons could not all be certified within the budget")]
    BudgetExhausted,
    #[error("n = {n} exceeds the configured cap of {cap}")]
    DeskScaleExceeded { n: u32, cap: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("family of reals must be nonempty")]
    EmptyFamily,
}
