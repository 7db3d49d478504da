use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("number of variables must be at least 1")]
    EmptyDimension,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{n} variables exceed the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },

    #[error("position {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("expanding {n} free positions exceeds the limit of {limit}")]
    ExpansionLimit { n: usize, limit: usize },

    #[error("term budget of {budget} patterns exceeded")]
    TermBudget { budget: usize },

    #[error("enumeration of {n} variables exceeds the limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("tautological clause has no falsifying assignment")]
    TautologicalClause,

    #[error("generators do not span a totally null plane")]
    NotTotallyNull,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is not orthogonal (residual {residual:e})")]
    NotOrthogonal { residual: f64 },

    #[error("planes are not transversal: intersection dimension {dim}")]
    NotTransversal { dim: usize },

    #[error("coefficient does not fit the matrix backend")]
    CoefficientOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Resource guards, as opposed to malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::TermBudget { .. }
                | Error::ExpansionLimit { .. }
                | Error::EnumerationLimit { .. }
                | Error::TooManyVariables { .. }
        )
    }
}
