use thiserror::Error;

use crate::model::{ArticleId, Measure};

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid citation arc ({from}, {to}): {reason}")]
    InvalidArc {
        from: ArticleId,
        to: ArticleId,
        reason: &'static str,
    },
    #[error("invalid compatibility edge {{{a}, {b}}}: {reason}")]
    InvalidEdge {
        a: ArticleId,
        b: ArticleId,
        reason: &'static str,
    },
    #[error("article id {id} out of range for a universe of {n} articles ({context})")]
    OutOfRangeId {
        id: usize,
        n: usize,
        context: &'static str,
    },
    #[error("own-article set is not a subset of the universe: {0}")]
    WNotSubset(String),
    #[error("graphs disagree on the article universe ({citation} vs {compat})")]
    UniverseMismatch { citation: usize, compat: usize },
    #[error("empty part")]
    EmptyPart,
    #[error("part is not a member of the partition")]
    PartNotInPartition,
    #[error("not a partition of the own articles: {0}")]
    InvalidPartition(String),

    #[error("compatibility component of size {size} exceeds the bitmask width {cap}")]
    ComponentTooLarge { size: usize, cap: usize },
    #[error("measure {0} is not supported by this solver")]
    UnsupportedMeasure(Measure),
    #[error("compatibility graph restricted to the own articles is not a clique")]
    NotAClique,
    #[error("instance carries no merge budget")]
    MissingBudget,
    #[error("merge budgets are not supported here")]
    BudgetNotSupported,
    #[error("enumeration budget exceeded ({what} > {cap})")]
    EnumerationBudgetExceeded { what: &'static str, cap: u64 },
    #[error("instance too large for the brute-force oracle ({own} own articles, limit {limit})")]
    TooLargeForOracle { own: usize, limit: usize },
    #[error("time limit exceeded")]
    Timeout,

    #[error("given set is not a vertex cover of the citation graph")]
    NotACover,

    #[error("title missing for own article {0}")]
    MissingTitle(ArticleId),
    #[error("invalid threshold: {0}")]
    InvalidThreshold(String),

    #[error("infeasible padding: article {article} has {gadget} gadget citations but cap {cap}")]
    InfeasiblePadding {
        article: String,
        gadget: usize,
        cap: usize,
    },
    #[error("m + n = {0} is odd; duplicate the formula first")]
    OddSize(usize),
    #[error("formula too small for the strict construction: (m + n) / 2 = {0} < 18")]
    FormulaTooSmall(usize),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("graph is not partite with respect to the declared classes: {0}")]
    NotPartite(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("schema error at {path}: {message}")]
    SchemaError { path: String, message: String },
    #[error("duplicate article key {0:?}")]
    DuplicateKey(String),
    #[error("citation references unknown key {0:?}")]
    DanglingCitation(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty group")]
    EmptyGroup,
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::SchemaError {
            path: path.into(),
            message: message.into(),
        }
    }

    /// True for failures caused by resource caps rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ComponentTooLarge { .. }
                | Error::EnumerationBudgetExceeded { .. }
                | Error::TooLargeForOracle { .. }
                | Error::Timeout
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
