use thiserror::Error;

use crate::markup::MarkupError;
use crate::schema::ValidationReport;
use crate::vocab::Mood;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Markup(#[from] MarkupError),

    #[error("document does not match the schema ({} issue(s)): {}", .0.issues.len(), .0.summary())]
    Invalid(ValidationReport),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("unsupported complexity {0:?}")]
    UnsupportedComplexity(String),

    #[error("sentence has no verb phrases to combine")]
    EmptyVerbPhrases,

    #[error("unknown noun clause type {0:?}")]
    UnknownClauseType(String),

    #[error("noun clause needs its host sentence to infer the implied text")]
    MissingParent,

    #[error("modified noun phrase already set on this relative clause")]
    AlreadySet,

    #[error("relative clause has no modified noun phrase")]
    MissingModifiedNp,

    #[error("mood {0} is realised as a phrase, not as a basic sentence")]
    UnrealizableMood(Mood),

    #[error("what-exclamation needs an object phrase")]
    MissingObject,

    #[error("how-exclamation needs a predicate adjective")]
    MissingPredicateAdjective,
}

impl Error {
    /// Stable name of the error kind; markup errors report their own kind
    /// and schema violations their first issue code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Markup(e) => e.code(),
            Error::Invalid(report) => report.issues.first().map_or("Invalid", |i| i.code.as_str()),
            Error::Schema { .. } => "SchemaError",
            Error::UnsupportedComplexity(_) => "UnsupportedComplexity",
            Error::EmptyVerbPhrases => "EmptyVerbPhrases",
            Error::UnknownClauseType(_) => "UnknownClauseType",
            Error::MissingParent => "MissingParent",
            Error::AlreadySet => "AlreadySet",
            Error::MissingModifiedNp => "MissingModifiedNp",
            Error::UnrealizableMood(_) => "UnrealizableMood",
            Error::MissingObject => "MissingObject",
            Error::MissingPredicateAdjective => "MissingPredicateAdjective",
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
