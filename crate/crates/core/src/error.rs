use std::fmt;

/// A position in a source text, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{span}: {message}")]
    Parse { span: Span, message: String },

    #[error("undeclared predicate `{0}`")]
    UndeclaredPredicate(String),

    #[error("predicate `{name}` has arity {declared}, used with {used} argument(s)")]
    ArityMismatch {
        name: String,
        declared: usize,
        used: usize,
    },

    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("the universe must not be empty")]
    EmptyUniverse,

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("formula is not ground: {0}")]
    NotGround(String),

    #[error("cannot classify rule with head `{head}`: {reason}")]
    Unclassifiable { head: String, reason: String },

    #[error("rule is not classified; normalize the theory first")]
    Unclassified,

    #[error("malformed program rule: {0}")]
    MalformedRule(String),

    #[error("theory is not definite: {0}")]
    NotDefinite(String),

    #[error("ground atom {0} is not in the interpretation domain")]
    UnknownAtom(String),

    #[error("{atoms} ground atoms to enumerate exceeds the limit of {limit}")]
    Guardrail { atoms: usize, limit: usize },

    #[error("rule cannot be emitted without grounding: {0}")]
    NotEmittable(String),

    #[error("solver: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(span: Span, message: impl Into<String>) -> Self {
        Error::Parse {
            span,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
