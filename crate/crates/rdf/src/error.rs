use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RdfError {
    #[error("syntax error at line {line}, column {column}: {message} (near `{excerpt}`)")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
        excerpt: String,
    },

    #[error("undefined prefix `{prefix}:` at line {line}, column {column}")]
    UndefinedPrefix {
        prefix: String,
        line: usize,
        column: usize,
    },

    #[error("invalid IRI `{0}`: must be non-empty and contain no whitespace")]
    InvalidIri(String),

    #[error("invalid language tag `{0}`")]
    InvalidLanguageTag(String),
}
