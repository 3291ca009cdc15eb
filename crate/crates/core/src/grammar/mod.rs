//! Lexicon, tree ingestion, compositional derivation and form
//! classification.

mod classify;
mod derive;
mod lexicon;

use thiserror::Error;

use crate::syntree::{AssumptionId, Category, SyntreeError};

pub use classify::{classify_form, FormKind, FormProfile};
pub use derive::{derive, node_semantics, parse_tree, Derivation, IMPLICIT_AGENT};
pub use lexicon::{LexEntry, LexSem, Lexicon};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GrammarError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("lexicon line {line}: {message}")]
    Lexicon { line: usize, message: String },
    #[error(transparent)]
    Syntax(#[from] SyntreeError),
    #[error("unknown word '{word}' as {cat}")]
    UnknownWord { word: String, cat: Category },
    #[error("type clash at {node}: {detail}")]
    TypeClash { node: String, detail: String },
    #[error("event pronoun '{0}' is not the object of main-verb do")]
    UnlicensedEventPronoun(String),
    #[error("pronoun '{0}' has no ref feature")]
    MissingReferent(String),
    #[error("anaphoric word '{0}' has no anaphor id")]
    MissingAnaphor(String),
    #[error("trace {0} has no binder")]
    UnboundTrace(AssumptionId),
    #[error("empty {0} node has no interpretation")]
    UnsupportedEmpty(Category),
}
