//! The corpus model, the judgment controller and reporting.

mod corpus;
mod judge;
mod report;

use thiserror::Error;

use crate::coherence::CoherenceError;
use crate::grammar::GrammarError;

pub use corpus::{load_corpus, parse_corpus, DiscourseItem, GoldLabel, Link, ANY_READING};
pub use judge::{
    judge_item, judge_link, link_relations, GoldCheck, ItemJudgment, LinkJudgment, Outcome, Reason, Resources, Verdict,
};
pub use report::{judge_corpus, run_corpus, Format, Options, Report};

/// Problems with the inputs themselves, as opposed to infelicity.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error("item {item}: {message}")]
    Input { item: String, message: String },
    #[error(transparent)]
    Lexicon(#[from] GrammarError),
    #[error(transparent)]
    Kb(#[from] CoherenceError),
}
