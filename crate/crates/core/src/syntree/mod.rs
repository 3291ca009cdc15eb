//! Labeled syntax trees, their bracketed text format, and the structural
//! transforms used to rebuild elided material.

mod format;
mod node;
mod transform;

use thiserror::Error;

pub use format::parse_bracketed;
pub use node::{AssumptionId, Category, Features, SynNode, VForm, Voice};
pub use transform::{
    align_parallel, clause_roles, copy_embedded_sentence, copy_vp, front_parallel, remnants, Alignment,
    LemmaTable, Supply,
};
pub(crate) use transform::fronted_parts;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SyntreeError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown category '{0}'")]
    UnknownCategory(String),
    #[error("bad feature '{0}'")]
    BadFeature(String),
    #[error("no {0} constituent to front")]
    NoMatch(Category),
    #[error("not a full clause: {0}")]
    NotFullClause(String),
    #[error("source clause has not been fronted: {0}")]
    NotFronted(String),
    #[error("target clause is not gapped or stripped: {0}")]
    NotGapped(String),
    #[error("remnants {found:?} do not match fronted constituents {expected:?}")]
    RemnantMismatch { expected: Vec<Category>, found: Vec<Category> },
    #[error("VP {vp} cannot appear under auxiliary '{aux}'")]
    FormMismatch { aux: String, vp: String },
    #[error("VP contains a trace bound outside it: {0}")]
    UnsuitableAntecedent(String),
    #[error("not an overt VP: {0}")]
    NotAVp(String),
}
