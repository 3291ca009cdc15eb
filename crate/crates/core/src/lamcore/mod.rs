//! Typed lambda terms: the semantic representations that syntax trees
//! compose into, plus the operations that ellipsis resolution needs on them.

mod reduce;
mod solve;
mod syntax;
mod term;
mod types;

use thiserror::Error;

pub use reduce::{alpha_eq, beta_normalize, is_beta_normal};
pub use solve::{abstract_over, reapply, solve_anaphor};
pub use syntax::{is_constant_name, parse_term, parse_type, Signature};
pub use term::{Assumption, Flavor, Term};
pub use types::SemType;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LambdaError {
    #[error("type mismatch applying {function}: expected {expected}, found {found}")]
    TypeMismatch { function: String, expected: String, found: String },
    #[error("term is not closed: {0}")]
    NotClosed(String),
    #[error("not a variable: {0}")]
    NotAVariable(String),
    #[error("unknown constant '{0}'")]
    UnknownConstant(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}
