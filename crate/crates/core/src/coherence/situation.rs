use serde::Serialize;

use crate::lamcore::{SemType, Term};

use super::common_topic::polarity;
use super::{CoherenceError, CoherenceRelation, Family, KnowledgeBase, Literal, Step};

/// Longest chain of plausible edges abduction may assume.
pub const ABDUCTION_DEPTH: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsResult {
    pub satisfied: bool,
    /// The implication that had to be abduced, e.g. `politician -> ~honest`.
    pub presupposition: String,
    pub chain: Vec<String>,
    pub reason: Option<String>,
}

/// The head predicate of a sentence LF with its non-entity constant
/// arguments, and the LF's polarity: `not(become(upset)(bill))` gives
/// `("become(upset)", false)`.
pub fn predicate_literal(lf: &Term) -> Literal {
    let (core, positive) = polarity(lf);
    let (head, args) = core.spine();
    let mut key = head.const_name().map_or_else(|| head.to_string(), str::to_string);
    for a in args {
        if let Term::Const { name, ty } = a {
            if *ty != SemType::Entity {
                key.push_str(&format!("({name})"));
            }
        }
    }
    (key, positive)
}

fn show(l: &Literal) -> String {
    if l.1 {
        l.0.clone()
    } else {
        format!("~{}", l.0)
    }
}

fn negate(l: &Literal) -> Literal {
    (l.0.clone(), !l.1)
}

/// Checks a Coherent Situation relation from the two sentence LFs alone.
/// A is the first clause's meaning and B the second's.
pub fn check_coherent_situation(
    rel: CoherenceRelation,
    source_lf: Option<&Term>,
    target_lf: Option<&Term>,
    kb: &KnowledgeBase,
) -> Result<CsResult, CoherenceError> {
    if rel.family() != Family::CoherentSituation {
        return Err(CoherenceError::WrongFamily { relation: rel, expected: Family::CoherentSituation });
    }
    let a = predicate_literal(source_lf.ok_or(CoherenceError::MissingSemantics("source clause"))?);
    let b = predicate_literal(target_lf.ok_or(CoherenceError::MissingSemantics("target clause"))?);
    let (from, to) = match rel {
        CoherenceRelation::Result => (a, b),
        CoherenceRelation::Explanation => (b, a),
        CoherenceRelation::ViolatedExpectation => (a, negate(&b)),
        CoherenceRelation::DenialOfPreventer => (b, negate(&a)),
        _ => unreachable!("family checked above"),
    };
    let presupposition = format!("{} -> {}", show(&from), show(&to));
    Ok(match kb.implication_chain(&from, &to, ABDUCTION_DEPTH) {
        Some(chain) => CsResult {
            satisfied: true,
            presupposition,
            chain: chain.iter().map(Step::to_string).collect(),
            reason: None,
        },
        None => CsResult {
            satisfied: false,
            reason: Some(format!("cannot abduce {presupposition}")),
            presupposition,
            chain: Vec::new(),
        },
    })
}
