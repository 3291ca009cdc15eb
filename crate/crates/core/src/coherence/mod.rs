//! Coherence relations and the two inference procedures that establish
//! them: parallelism checks over aligned constituents, and abduction of
//! an implication between whole-sentence meanings.

mod common_topic;
mod kb;
mod situation;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use common_topic::{check_common_topic, polarity, CtResult, PairVerdict};
pub use kb::{KnowledgeBase, Literal, Step, GENERALIZE_DEPTH};
pub use situation::{check_coherent_situation, predicate_literal, CsResult, ABDUCTION_DEPTH};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    CommonTopic,
    CoherentSituation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoherenceRelation {
    Parallel,
    Contrast,
    Exemplification,
    Elaboration,
    Result,
    Explanation,
    ViolatedExpectation,
    DenialOfPreventer,
}

impl CoherenceRelation {
    pub const ALL: [CoherenceRelation; 8] = [
        CoherenceRelation::Parallel,
        CoherenceRelation::Contrast,
        CoherenceRelation::Exemplification,
        CoherenceRelation::Elaboration,
        CoherenceRelation::Result,
        CoherenceRelation::Explanation,
        CoherenceRelation::ViolatedExpectation,
        CoherenceRelation::DenialOfPreventer,
    ];

    pub fn family(self) -> Family {
        use CoherenceRelation::*;
        match self {
            Parallel | Contrast | Exemplification | Elaboration => Family::CommonTopic,
            Result | Explanation | ViolatedExpectation | DenialOfPreventer => Family::CoherentSituation,
        }
    }

    /// The constraint the relation imposes, in the notation of the checkers.
    pub fn schema(self) -> &'static str {
        use CoherenceRelation::*;
        match self {
            Parallel => "p0 = p1, a_i similar to b_i",
            Contrast => "p0 = ~p1 with a_i similar to b_i, or p0 = p1 with some a_i dissimilar to b_i",
            Exemplification => "p0 = p1, b_i member or subset of a_i",
            Elaboration => "p0 = p1, a_i = b_i",
            Result => "A -> B",
            Explanation => "B -> A",
            ViolatedExpectation => "A -> ~B",
            DenialOfPreventer => "B -> ~A",
        }
    }

    pub fn name(self) -> &'static str {
        use CoherenceRelation::*;
        match self {
            Parallel => "Parallel",
            Contrast => "Contrast",
            Exemplification => "Exemplification",
            Elaboration => "Elaboration",
            Result => "Result",
            Explanation => "Explanation",
            ViolatedExpectation => "ViolatedExpectation",
            DenialOfPreventer => "DenialOfPreventer",
        }
    }
}

impl fmt::Display for CoherenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoherenceRelation {
    type Err = CoherenceError;

    /// Accepts `ViolatedExpectation`, `violated-expectation` and similar.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_alphanumeric()).collect::<String>().to_lowercase();
        CoherenceRelation::ALL
            .into_iter()
            .find(|r| r.name().to_lowercase() == key)
            .ok_or_else(|| CoherenceError::UnknownRelation(s.to_string()))
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoherenceError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("knowledge base line {line}: {message}")]
    Kb { line: usize, message: String },
    #[error("unknown conjunction '{0}'")]
    UnknownConjunction(String),
    #[error("unknown relation '{0}'")]
    UnknownRelation(String),
    #[error("reading '{reading}' is not available for '{conj}'")]
    UnknownReading { conj: String, reading: String },
    #[error("{0} has no sentence-level semantics")]
    MissingSemantics(&'static str),
    #[error("{relation} is not a {expected:?} relation")]
    WrongFamily { relation: CoherenceRelation, expected: Family },
}

/// Relations a conjunction can signal. `reading` narrows the set:
/// `symmetric` and `asymmetric` select the parallel and causal senses, and
/// a relation name pins that relation.
pub fn candidate_relations(conj: &str, reading: Option<&str>) -> Result<Vec<CoherenceRelation>, CoherenceError> {
    use CoherenceRelation::*;
    let normalized = conj.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase();
    let (all, symmetric, asymmetric): (Vec<CoherenceRelation>, Option<CoherenceRelation>, Option<CoherenceRelation>) =
        match normalized.as_str() {
            "and" => (vec![Parallel, Result], Some(Parallel), Some(Result)),
            "but" => (vec![Contrast, ViolatedExpectation], Some(Contrast), Some(ViolatedExpectation)),
            "because" => (vec![Explanation], None, None),
            "even though" | "although" | "despite" | "despite the fact that" => (vec![DenialOfPreventer], None, None),
            "therefore" | "and therefore" | "and as a result" => (vec![Result], None, None),
            "for example" | "for instance" => (vec![Exemplification], None, None),
            "in other words" => (vec![Elaboration], None, None),
            _ => return Err(CoherenceError::UnknownConjunction(conj.to_string())),
        };
    let Some(reading) = reading else { return Ok(all) };
    let unknown = || CoherenceError::UnknownReading { conj: conj.to_string(), reading: reading.to_string() };
    let pinned = match reading {
        "symmetric" => symmetric,
        "asymmetric" => asymmetric,
        other => other.parse::<CoherenceRelation>().ok().filter(|r| all.contains(r)),
    };
    pinned.map(|r| vec![r]).ok_or_else(unknown)
}
