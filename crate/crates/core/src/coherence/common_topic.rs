use serde::Serialize;

use crate::grammar::{node_semantics, Derivation, Lexicon};
use crate::lamcore::{abstract_over, alpha_eq, SemType, Term};
use crate::syntree::{align_parallel, Category, SynNode};

use super::{CoherenceError, CoherenceRelation, Family, KnowledgeBase};

/// How one aligned pair of arguments fares against the knowledge base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub source: String,
    pub target: String,
    pub identical: bool,
    pub similar: bool,
    pub dissimilar: bool,
    /// The target is a member or subset of the source.
    pub instance: bool,
    pub same: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtResult {
    pub satisfied: bool,
    pub pairs: Vec<PairVerdict>,
    pub p0: String,
    pub p1: String,
    /// The common ancestor the two predicates were generalized to, if
    /// they differed.
    pub generalized: Option<String>,
    pub reason: Option<String>,
}

/// Strips outer negations: returns the core proposition and whether an
/// even number of negations was removed.
pub fn polarity(lf: &Term) -> (&Term, bool) {
    let mut t = lf;
    let mut positive = true;
    while let Term::App(f, a) = t {
        if f.const_name() == Some("not") && a.ty() == SemType::Truth {
            t = a;
            positive = !positive;
        } else {
            break;
        }
    }
    (t, positive)
}

fn entity(t: &Term) -> String {
    t.const_name().map_or_else(|| t.to_string(), str::to_string)
}

fn head(p: &Term) -> Option<(String, SemType)> {
    let mut body = p;
    while let Term::Abs { body: b, .. } = body {
        body = b;
    }
    match body.spine().0 {
        Term::Const { name, ty } => Some((name.clone(), ty.clone())),
        _ => None,
    }
}

/// Semantics of aligned constituents that can serve as parallel
/// arguments. Verbs and auxiliaries supply the predicates instead, and
/// constituents without closed semantics are skipped. Leftover
/// constituents the category alignment could not pair are matched by type.
fn parallel_arguments(source: &SynNode, target: &SynNode, lexicon: &Lexicon) -> Vec<(Term, Term)> {
    let alignment = align_parallel(source, target);
    let sem = |n: &SynNode| {
        if matches!(n.cat, Category::V | Category::AUX) || n.empty {
            None
        } else {
            node_semantics(n, lexicon)
        }
    };
    let mut out = Vec::new();
    for (a, b) in &alignment.pairs {
        if let (Some(x), Some(y)) = (sem(a), sem(b)) {
            if x.ty() == y.ty() {
                out.push((x, y));
            }
        }
    }
    let mut right: Vec<Option<Term>> = alignment.unpaired_target.iter().filter_map(sem).map(Some).collect();
    for x in alignment.unpaired_source.iter().filter_map(sem) {
        if let Some(slot) = right.iter_mut().find(|y| y.as_ref().is_some_and(|y| y.ty() == x.ty())) {
            out.push((x, slot.take().expect("slot was checked")));
        }
    }
    out
}

/// Whether the two open propositions coincide, directly or after
/// generalizing their head predicates to a common ancestor.
fn same_property(p0: &Term, p1: &Term, kb: &KnowledgeBase) -> (bool, Option<String>) {
    if alpha_eq(p0, p1) {
        return (true, None);
    }
    let (Some((h0, t0)), Some((h1, t1))) = (head(p0), head(p1)) else { return (false, None) };
    if h0 == h1 {
        return (false, None);
    }
    let Some(g) = kb.generalize(&h0, &h1) else { return (false, None) };
    let q0 = p0.replace_const(&h0, &Term::constant(g.clone(), t0));
    let q1 = p1.replace_const(&h1, &Term::constant(g.clone(), t1));
    (alpha_eq(&q0, &q1), Some(g))
}

fn antonym_property(p0: &Term, p1: &Term, kb: &KnowledgeBase) -> bool {
    let (Some((h0, _)), Some((h1, t1))) = (head(p0), head(p1)) else { return false };
    kb.antonyms(&h0, &h1) && alpha_eq(&p0.replace_const(&h0, &Term::constant(h1, t1)), p1)
}

/// Checks a Common Topic relation between two clauses that both have
/// sentence-level syntax and semantics.
pub fn check_common_topic(
    rel: CoherenceRelation,
    source: &Derivation,
    target: &Derivation,
    kb: &KnowledgeBase,
    lexicon: &Lexicon,
) -> Result<CtResult, CoherenceError> {
    if rel.family() != Family::CommonTopic {
        return Err(CoherenceError::WrongFamily { relation: rel, expected: Family::CommonTopic });
    }
    let lf0 = source.closed_lf().ok_or(CoherenceError::MissingSemantics("source clause"))?;
    let lf1 = target.closed_lf().ok_or(CoherenceError::MissingSemantics("target clause"))?;
    let args = parallel_arguments(&source.tree, &target.tree, lexicon);
    let (core0, pos0) = polarity(lf0);
    let (core1, pos1) = polarity(lf1);
    let pivots0: Vec<Term> = args.iter().map(|(a, _)| a.clone()).collect();
    let pivots1: Vec<Term> = args.iter().map(|(_, b)| b.clone()).collect();
    let p0 = abstract_over(core0, &pivots0);
    let p1 = abstract_over(core1, &pivots1);
    let (same_p, generalized) = same_property(&p0, &p1, kb);

    let pairs: Vec<PairVerdict> = args
        .iter()
        .map(|(a, b)| {
            let (ea, eb) = (entity(a), entity(b));
            PairVerdict {
                identical: alpha_eq(a, b),
                similar: kb.similar(&ea, &eb),
                dissimilar: kb.dissimilar(&ea, &eb),
                instance: kb.member(&eb, &ea) || kb.subset(&eb, &ea),
                same: kb.same(&ea, &eb),
                source: a.to_string(),
                target: b.to_string(),
            }
        })
        .collect();
    let alike = pairs.iter().all(|p| p.identical || p.similar);
    let show = |t: &Term, pos: bool| if pos { t.to_string() } else { format!("~{t}") };

    let outcome: Result<(), String> = match rel {
        CoherenceRelation::Parallel => {
            if pos0 != pos1 || !same_p {
                Err("the clauses do not share an open proposition".into())
            } else if !alike {
                Err("some parallel pair is not similar".into())
            } else {
                Ok(())
            }
        }
        CoherenceRelation::Contrast => {
            let opposed = (pos0 != pos1 && same_p) || (pos0 == pos1 && antonym_property(&p0, &p1, kb));
            let differing = pos0 == pos1 && same_p && pairs.iter().any(|p| p.dissimilar);
            if (opposed && alike) || differing {
                Ok(())
            } else {
                Err("neither opposed propositions over similar arguments nor a dissimilar pair".into())
            }
        }
        CoherenceRelation::Exemplification => {
            if pos0 != pos1 || !same_p {
                Err("the clauses do not share an open proposition".into())
            } else if !pairs.iter().all(|p| p.identical || p.instance) {
                Err("some target argument is not an instance of its source counterpart".into())
            } else if !pairs.iter().any(|p| p.instance) {
                Err("no target argument is a proper instance".into())
            } else {
                Ok(())
            }
        }
        CoherenceRelation::Elaboration => {
            if pos0 != pos1 || !same_p {
                Err("the clauses do not share an open proposition".into())
            } else if !pairs.iter().all(|p| p.same) {
                Err("some parallel pair is not identical".into())
            } else {
                Ok(())
            }
        }
        _ => unreachable!("family checked above"),
    };
    Ok(CtResult {
        satisfied: outcome.is_ok(),
        pairs,
        p0: show(&p0, pos0),
        p1: show(&p1, pos1),
        generalized,
        reason: outcome.err(),
    })
}
