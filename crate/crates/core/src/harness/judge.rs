use serde::Serialize;

use crate::coherence::{
    candidate_relations, check_coherent_situation, check_common_topic, CoherenceError, CoherenceRelation, Family,
    KnowledgeBase,
};
use crate::ellipsis::{
    gapping_pivots, resolve_event_ref, resolve_gapping, resolve_vpe_semantic, resolve_vpe_syntactic, EllipsisError,
    ResolutionResult, Route,
};
use crate::grammar::{classify_form, derive, parse_tree, Derivation, FormKind, GrammarError, Lexicon};
use crate::lamcore::Term;
use crate::syntree::Supply;

use super::corpus::{DiscourseItem, GoldLabel, Link};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    NoSententialSemantics,
    FormMismatch,
    UnsuitableAntecedent,
    NoVpAntecedent,
    RemnantMismatch,
    NoSolution,
    ConstraintFailed,
    Underivable,
    MissingAntecedent,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NoSententialSemantics => "no-sentential-semantics",
            Reason::FormMismatch => "form-mismatch",
            Reason::UnsuitableAntecedent => "unsuitable-antecedent",
            Reason::NoVpAntecedent => "no-vp-antecedent",
            Reason::RemnantMismatch => "remnant-mismatch",
            Reason::NoSolution => "no-solution",
            Reason::ConstraintFailed => "constraint-failed",
            Reason::Underivable => "underivable",
            Reason::MissingAntecedent => "missing-antecedent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Felicitous,
    Infelicitous(Reason),
}

/// The judgment of one link under one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub relation: CoherenceRelation,
    pub outcome: Outcome,
    pub detail: Option<String>,
    /// The target's resolved sentence LF.
    pub lf: Option<Term>,
    pub route: Option<Route>,
    pub trace: Vec<String>,
    /// Fronting and copying operations performed while judging.
    pub reconstructions: usize,
    /// The target's derivation after resolution, when felicitous.
    pub resolved: Option<Derivation>,
}

impl Verdict {
    pub fn felicitous(&self) -> bool {
        self.outcome == Outcome::Felicitous
    }

    fn infelicitous(relation: CoherenceRelation, reason: Reason, detail: String, trace: Vec<String>) -> Verdict {
        Verdict {
            relation,
            outcome: Outcome::Infelicitous(reason),
            detail: Some(detail),
            lf: None,
            route: None,
            trace,
            reconstructions: 0,
            resolved: None,
        }
    }
}

/// Read-only inputs every judgment consults.
#[derive(Debug, Clone, Copy)]
pub struct Resources<'a> {
    pub lexicon: &'a Lexicon,
    pub kb: &'a KnowledgeBase,
}

fn ellipsis_reason(e: &EllipsisError) -> Reason {
    match e {
        EllipsisError::RemnantMismatch(_) => Reason::RemnantMismatch,
        EllipsisError::FormMismatch(_) => Reason::FormMismatch,
        EllipsisError::UnsuitableAntecedent(_) => Reason::UnsuitableAntecedent,
        EllipsisError::NoVpAntecedent(_) => Reason::NoVpAntecedent,
        EllipsisError::NoSolution(_) => Reason::NoSolution,
        EllipsisError::NoSourceSyntax | EllipsisError::MissingSemantics(_) => Reason::MissingAntecedent,
        EllipsisError::NotApplicable(_) | EllipsisError::Grammar(_) | EllipsisError::Structure(_) => {
            Reason::Underivable
        }
    }
}

fn coherence_reason(e: &CoherenceError) -> Reason {
    match e {
        CoherenceError::MissingSemantics(_) => Reason::MissingAntecedent,
        _ => Reason::Underivable,
    }
}

type Step = Result<(Derivation, Option<Route>), (Reason, String)>;

fn resolved(r: Result<ResolutionResult, EllipsisError>, target: &Derivation, trace: &mut Vec<String>) -> Step {
    match r {
        Ok(res) => {
            trace.extend(res.notes.iter().cloned());
            trace.push(format!("resolved LF {}", res.lf));
            Ok((res.derivation(target), Some(res.route)))
        }
        Err(e) => Err((ellipsis_reason(&e), e.to_string())),
    }
}

/// Judges one source/target pair under one relation.
///
/// Common Topic relations rebuild missing syntax before checking
/// parallelism. Coherent Situation relations never do: they see only the
/// sentence-level semantics, so a gapped target has nothing to offer them
/// and an elided VP must be resolved semantically.
pub fn judge_link(
    source: &Derivation,
    target: &Derivation,
    rel: CoherenceRelation,
    res: Resources<'_>,
    intended: Option<&str>,
    supply: &mut Supply,
) -> Verdict {
    let form = classify_form(&target.tree).kind;
    let before = supply.transforms();
    let mut trace = vec![format!("target form {form:?}, relation {rel} ({:?})", rel.family())];
    let (lexicon, kb) = (res.lexicon, res.kb);

    let step: Step = match rel.family() {
        Family::CommonTopic => {
            let rebuilt = match form {
                FormKind::Gapping | FormKind::Stripping => {
                    let pivots = gapping_pivots(&target.tree);
                    trace.push(format!("reconstructing over remnants {pivots:?}"));
                    resolved(resolve_gapping(source, target, &pivots, lexicon, supply), target, &mut trace)
                }
                FormKind::Vpe => {
                    trace.push("copying the source VP into the elided VP".into());
                    resolved(resolve_vpe_syntactic(source, target, lexicon, intended, supply), target, &mut trace)
                }
                FormKind::EventRef => {
                    resolved(resolve_event_ref(source, target, kb, lexicon, intended), target, &mut trace)
                }
                FormKind::Full => Ok((target.clone(), None)),
            };
            rebuilt.and_then(|(d, route)| match check_common_topic(rel, source, &d, kb, lexicon) {
                Ok(ct) => {
                    trace.push(format!("p0 = {}, p1 = {}", ct.p0, ct.p1));
                    if let Some(g) = &ct.generalized {
                        trace.push(format!("predicates generalized to {g}"));
                    }
                    for p in &ct.pairs {
                        trace.push(format!(
                            "pair ({}, {}) identical={} similar={} dissimilar={} instance={} same={}",
                            p.source, p.target, p.identical, p.similar, p.dissimilar, p.instance, p.same
                        ));
                    }
                    match ct.reason {
                        None => Ok((d, route)),
                        Some(r) => Err((Reason::ConstraintFailed, r)),
                    }
                }
                Err(e) => Err((coherence_reason(&e), e.to_string())),
            })
        }
        Family::CoherentSituation => {
            let resolved_target = match form {
                FormKind::Gapping | FormKind::Stripping => Err((
                    Reason::NoSententialSemantics,
                    "a gapped clause has no sentence-level semantics and no reconstruction is triggered".to_string(),
                )),
                FormKind::Vpe => {
                    resolved(resolve_vpe_semantic(source, target, kb, lexicon, intended), target, &mut trace)
                }
                FormKind::EventRef => {
                    resolved(resolve_event_ref(source, target, kb, lexicon, intended), target, &mut trace)
                }
                FormKind::Full => Ok((target.clone(), None)),
            };
            resolved_target.and_then(|(d, route)| {
                match check_coherent_situation(rel, source.closed_lf(), d.closed_lf(), kb) {
                    Ok(cs) => {
                        trace.push(format!("presupposition {}", cs.presupposition));
                        trace.extend(cs.chain.iter().map(|s| format!("  via {s}")));
                        match cs.reason {
                            None => Ok((d, route)),
                            Some(r) => Err((Reason::ConstraintFailed, r)),
                        }
                    }
                    Err(e) => Err((coherence_reason(&e), e.to_string())),
                }
            })
        }
    };

    let reconstructions = supply.transforms() - before;
    debug_assert!(
        rel.family() == Family::CommonTopic || reconstructions == 0,
        "reconstruction under a Coherent Situation relation"
    );
    match step {
        Ok((d, route)) => Verdict {
            relation: rel,
            outcome: Outcome::Felicitous,
            detail: None,
            lf: d.lf.clone(),
            route,
            trace,
            reconstructions,
            resolved: Some(d),
        },
        Err((reason, detail)) => {
            trace.push(format!("infelicitous: {detail}"));
            Verdict { reconstructions, ..Verdict::infelicitous(rel, reason, detail, trace) }
        }
    }
}

/// One gold label compared with the system's judgment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldCheck {
    pub link: usize,
    pub reading: String,
    pub relations: Vec<CoherenceRelation>,
    pub gold: GoldLabel,
    pub felicitous: bool,
}

impl GoldCheck {
    pub fn matched(&self) -> bool {
        self.gold.felicitous() == self.felicitous
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkJudgment {
    pub link: Link,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemJudgment {
    pub id: String,
    pub links: Vec<LinkJudgment>,
    pub checks: Vec<GoldCheck>,
    /// Form of each clause as written.
    pub forms: Vec<FormKind>,
}

impl ItemJudgment {
    pub fn verdicts(&self) -> impl Iterator<Item = (&Link, &Verdict)> {
        self.links.iter().flat_map(|l| l.verdicts.iter().map(move |v| (&l.link, v)))
    }
}

/// Relations to try for a link: the union over its annotated readings.
pub fn link_relations(link: &Link) -> Result<Vec<CoherenceRelation>, CoherenceError> {
    let mut out = Vec::new();
    for r in &link.readings {
        for rel in candidate_relations(&link.conj, Link::reading_filter(r))? {
            if !out.contains(&rel) {
                out.push(rel);
            }
        }
    }
    Ok(out)
}

/// Judges every link of an item under each of its candidate relations.
///
/// A later link whose source clause was the target of an earlier
/// felicitous link sees that clause in its resolved form, including any
/// rebuilt syntax.
pub fn judge_item(item: &DiscourseItem, res: Resources<'_>) -> Result<ItemJudgment, HarnessError> {
    let input = |message: String| HarnessError::Input { item: item.id.clone(), message };
    let mut raw: Vec<Result<Derivation, GrammarError>> = Vec::new();
    let mut forms = Vec::new();
    for (i, text) in item.clauses.iter().enumerate() {
        let tree = parse_tree(text, res.lexicon).map_err(|e| input(format!("clause {i}: {e}")))?;
        forms.push(classify_form(&tree).kind);
        raw.push(derive(&tree, res.lexicon));
    }
    let mut resolved: Vec<Option<Derivation>> = vec![None; raw.len()];
    let mut links = Vec::new();
    let mut checks = Vec::new();

    for (li, link) in item.links.iter().enumerate() {
        let relations = link_relations(link).map_err(|e| input(format!("link {li}: {e}")))?;
        let source = match &resolved[link.from] {
            Some(d) => Ok(d.clone()),
            None => raw[link.from].clone(),
        };
        let mut verdicts = Vec::new();
        for &rel in &relations {
            let v = match (&source, &raw[link.to]) {
                (Ok(s), Ok(t)) => {
                    let mut supply = Supply::above([&s.tree, &t.tree]);
                    judge_link(s, t, rel, res, link.intended.as_deref(), &mut supply)
                }
                (Err(e), _) => Verdict::infelicitous(
                    rel,
                    Reason::Underivable,
                    format!("source clause {}: {e}", link.from),
                    vec![format!("source clause {} does not derive: {e}", link.from)],
                ),
                (_, Err(e)) => Verdict::infelicitous(
                    rel,
                    Reason::Underivable,
                    format!("target clause {}: {e}", link.to),
                    vec![format!("target clause {} does not derive: {e}", link.to)],
                ),
            };
            if v.felicitous() && resolved[link.to].is_none() {
                resolved[link.to] = v.resolved.clone();
            }
            verdicts.push(v);
        }
        for reading in &link.readings {
            let rels = candidate_relations(&link.conj, Link::reading_filter(reading))
                .map_err(|e| input(format!("link {li}: {e}")))?;
            let felicitous = verdicts.iter().any(|v| rels.contains(&v.relation) && v.felicitous());
            checks.push(GoldCheck {
                link: li,
                reading: reading.clone(),
                relations: rels,
                gold: link.gold[reading],
                felicitous,
            });
        }
        links.push(LinkJudgment { link: link.clone(), verdicts });
    }
    Ok(ItemJudgment { id: item.id.clone(), links, checks, forms })
}
