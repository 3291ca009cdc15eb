//! Resolution of gapped, stripped and elided clauses and of event
//! pronouns, either by copying source syntax or by solving for the
//! anaphoric property in the semantics.

use serde::Serialize;
use thiserror::Error;

use crate::coherence::{polarity, KnowledgeBase};
use crate::grammar::{derive, node_semantics, Derivation, GrammarError, LexSem, Lexicon};
use crate::lamcore::{beta_normalize, solve_anaphor, Assumption, SemType, Term};
use crate::syntree::{
    copy_embedded_sentence, copy_vp, front_parallel, remnants, Category, LemmaTable, Supply, SynNode, SyntreeError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    SyntacticCopy,
    SemanticAnaphora,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionResult {
    pub lf: Term,
    pub route: Route,
    /// The rebuilt target tree; present only for syntactic copies.
    pub tree: Option<SynNode>,
    pub notes: Vec<String>,
}

impl ResolutionResult {
    /// The target's derivation after resolution.
    pub fn derivation(&self, target: &Derivation) -> Derivation {
        Derivation {
            tree: self.tree.clone().unwrap_or_else(|| target.tree.clone()),
            lf: Some(self.lf.clone()),
            pending: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EllipsisError {
    #[error("remnants do not match the source: {0}")]
    RemnantMismatch(String),
    #[error("form mismatch: {0}")]
    FormMismatch(String),
    #[error("unsuitable antecedent: {0}")]
    UnsuitableAntecedent(String),
    #[error("no VP antecedent: {0}")]
    NoVpAntecedent(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("source clause has no syntax to copy")]
    NoSourceSyntax,
    #[error("{0} has no sentence-level semantics")]
    MissingSemantics(&'static str),
    #[error("target is not of the expected form: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Structure(SyntreeError),
}

impl From<SyntreeError> for EllipsisError {
    fn from(e: SyntreeError) -> Self {
        match e {
            SyntreeError::RemnantMismatch { .. } | SyntreeError::NoMatch(_) => {
                EllipsisError::RemnantMismatch(e.to_string())
            }
            SyntreeError::FormMismatch { .. } => EllipsisError::FormMismatch(e.to_string()),
            SyntreeError::UnsuitableAntecedent(_) => EllipsisError::UnsuitableAntecedent(e.to_string()),
            SyntreeError::NotAVp(_) => EllipsisError::NoVpAntecedent(e.to_string()),
            other => EllipsisError::Structure(other),
        }
    }
}

/// Categories of a gapped or stripped clause's remnants, in order.
pub fn gapping_pivots(target: &SynNode) -> Vec<Category> {
    remnants(target).iter().map(|n| n.cat).collect()
}

fn closed_result(tree: SynNode, lexicon: &Lexicon, notes: Vec<String>) -> Result<ResolutionResult, EllipsisError> {
    let d = derive(&tree, lexicon)?;
    let lf = d
        .closed_lf()
        .cloned()
        .ok_or_else(|| EllipsisError::NoSolution(format!("rebuilt clause is still open: {tree}")))?;
    Ok(ResolutionResult { lf, route: Route::SyntacticCopy, tree: Some(tree), notes })
}

/// Rebuilds a gapped or stripped target by fronting the source over
/// `pivots` and copying its embedded sentence under the target.
pub fn resolve_gapping(
    source: &Derivation,
    target: &Derivation,
    pivots: &[Category],
    lexicon: &Lexicon,
    supply: &mut Supply,
) -> Result<ResolutionResult, EllipsisError> {
    if !target.tree.is_gapped() {
        return Err(EllipsisError::NotApplicable(target.tree.to_string()));
    }
    if source.tree.is_gapped() && source.lf.is_none() {
        return Err(EllipsisError::NoSourceSyntax);
    }
    let fronted = front_parallel(&source.tree, pivots, supply)?;
    let rebuilt = copy_embedded_sentence(&fronted, &target.tree, supply)?;
    let notes = vec![format!("fronted source: {fronted}"), format!("rebuilt target: {rebuilt}")];
    closed_result(rebuilt, lexicon, notes)
}

/// Path to the target's elided VP and the auxiliary stranded beside it.
fn elision_site(target: &SynNode) -> Option<(Vec<usize>, &SynNode)> {
    let path = target.find_path(&|n: &SynNode| n.cat == Category::VP && n.empty && n.anaphor.is_some())?;
    let parent = target.get(&path[..path.len() - 1])?;
    let aux = parent.child_leaf(Category::AUX)?;
    Some((path, aux))
}

/// Constant heading the semantics of a VP's verb.
fn vp_head(vp: &SynNode, lexicon: &Lexicon) -> Option<String> {
    let v = vp.nodes().into_iter().find(|n| n.cat == Category::V && n.is_leaf())?;
    match &lexicon.lookup(v.word.as_deref()?, Category::V)?.sem {
        LexSem::Term(t) => property_head(t),
        _ => None,
    }
}

/// Head constant of a property or proposition, looking through binders
/// and negation.
pub fn property_head(t: &Term) -> Option<String> {
    let mut body = t;
    while let Term::Abs { body: b, .. } = body {
        body = b;
    }
    polarity(body).0.spine().0.const_name().map(str::to_string)
}

/// Copies the source's main VP into the target's elided VP.
///
/// `intended` names the head predicate the elided VP is understood to
/// have; a copy with a different head does not count as an antecedent.
pub fn resolve_vpe_syntactic(
    source: &Derivation,
    target: &Derivation,
    lexicon: &Lexicon,
    intended: Option<&str>,
    supply: &mut Supply,
) -> Result<ResolutionResult, EllipsisError> {
    let (path, aux) = elision_site(&target.tree).ok_or_else(|| EllipsisError::NotApplicable(target.tree.to_string()))?;
    let source_vp = source
        .tree
        .main_vp()
        .ok_or_else(|| EllipsisError::NoVpAntecedent(format!("no VP in {}", source.tree)))?;
    let copy = copy_vp(source_vp, aux, lexicon, supply)?;
    if let Some(want) = intended {
        let got = vp_head(&copy, lexicon);
        if got.as_deref() != Some(want) {
            return Err(EllipsisError::NoVpAntecedent(format!(
                "copied VP denotes {}, not {want}",
                got.unwrap_or_else(|| "nothing".into())
            )));
        }
    }
    let mut rebuilt = target.tree.clone();
    *rebuilt.get_mut(&path).expect("path found above") = copy.clone();
    let notes = vec![format!("copied VP: {copy}"), format!("rebuilt target: {rebuilt}")];
    closed_result(rebuilt, lexicon, notes)
}

/// The clause's logical subject: the outermost argument of its predicate.
fn logical_subject(core: &Term) -> Option<Term> {
    let (_, args) = core.spine();
    args.last().filter(|a| a.ty() == SemType::Entity && a.is_closed()).map(|a| (*a).clone())
}

/// Whether the clause's own VP chain (not embedded clauses) is passive.
fn clause_is_passive(tree: &SynNode) -> bool {
    let mut vp = tree.main_vp();
    while let Some(v) = vp {
        if v.is_passive() {
            return true;
        }
        vp = v.children.iter().find(|c| c.cat == Category::VP && !c.empty);
    }
    false
}

fn main_verb(tree: &SynNode) -> Option<&SynNode> {
    let mut vp = tree.main_vp();
    while let Some(v) = vp {
        if let Some(leaf) = v.child_leaf(Category::V) {
            return Some(leaf);
        }
        vp = v.children.iter().find(|c| c.cat == Category::VP && !c.empty);
    }
    None
}

fn surface_subject(tree: &SynNode, lexicon: &Lexicon) -> Option<Term> {
    let subject = tree.children.iter().find(|c| c.cat == Category::NP)?;
    node_semantics(subject, lexicon).filter(|t| t.ty() == SemType::Entity)
}

/// Properties the source makes available to an anaphor, most salient
/// first: the source predicate over its parallel subject, the predicates
/// of embedded clauses and properties, and events named by nominals.
fn property_candidates(
    source: &Derivation,
    surface: bool,
    kb: &KnowledgeBase,
    lexicon: &Lexicon,
) -> Result<Vec<(Term, String)>, EllipsisError> {
    let lf = source.closed_lf().ok_or(EllipsisError::MissingSemantics("source clause"))?;
    let (core, _) = polarity(lf);
    let p = Term::var("v0", SemType::property());
    let mut out = Vec::new();
    let abstracted = |t: &Term, subject: Term| solve_anaphor(&p, &[subject], t).ok();

    let first = if surface { surface_subject(&source.tree, lexicon) } else { logical_subject(core) };
    if let Some(prop) = first.and_then(|s| abstracted(core, s)) {
        out.push((prop, if surface { "surface subject abstracted" } else { "logical subject abstracted" }.to_string()));
    }
    let clause_subject = logical_subject(core);
    for arg in core.spine().1 {
        if arg.ty() == SemType::Truth {
            let (inner, _) = polarity(arg);
            if let Some(prop) = logical_subject(inner).and_then(|s| abstracted(inner, s)) {
                out.push((prop, "embedded clause predicate".into()));
            }
        } else if arg.ty() == SemType::property() && arg.is_closed() {
            if let Some(s) = &clause_subject {
                let applied = beta_normalize(&Term::app(arg.clone(), s.clone()).expect("property applies to entity"));
                if let Some(prop) = abstracted(&applied, s.clone()) {
                    out.push((prop, "embedded property".into()));
                }
            }
        }
    }
    for (name, _) in lf.constants() {
        if let Some(verb) = kb.nominal(&name) {
            if lexicon.signature().get(verb) == Some(&SemType::property()) {
                out.push((Term::constant(verb, SemType::property()), format!("nominal {name} read as {verb}")));
            }
        }
    }
    out.retain(|(t, _)| t.ty() == SemType::property() && t.is_closed());
    Ok(out)
}

fn choose(candidates: Vec<(Term, String)>, intended: Option<&str>) -> Result<(Term, String), EllipsisError> {
    let summary = || candidates.iter().map(|(t, _)| t.to_string()).collect::<Vec<_>>().join(", ");
    match intended {
        Some(want) => candidates
            .iter()
            .find(|(t, _)| property_head(t).as_deref() == Some(want))
            .cloned()
            .ok_or_else(|| EllipsisError::NoSolution(format!("no source property headed by {want} among [{}]", summary()))),
        None => candidates.first().cloned().ok_or_else(|| EllipsisError::NoSolution("source offers no property".into())),
    }
}

fn discharge(
    target: &Derivation,
    anaphor: &Assumption,
    property: &Term,
    note: String,
) -> Result<ResolutionResult, EllipsisError> {
    let open = target.lf.as_ref().ok_or(EllipsisError::MissingSemantics("target clause"))?;
    let lf = anaphor
        .discharge(open, property)
        .map(|t| beta_normalize(&t))
        .map_err(|e| EllipsisError::NoSolution(e.to_string()))?;
    if !lf.is_closed() {
        return Err(EllipsisError::NoSolution(format!("target still open after resolution: {lf}")));
    }
    Ok(ResolutionResult {
        lf,
        route: Route::SemanticAnaphora,
        tree: None,
        notes: vec![format!("{} := {property} ({note})", anaphor.var)],
    })
}

/// Resolves an elided VP purely in the semantics, leaving the target's
/// syntax untouched.
pub fn resolve_vpe_semantic(
    source: &Derivation,
    target: &Derivation,
    kb: &KnowledgeBase,
    lexicon: &Lexicon,
    intended: Option<&str>,
) -> Result<ResolutionResult, EllipsisError> {
    let (path, aux) = elision_site(&target.tree).ok_or_else(|| EllipsisError::NotApplicable(target.tree.to_string()))?;
    let id = target.tree.get(&path).and_then(|n| n.anaphor).expect("elision site carries an anaphor");
    let anaphor = target
        .pending
        .iter()
        .find(|a| a.id == id)
        .ok_or_else(|| EllipsisError::NotApplicable(format!("anaphor {id} is not pending")))?;
    let aux_word = aux.word.as_deref().unwrap_or_default();
    let under_be = lexicon.lemma(aux_word, Category::AUX).as_deref() == Some("be");
    let surface = under_be && clause_is_passive(&source.tree);
    let (property, note) = choose(property_candidates(source, surface, kb, lexicon)?, intended)?;
    discharge(target, anaphor, &property, note)
}

/// Binds an event pronoun to the event property of the source clause.
pub fn resolve_event_ref(
    source: &Derivation,
    target: &Derivation,
    kb: &KnowledgeBase,
    lexicon: &Lexicon,
    intended: Option<&str>,
) -> Result<ResolutionResult, EllipsisError> {
    let pronoun_id = target
        .tree
        .nodes()
        .into_iter()
        .find(|n| !n.empty && n.anaphor.is_some())
        .and_then(|n| n.anaphor)
        .ok_or_else(|| EllipsisError::NotApplicable(target.tree.to_string()))?;
    let anaphor = target
        .pending
        .iter()
        .find(|a| a.id == pronoun_id)
        .ok_or_else(|| EllipsisError::NotApplicable(format!("anaphor {pronoun_id} is not pending")))?;
    let verb = main_verb(&source.tree).ok_or_else(|| EllipsisError::NoSolution("source describes no event".into()))?;
    let stative = verb
        .word
        .as_deref()
        .and_then(|w| lexicon.lookup(w, Category::V))
        .is_some_and(|e| e.has("stative"));
    if stative {
        return Err(EllipsisError::NoSolution(format!(
            "source verb '{}' denotes a state",
            verb.word.as_deref().unwrap_or_default()
        )));
    }
    let (property, note) = choose(property_candidates(source, false, kb, lexicon)?, intended)?;
    discharge(target, anaphor, &property, note)
}
