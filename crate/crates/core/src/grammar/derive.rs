use std::collections::{HashMap, HashSet};

use crate::lamcore::{beta_normalize, Assumption, Flavor, SemType, Term};
use crate::syntree::{fronted_parts, parse_bracketed, AssumptionId, Category, SynNode, Supply, Voice};

use super::lexicon::{LexSem, Lexicon};
use super::GrammarError;

/// Constant standing in for the unexpressed agent of a passive.
pub const IMPLICIT_AGENT: &str = "someone";

/// A clause's tree together with its sentence-level semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub tree: SynNode,
    /// Absent for gapped and stripped clauses before reconstruction.
    pub lf: Option<Term>,
    /// Assumptions still free in `lf`.
    pub pending: Vec<Assumption>,
}

impl Derivation {
    /// The sentence LF, if present and free of pending assumptions.
    pub fn closed_lf(&self) -> Option<&Term> {
        self.lf.as_ref().filter(|_| self.pending.is_empty())
    }

    pub fn anaphors(&self) -> impl Iterator<Item = &Assumption> {
        self.pending.iter().filter(|a| a.flavor == Flavor::Anaphor)
    }
}

/// Reads a bracketed tree and checks every word against the lexicon.
///
/// VPs without a voice feature are marked active. Empty VPs and anaphoric
/// words receive fresh anaphor ids.
pub fn parse_tree(text: &str, lexicon: &Lexicon) -> Result<SynNode, GrammarError> {
    let mut tree = parse_bracketed(text)?;
    let mut supply = Supply::above([&tree]);
    resolve_lexical(&mut tree, lexicon, &mut supply)?;
    Ok(tree)
}

fn resolve_lexical(node: &mut SynNode, lexicon: &Lexicon, supply: &mut Supply) -> Result<(), GrammarError> {
    if node.cat == Category::VP && node.feats.voice.is_none() && !node.empty {
        node.feats.voice = Some(Voice::Active);
    }
    if node.empty && node.trace.is_none() && node.anaphor.is_none() {
        node.anaphor = Some(supply.fresh());
    }
    if let Some(word) = &node.word {
        let entry = lexicon
            .lookup(word, node.cat)
            .ok_or_else(|| GrammarError::UnknownWord { word: word.clone(), cat: node.cat })?;
        if entry.sem == LexSem::Anaphor && node.anaphor.is_none() {
            node.anaphor = Some(supply.fresh());
        }
        if entry.sem == LexSem::Referent && node.feats.referent.is_none() {
            return Err(GrammarError::MissingReferent(word.clone()));
        }
    }
    for c in node.children.iter_mut() {
        resolve_lexical(c, lexicon, supply)?;
    }
    Ok(())
}

/// Composes the tree's semantics bottom-up by typed application.
pub fn derive(tree: &SynNode, lexicon: &Lexicon) -> Result<Derivation, GrammarError> {
    let mut d = Deriver::new(lexicon);
    d.collect_binders(tree)?;
    if tree.is_gapped() && fronted_parts(tree).is_none() {
        // No sentence-level semantics until the clause is reconstructed;
        // the remnants must still be interpretable on their own.
        for r in crate::syntree::remnants(tree) {
            d.sem(r)?;
        }
        return Ok(Derivation { tree: tree.clone(), lf: None, pending: Vec::new() });
    }
    let lf = d.sem(tree)?.map(|t| beta_normalize(&t));
    if let Some(lf) = &lf {
        if tree.cat == Category::S && lf.ty() != SemType::Truth {
            return Err(GrammarError::TypeClash {
                node: label(tree),
                detail: format!("clause denotes {} rather than t", lf.ty()),
            });
        }
    }
    let pending = d
        .pending
        .into_iter()
        .filter(|a| lf.as_ref().is_some_and(|t| t.occurs_free(&a.var)))
        .collect();
    Ok(Derivation { tree: tree.clone(), lf, pending })
}

/// Closed semantics of a single constituent, if it has any.
pub fn node_semantics(node: &SynNode, lexicon: &Lexicon) -> Option<Term> {
    let mut d = Deriver::new(lexicon);
    d.collect_binders(node).ok()?;
    d.sem(node).ok().flatten().map(|t| beta_normalize(&t)).filter(Term::is_closed)
}

fn label(node: &SynNode) -> String {
    let words = node.words();
    if words.is_empty() {
        node.cat.to_string()
    } else {
        format!("{} '{}'", node.cat, words.join(" "))
    }
}

struct Deriver<'a> {
    lexicon: &'a Lexicon,
    binder_types: HashMap<AssumptionId, SemType>,
    /// Traces left by fronted by-phrases.
    agent_traces: HashSet<AssumptionId>,
    pending: Vec<Assumption>,
}

impl<'a> Deriver<'a> {
    fn new(lexicon: &'a Lexicon) -> Self {
        Deriver { lexicon, binder_types: HashMap::new(), agent_traces: HashSet::new(), pending: Vec::new() }
    }

    fn collect_binders(&mut self, node: &SynNode) -> Result<(), GrammarError> {
        for c in &node.children {
            if let Some(id) = c.binds {
                let mut plain = c.clone();
                plain.binds = None;
                let ty = Deriver::new(self.lexicon)
                    .sem(&plain)?
                    .map(|t| t.ty())
                    .ok_or_else(|| GrammarError::TypeClash { node: label(c), detail: "remnant has no semantics".into() })?;
                self.binder_types.insert(id, ty);
                if is_by_phrase(c) {
                    self.agent_traces.insert(id);
                }
            }
            self.collect_binders(c)?;
        }
        Ok(())
    }

    fn assume(&mut self, id: AssumptionId, flavor: Flavor, ty: SemType) -> Term {
        let a = Assumption::new(id, flavor, ty);
        let t = a.as_term();
        if !self.pending.iter().any(|p| p.id == id) {
            self.pending.push(a);
        }
        t
    }

    fn sem(&mut self, node: &SynNode) -> Result<Option<Term>, GrammarError> {
        if node.empty {
            return self.empty_sem(node).map(Some);
        }
        if let Some(word) = &node.word {
            return self.leaf_sem(node, word);
        }
        if let Some((fronted, embedded)) = fronted_parts(node) {
            return self.fronted_sem(node, &fronted, embedded);
        }
        self.check_event_pronouns(node)?;
        let mut items: Vec<Term> = Vec::new();
        if node.cat == Category::VP && node.is_passive() {
            for c in &node.children {
                if self.is_agent(c) {
                    continue;
                }
                if c.cat == Category::V && c.is_leaf() {
                    let agent = match node.children.iter().find(|p| self.is_agent(p)) {
                        Some(pp) => self.sem(pp)?.ok_or_else(|| GrammarError::TypeClash {
                                node: label(pp),
                                detail: "by-phrase has no semantics".into(),
                            })?,
                        None => Term::constant(IMPLICIT_AGENT, SemType::Entity),
                    };
                    let verb = self.sem(c)?.ok_or_else(|| GrammarError::TypeClash {
                        node: label(c),
                        detail: "passive verb has no semantics".into(),
                    })?;
                    items.push(self.passivize(node, verb, agent)?);
                } else if let Some(t) = self.sem(c)? {
                    items.push(t);
                }
            }
        } else {
            for c in &node.children {
                if let Some(t) = self.sem(c)? {
                    items.push(t);
                }
            }
        }
        self.combine(node, items)
    }

    fn empty_sem(&mut self, node: &SynNode) -> Result<Term, GrammarError> {
        if let Some(id) = node.trace {
            let ty = self.binder_types.get(&id).cloned().ok_or(GrammarError::UnboundTrace(id))?;
            return Ok(self.assume(id, Flavor::Trace, ty));
        }
        if let Some(id) = node.anaphor {
            let ty = match node.cat {
                Category::VP => SemType::property(),
                other => return Err(GrammarError::UnsupportedEmpty(other)),
            };
            return Ok(self.assume(id, Flavor::Anaphor, ty));
        }
        Err(GrammarError::UnsupportedEmpty(node.cat))
    }

    fn leaf_sem(&mut self, node: &SynNode, word: &str) -> Result<Option<Term>, GrammarError> {
        let entry = self
            .lexicon
            .lookup(word, node.cat)
            .ok_or_else(|| GrammarError::UnknownWord { word: word.to_string(), cat: node.cat })?;
        Ok(match (&entry.sem, &entry.ty) {
            (LexSem::Vacuous, _) => None,
            (LexSem::Term(t), _) => Some(t.clone()),
            (LexSem::Anaphor, Some(ty)) => {
                let id = node.anaphor.ok_or_else(|| GrammarError::MissingAnaphor(word.to_string()))?;
                Some(self.assume(id, Flavor::Anaphor, ty.clone()))
            }
            (LexSem::Referent, Some(ty)) => {
                let r = node.feats.referent.clone().ok_or_else(|| GrammarError::MissingReferent(word.to_string()))?;
                Some(Term::constant(r, ty.clone()))
            }
            (_, None) => None,
        })
    }

    /// Interprets the embedded clause with its traces free, then discharges
    /// each trace with the semantics of the constituent binding it.
    fn fronted_sem(
        &mut self,
        node: &SynNode,
        fronted: &[&SynNode],
        embedded: &SynNode,
    ) -> Result<Option<Term>, GrammarError> {
        let mut inner = self.sem(embedded)?.ok_or_else(|| GrammarError::TypeClash {
            node: label(embedded),
            detail: "embedded clause has no semantics".into(),
        })?;
        for f in fronted {
            let id = f.binds.expect("fronted constituents bind a trace");
            let mut plain = (*f).clone();
            plain.binds = None;
            let value = self.sem(&plain)?.ok_or_else(|| GrammarError::TypeClash {
                node: label(f),
                detail: "fronted constituent has no semantics".into(),
            })?;
            let ty = self.binder_types.get(&id).cloned().unwrap_or_else(|| value.ty());
            inner = Assumption::new(id, Flavor::Trace, ty).discharge(&inner, &value).map_err(|e| {
                GrammarError::TypeClash { node: label(f), detail: e.to_string() }
            })?;
            self.pending.retain(|a| a.id != id);
        }
        let mut items = Vec::new();
        for c in &node.children {
            if c.binds.is_some() {
                continue;
            }
            if std::ptr::eq(c, embedded) {
                items.push(beta_normalize(&inner));
            } else if let Some(t) = self.sem(c)? {
                items.push(t);
            }
        }
        self.combine(node, items)
    }

    /// A by-phrase, or the trace of a fronted one.
    fn is_agent(&self, node: &SynNode) -> bool {
        node.cat == Category::PP && (is_by_phrase(node) || node.trace.is_some_and(|id| self.agent_traces.contains(&id)))
    }

    /// `\s. verb(s)(agent)`: the surface subject fills the object slot.
    fn passivize(&self, vp: &SynNode, verb: Term, agent: Term) -> Result<Term, GrammarError> {
        let e = SemType::Entity;
        let transitive = SemType::arrow(e.clone(), SemType::arrow(e.clone(), SemType::Truth));
        if verb.ty() != transitive {
            return Err(GrammarError::TypeClash {
                node: label(vp),
                detail: format!("passive verb has type {} rather than {transitive}", verb.ty()),
            });
        }
        let var = "v0";
        let s = Term::var(var, e.clone());
        let body = Term::apply_all(verb, [&s, &agent])
            .map_err(|err| GrammarError::TypeClash { node: label(vp), detail: err.to_string() })?;
        Ok(beta_normalize(&Term::abs(var, e, body)))
    }

    /// Event pronouns are only interpretable as the object of main-verb `do`.
    fn check_event_pronouns(&self, node: &SynNode) -> Result<(), GrammarError> {
        let pronoun = node.children.iter().find(|c| {
            c.word.as_deref().and_then(|w| self.lexicon.lookup(w, c.cat)).is_some_and(|e| e.has("event-pronoun"))
        });
        let Some(pronoun) = pronoun else { return Ok(()) };
        let licensed = node.cat == Category::VP
            && node.children.iter().any(|c| {
                c.cat == Category::V
                    && c.word.as_deref().and_then(|w| self.lexicon.lookup(w, Category::V)).is_some_and(|e| e.lemma == "do")
            });
        if licensed {
            Ok(())
        } else {
            Err(GrammarError::UnlicensedEventPronoun(pronoun.word.clone().unwrap_or_default()))
        }
    }

    /// Repeatedly applies the leftmost adjacent pair that type-checks, in
    /// whichever direction fits.
    fn combine(&self, node: &SynNode, mut items: Vec<Term>) -> Result<Option<Term>, GrammarError> {
        while items.len() > 1 {
            let step = (0..items.len() - 1).find_map(|i| {
                let (l, r) = (&items[i], &items[i + 1]);
                if l.ty().apply(&r.ty()).is_some() {
                    Some((i, l.clone(), r.clone()))
                } else if r.ty().apply(&l.ty()).is_some() {
                    Some((i, r.clone(), l.clone()))
                } else {
                    None
                }
            });
            let Some((i, f, a)) = step else {
                return Err(GrammarError::TypeClash {
                    node: label(node),
                    detail: format!(
                        "cannot combine {}",
                        items.iter().map(|t| t.ty().to_string()).collect::<Vec<_>>().join(" with ")
                    ),
                });
            };
            let applied = Term::app(f, a).map_err(|e| GrammarError::TypeClash { node: label(node), detail: e.to_string() })?;
            items.splice(i..i + 2, [beta_normalize(&applied)]);
        }
        Ok(items.pop())
    }
}

fn is_by_phrase(pp: &SynNode) -> bool {
    pp.child_leaf(Category::P).and_then(|p| p.word.as_deref()) == Some("by")
}
