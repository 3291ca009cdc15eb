use std::collections::HashMap;

use super::node::{AssumptionId, Category, SynNode, VForm, Voice};
use super::SyntreeError;

/// Fresh assumption ids, plus a count of structural transforms performed.
/// Callers own the supply so id allocation stays deterministic.
#[derive(Debug, Clone, Default)]
pub struct Supply {
    next_id: AssumptionId,
    transforms: usize,
}

impl Supply {
    pub fn new() -> Supply {
        Supply::default()
    }

    /// Starts allocating above every id already present in `trees`.
    pub fn above<'a>(trees: impl IntoIterator<Item = &'a SynNode>) -> Supply {
        let next_id = trees
            .into_iter()
            .flat_map(|t| t.nodes())
            .flat_map(|n| [n.trace, n.binds, n.anaphor])
            .flatten()
            .max()
            .map_or(0, |m| m + 1);
        Supply { next_id, transforms: 0 }
    }

    pub fn fresh(&mut self) -> AssumptionId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    /// Number of fronting / copying operations run against this supply.
    pub fn transforms(&self) -> usize {
        self.transforms
    }

    fn record(&mut self) {
        self.transforms += 1;
    }
}

/// Looks up base forms for verbs and auxiliaries.
pub trait LemmaTable {
    fn lemma(&self, word: &str, cat: Category) -> Option<String>;
}

const ARGUMENT_CATEGORIES: [Category; 4] = [Category::NP, Category::AP, Category::PP, Category::S];

/// Argument constituents of a clause in linear order: subject and the
/// complements along the VP spine. Heads and auxiliaries are not eligible.
fn argument_paths(clause: &SynNode) -> Vec<Vec<usize>> {
    fn visit(node: &SynNode, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, c) in node.children.iter().enumerate() {
            path.push(i);
            if c.cat == Category::VP && !c.empty {
                visit(c, path, out);
            } else if ARGUMENT_CATEGORIES.contains(&c.cat) && !c.empty {
                out.push(path.clone());
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    visit(clause, &mut Vec::new(), &mut out);
    out
}

fn is_full_clause(tree: &SynNode) -> bool {
    tree.cat == Category::S
        && !tree.is_gapped()
        && tree.nodes().iter().all(|n| !n.empty && n.binds.is_none())
}

/// Fronts the leftmost unused argument constituent of each requested
/// category, leaving a trace in its place.
///
/// The result is `(S fronted... (S clause-with-traces))`, with each fronted
/// constituent marked as binding its trace.
pub fn front_parallel(
    tree: &SynNode,
    remnant_categories: &[Category],
    supply: &mut Supply,
) -> Result<SynNode, SyntreeError> {
    supply.record();
    if !is_full_clause(tree) {
        return Err(SyntreeError::NotFullClause(tree.to_string()));
    }
    if remnant_categories.is_empty() {
        return Ok(tree.clone());
    }
    let candidates = argument_paths(tree);
    let mut used = vec![false; candidates.len()];
    let mut inner = tree.clone();
    let mut fronted = Vec::with_capacity(remnant_categories.len());
    for &cat in remnant_categories {
        let slot = candidates
            .iter()
            .enumerate()
            .position(|(i, p)| !used[i] && tree.get(p).is_some_and(|n| n.cat == cat))
            .ok_or(SyntreeError::NoMatch(cat))?;
        used[slot] = true;
        let id = supply.fresh();
        let path = &candidates[slot];
        let mut moved = tree.get(path).cloned().expect("candidate path exists");
        moved.binds = Some(id);
        fronted.push(moved);
        let mut trace = SynNode::empty(cat);
        trace.trace = Some(id);
        *inner.get_mut(path).expect("candidate path exists") = trace;
    }
    let mut out = SynNode::new(Category::S, fronted);
    out.feats = tree.feats.clone();
    out.children.push(inner);
    Ok(out)
}

/// Splits a fronted clause into its fronted constituents and embedded S.
pub(crate) fn fronted_parts(tree: &SynNode) -> Option<(Vec<&SynNode>, &SynNode)> {
    let (last, rest) = tree.children.split_last()?;
    if last.cat != Category::S {
        return None;
    }
    let fronted: Vec<&SynNode> = rest.iter().filter(|c| c.binds.is_some()).collect();
    if fronted.is_empty() {
        return None;
    }
    Some((fronted, last))
}

/// Remnants of a gapped or stripped clause: overt constituents other than
/// adverbials.
pub fn remnants(target: &SynNode) -> Vec<&SynNode> {
    target
        .children
        .iter()
        .filter(|c| c.cat != Category::ADV && !(c.cat == Category::S && c.binds.is_none() && c.contains_trace()))
        .collect()
}

/// Reconstructs a gapped clause by copying the source's embedded sentence
/// under it, with fresh trace ids bound to the target's remnants in order.
pub fn copy_embedded_sentence(
    fronted_source: &SynNode,
    gapped_target: &SynNode,
    supply: &mut Supply,
) -> Result<SynNode, SyntreeError> {
    supply.record();
    let (fronted, embedded) =
        fronted_parts(fronted_source).ok_or_else(|| SyntreeError::NotFronted(fronted_source.to_string()))?;
    if !gapped_target.is_gapped() {
        return Err(SyntreeError::NotGapped(gapped_target.to_string()));
    }
    let expected: Vec<Category> = fronted.iter().map(|n| n.cat).collect();
    let found: Vec<Category> = remnants(gapped_target).iter().map(|n| n.cat).collect();
    if expected != found {
        return Err(SyntreeError::RemnantMismatch { expected, found });
    }
    let mut renumber = HashMap::new();
    for f in &fronted {
        renumber.insert(f.binds.expect("fronted nodes bind"), supply.fresh());
    }
    let mut copy = embedded.clone();
    renumber_traces(&mut copy, &renumber);

    let mut out = gapped_target.clone();
    let mut k = 0;
    for child in out.children.iter_mut() {
        if child.cat == Category::ADV {
            continue;
        }
        let old = fronted[k].binds.expect("fronted nodes bind");
        child.binds = Some(renumber[&old]);
        k += 1;
    }
    out.children.push(copy);
    Ok(out)
}

fn renumber_traces(node: &mut SynNode, map: &HashMap<AssumptionId, AssumptionId>) {
    if let Some(id) = node.trace {
        if let Some(&new) = map.get(&id) {
            node.trace = Some(new);
        }
    }
    for c in node.children.iter_mut() {
        renumber_traces(c, map);
    }
}

/// Copies a source VP for grafting under the target's auxiliary.
///
/// Under `be` the complement of the source's own `be` auxiliary is copied
/// unchanged. Under any other auxiliary the source VP must be active and
/// verb-headed, and its head verb is replaced by its base form.
pub fn copy_vp(
    source_vp: &SynNode,
    target_aux: &SynNode,
    lemmas: &impl LemmaTable,
    supply: &mut Supply,
) -> Result<SynNode, SyntreeError> {
    supply.record();
    if source_vp.cat != Category::VP || source_vp.empty {
        return Err(SyntreeError::NotAVp(source_vp.to_string()));
    }
    if source_vp.contains_trace() {
        return Err(SyntreeError::UnsuitableAntecedent(source_vp.to_string()));
    }
    let aux_word = target_aux.word.as_deref().unwrap_or_default();
    let aux_lemma = lemmas.lemma(aux_word, Category::AUX).unwrap_or_else(|| aux_word.to_string());
    let first = source_vp.children.first();
    let source_aux_lemma = first
        .filter(|c| c.cat == Category::AUX)
        .and_then(|c| c.word.as_deref())
        .map(|w| lemmas.lemma(w, Category::AUX).unwrap_or_else(|| w.to_string()));

    if aux_lemma == "be" {
        if source_aux_lemma.as_deref() != Some("be") {
            return Err(SyntreeError::FormMismatch {
                aux: aux_word.to_string(),
                vp: source_vp.to_string(),
            });
        }
        let rest = &source_vp.children[1..];
        if let [only] = rest {
            if only.cat == Category::VP {
                return Ok(only.clone());
            }
        }
        let mut vp = SynNode::new(Category::VP, rest.to_vec());
        vp.feats = source_vp.feats.clone();
        return Ok(vp);
    }

    if source_vp.is_passive() || source_aux_lemma.is_some() {
        return Err(SyntreeError::FormMismatch { aux: aux_word.to_string(), vp: source_vp.to_string() });
    }
    let mut copy = source_vp.clone();
    copy.feats.voice = Some(Voice::Active);
    let head = copy
        .children
        .iter_mut()
        .find(|c| c.cat == Category::V && c.is_leaf())
        .ok_or_else(|| SyntreeError::NotAVp(source_vp.to_string()))?;
    let word = head.word.clone().unwrap_or_default();
    head.word = Some(lemmas.lemma(&word, Category::V).unwrap_or(word));
    head.feats.vform = Some(VForm::Base);
    Ok(copy)
}

/// Corresponding constituents of two clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub pairs: Vec<(SynNode, SynNode)>,
    pub unpaired_source: Vec<SynNode>,
    pub unpaired_target: Vec<SynNode>,
}

/// Constituents of a clause in logical order: subject, auxiliaries, verb,
/// complements. Traces are replaced by the constituents that bind them; in
/// a passive the by-phrase agent is the subject and the surface subject
/// follows the verb.
pub fn clause_roles(clause: &SynNode) -> Vec<SynNode> {
    let mut binders = HashMap::new();
    collect_binders(clause, &mut binders);
    roles_with(clause, &binders)
}

fn collect_binders(node: &SynNode, out: &mut HashMap<AssumptionId, SynNode>) {
    for c in &node.children {
        if let Some(id) = c.binds {
            let mut b = c.clone();
            b.binds = None;
            out.insert(id, b);
        }
        collect_binders(c, out);
    }
}

fn resolve(node: &SynNode, binders: &HashMap<AssumptionId, SynNode>) -> SynNode {
    match node.trace.and_then(|id| binders.get(&id)) {
        Some(b) => b.clone(),
        None => {
            let mut n = node.clone();
            n.binds = None;
            n
        }
    }
}

fn roles_with(clause: &SynNode, binders: &HashMap<AssumptionId, SynNode>) -> Vec<SynNode> {
    if let Some((_, embedded)) = fronted_parts(clause) {
        return roles_with(embedded, binders);
    }
    if clause.is_gapped() {
        return remnants(clause).into_iter().map(|n| resolve(n, binders)).collect();
    }
    let subject = clause.children.iter().find(|c| c.cat == Category::NP).map(|n| resolve(n, binders));
    let mut items = Vec::new();
    let mut agent = None;
    let mut passive = false;
    if let Some(vp) = clause.children.iter().find(|c| c.cat == Category::VP) {
        vp_roles(vp, binders, &mut items, &mut agent, &mut passive);
    }
    let mut out = Vec::new();
    if passive {
        out.extend(agent);
        let verb_at = items.iter().position(|n| n.cat == Category::V).map_or(items.len(), |i| i + 1);
        let mut items = items;
        if let Some(s) = subject {
            items.insert(verb_at, s);
        }
        out.extend(items);
    } else {
        out.extend(subject);
        out.extend(items);
    }
    out
}

fn vp_roles(
    vp: &SynNode,
    binders: &HashMap<AssumptionId, SynNode>,
    items: &mut Vec<SynNode>,
    agent: &mut Option<SynNode>,
    passive: &mut bool,
) {
    if vp.empty {
        items.push(vp.clone());
        return;
    }
    *passive |= vp.is_passive();
    for c in &vp.children {
        if c.cat == Category::VP {
            vp_roles(c, binders, items, agent, passive);
        } else if vp.is_passive() && c.cat == Category::PP && is_by_phrase(&resolve(c, binders)) {
            let pp = resolve(c, binders);
            *agent = pp.children.iter().find(|n| n.cat == Category::NP).map(|n| resolve(n, binders));
        } else {
            items.push(resolve(c, binders));
        }
    }
}

fn is_by_phrase(pp: &SynNode) -> bool {
    pp.child_leaf(Category::P).and_then(|p| p.word.as_deref()) == Some("by")
}

/// Pairs constituents of the same category by order of occurrence in the
/// two clauses' logical role lists.
pub fn align_parallel(source: &SynNode, target: &SynNode) -> Alignment {
    let src = clause_roles(source);
    let tgt = clause_roles(target);
    let mut used = vec![false; tgt.len()];
    let mut pairs = Vec::new();
    let mut unpaired_source = Vec::new();
    for s in src {
        match tgt.iter().enumerate().position(|(i, t)| !used[i] && t.cat == s.cat) {
            Some(j) => {
                used[j] = true;
                pairs.push((s, tgt[j].clone()));
            }
            None => unpaired_source.push(s),
        }
    }
    let unpaired_target = tgt.into_iter().zip(used).filter(|(_, u)| !u).map(|(t, _)| t).collect();
    Alignment { pairs, unpaired_source, unpaired_target }
}
