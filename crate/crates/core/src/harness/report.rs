use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;

use crate::coherence::{CoherenceRelation, KnowledgeBase};
use crate::grammar::Lexicon;

use super::corpus::load_corpus;
use super::judge::{judge_item, ItemJudgment, Outcome, Resources, Verdict};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Records,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub format: Format,
    /// Item whose derivation traces are included.
    pub explain: Option<String>,
    /// Show verdicts for this relation only. Gold checks are unaffected.
    pub relation: Option<CoherenceRelation>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub items: Vec<ItemJudgment>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.items.iter().map(|i| i.checks.len()).sum()
    }

    pub fn matched(&self) -> usize {
        self.items.iter().flat_map(|i| &i.checks).filter(|c| c.matched()).count()
    }

    pub fn all_matched(&self) -> bool {
        self.matched() == self.total()
    }

    /// Process exit status: 0 when every gold label is reproduced.
    pub fn exit_code(&self) -> i32 {
        if self.all_matched() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, options: &Options) -> String {
        match options.format {
            Format::Text => self.render_text(options),
            Format::Records => self.render_records(options),
        }
    }

    fn shown<'a>(&'a self, item: &'a ItemJudgment, options: &'a Options) -> impl Iterator<Item = (usize, &'a Verdict)> + 'a {
        item.links.iter().enumerate().flat_map(move |(li, l)| {
            l.verdicts
                .iter()
                .filter(move |v| options.relation.is_none_or(|r| r == v.relation))
                .map(move |v| (li, v))
        })
    }

    pub fn render_text(&self, options: &Options) -> String {
        let mut out = String::new();
        for item in &self.items {
            let explain = options.explain.as_deref() == Some(item.id.as_str());
            for (li, v) in self.shown(item, options) {
                let link = &item.links[li].link;
                let outcome = match v.outcome {
                    Outcome::Felicitous => "felicitous".to_string(),
                    Outcome::Infelicitous(r) => format!("infelicitous:{}", r.as_str()),
                };
                let lf = v.lf.as_ref().map_or("-".to_string(), |t| t.to_string());
                let route = v.route.map_or("-", |r| match r {
                    crate::ellipsis::Route::SyntacticCopy => "syntactic-copy",
                    crate::ellipsis::Route::SemanticAnaphora => "semantic-anaphora",
                });
                let _ = writeln!(
                    out,
                    "{}\t{}->{}\t{}\t{}\t{}\t{}\t{}",
                    item.id, link.from, link.to, link.conj, v.relation, outcome, lf, route
                );
                if explain {
                    for line in &v.trace {
                        let _ = writeln!(out, "  | {line}");
                    }
                }
            }
            for c in &item.checks {
                let link = &item.links[c.link].link;
                let _ = writeln!(
                    out,
                    "{}\t{}->{}\t{}\treading={}\tgold={}\tgot={}\t{}",
                    item.id,
                    link.from,
                    link.to,
                    link.conj,
                    c.reading,
                    c.gold.as_str(),
                    if c.felicitous { "ok" } else { "#" },
                    if c.matched() { "match" } else { "MISMATCH" }
                );
            }
        }
        let total = self.total();
        let pct = if total == 0 { 100.0 } else { 100.0 * self.matched() as f64 / total as f64 };
        let _ = writeln!(out, "matched {}/{} gold judgments ({pct:.1}%)", self.matched(), total);
        out
    }

    pub fn render_records(&self, options: &Options) -> String {
        let mut out = String::new();
        for item in &self.items {
            let explain = options.explain.as_deref() == Some(item.id.as_str());
            for (li, v) in self.shown(item, options) {
                let link = &item.links[li].link;
                let (outcome, reason) = match v.outcome {
                    Outcome::Felicitous => ("felicitous", None),
                    Outcome::Infelicitous(r) => ("infelicitous", Some(r.as_str())),
                };
                let mut rec = json!({
                    "kind": "verdict",
                    "item": item.id,
                    "link": li,
                    "from": link.from,
                    "to": link.to,
                    "conj": link.conj,
                    "relation": v.relation,
                    "family": v.relation.family(),
                    "outcome": outcome,
                    "reason": reason,
                    "detail": v.detail,
                    "lf": v.lf.as_ref().map(|t| t.to_string()),
                    "route": v.route,
                    "reconstructions": v.reconstructions,
                });
                if explain {
                    rec["trace"] = json!(v.trace);
                }
                out.push_str(&rec.to_string());
                out.push('\n');
            }
            for c in &item.checks {
                let link = &item.links[c.link].link;
                let rec = json!({
                    "kind": "gold",
                    "item": item.id,
                    "link": c.link,
                    "from": link.from,
                    "to": link.to,
                    "conj": link.conj,
                    "reading": c.reading,
                    "relations": c.relations,
                    "gold": c.gold.as_str(),
                    "felicitous": c.felicitous,
                    "matched": c.matched(),
                });
                out.push_str(&rec.to_string());
                out.push('\n');
            }
        }
        let rec = json!({"kind": "summary", "matched": self.matched(), "total": self.total()});
        out.push_str(&rec.to_string());
        out.push('\n');
        out
    }
}

/// Judges every item of a corpus.
pub fn judge_corpus(
    items: &[super::corpus::DiscourseItem],
    lexicon: &Lexicon,
    kb: &KnowledgeBase,
) -> Result<Report, HarnessError> {
    let res = Resources { lexicon, kb };
    let items = items.iter().map(|i| judge_item(i, res)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report { items })
}

/// Loads the three input files and judges the corpus.
pub fn run_corpus(
    corpus: impl AsRef<Path>,
    lexicon: impl AsRef<Path>,
    kb: impl AsRef<Path>,
) -> Result<Report, HarnessError> {
    let lexicon = Lexicon::load(lexicon)?;
    let kb = KnowledgeBase::load(kb)?;
    let items = load_corpus(corpus)?;
    judge_corpus(&items, &lexicon, &kb)
}
