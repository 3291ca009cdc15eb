use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::path::Path;

use super::CoherenceError;

/// A predicate key with a polarity: `("dishonest", true)` or
/// `("support", false)` for its negation.
pub type Literal = (String, bool);

/// World knowledge the coherence checkers consult. Facts are closed-world:
/// a negative property holds only when stated.
#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    props: BTreeMap<String, BTreeMap<String, bool>>,
    isa: BTreeMap<String, BTreeSet<String>>,
    plausible: BTreeMap<Literal, BTreeSet<Literal>>,
    antonyms: BTreeMap<String, BTreeSet<String>>,
    members: BTreeSet<(String, String)>,
    subsets: BTreeSet<(String, String)>,
    same: BTreeSet<(String, String)>,
    nominal: BTreeMap<String, String>,
}

/// Ancestor search depth for [`KnowledgeBase::generalize`].
pub const GENERALIZE_DEPTH: usize = 3;

impl KnowledgeBase {
    pub fn load(path: impl AsRef<Path>) -> Result<KnowledgeBase, CoherenceError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| CoherenceError::Io { path: path.display().to_string(), message: e.to_string() })?;
        KnowledgeBase::parse(&text)
    }

    /// Reads one fact per line:
    ///
    /// ```text
    /// prop <q> <entity> [neg]
    /// isa <p> <parent>
    /// plausible <p> <q>        # either side may be negated as ~p
    /// antonym <p> <q>
    /// member <b> <a>
    /// subset <b> <a>
    /// same <a> <b>
    /// nominal <noun> <verb>
    /// ```
    pub fn parse(text: &str) -> Result<KnowledgeBase, CoherenceError> {
        let mut kb = KnowledgeBase::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = line.split_whitespace().collect();
            if words.is_empty() {
                continue;
            }
            let err = |message: String| CoherenceError::Kb { line: i + 1, message };
            let pair = || match words[1..] {
                [a, b] => Ok((a.to_string(), b.to_string())),
                _ => Err(err(format!("'{}' takes two arguments", words[0]))),
            };
            match words[0] {
                "prop" => {
                    let (q, e, positive) = match words[1..] {
                        [q, e] => (q, e, true),
                        [q, e, "neg"] => (q, e, false),
                        _ => return Err(err("expected 'prop <q> <entity> [neg]'".into())),
                    };
                    let facts = kb.props.entry(e.to_string()).or_default();
                    if facts.insert(q.to_string(), positive).is_some_and(|old| old != positive) {
                        return Err(err(format!("{q}({e}) asserted with both polarities")));
                    }
                }
                "isa" => {
                    let (p, parent) = pair()?;
                    if p == parent || kb.ancestors(&parent, usize::MAX).iter().any(|(a, _)| *a == p) {
                        return Err(err(format!("isa {p} {parent} makes the hierarchy cyclic")));
                    }
                    kb.isa.entry(p).or_default().insert(parent);
                }
                "plausible" => {
                    let (p, q) = pair()?;
                    kb.plausible.entry(literal(&p)).or_default().insert(literal(&q));
                }
                "antonym" => {
                    let (p, q) = pair()?;
                    kb.antonyms.entry(p.clone()).or_default().insert(q.clone());
                    kb.antonyms.entry(q).or_default().insert(p);
                }
                "member" => {
                    kb.members.insert(pair()?);
                }
                "subset" => {
                    kb.subsets.insert(pair()?);
                }
                "same" => {
                    let (a, b) = pair()?;
                    kb.same.insert((b.clone(), a.clone()));
                    kb.same.insert((a, b));
                }
                "nominal" => {
                    let (noun, verb) = pair()?;
                    kb.nominal.insert(noun, verb);
                }
                other => return Err(err(format!("unknown fact kind '{other}'"))),
            }
        }
        Ok(kb)
    }

    /// The stated polarity of `q(entity)`, if any.
    pub fn property(&self, q: &str, entity: &str) -> Option<bool> {
        self.props.get(entity)?.get(q).copied()
    }

    /// Some property holds positively of both.
    pub fn similar(&self, a: &str, b: &str) -> bool {
        let (Some(pa), Some(pb)) = (self.props.get(a), self.props.get(b)) else { return false };
        pa.iter().any(|(q, &pos)| pos && pb.get(q) == Some(&true))
    }

    /// Some property holds of one and is stated false of the other.
    pub fn dissimilar(&self, a: &str, b: &str) -> bool {
        let (Some(pa), Some(pb)) = (self.props.get(a), self.props.get(b)) else { return false };
        pa.iter().any(|(q, &pos)| pb.get(q) == Some(&!pos))
    }

    /// Ancestors of `p` with their distance, `p` itself at 0.
    fn ancestors(&self, p: &str, depth: usize) -> Vec<(String, usize)> {
        let mut seen = vec![(p.to_string(), 0)];
        let mut queue = VecDeque::from([(p.to_string(), 0)]);
        while let Some((n, d)) = queue.pop_front() {
            if d >= depth {
                continue;
            }
            for parent in self.isa.get(&n).into_iter().flatten() {
                if !seen.iter().any(|(s, _)| s == parent) {
                    seen.push((parent.clone(), d + 1));
                    queue.push_back((parent.clone(), d + 1));
                }
            }
        }
        seen
    }

    /// Least common subsumer of two predicates in the isa hierarchy.
    pub fn generalize(&self, p0: &str, p1: &str) -> Option<String> {
        let a0 = self.ancestors(p0, GENERALIZE_DEPTH);
        let a1 = self.ancestors(p1, GENERALIZE_DEPTH);
        a0.iter()
            .filter_map(|(n, d0)| a1.iter().find(|(m, _)| m == n).map(|(_, d1)| (d0.max(d1), d0 + d1, n)))
            .min()
            .map(|(_, _, n)| n.clone())
    }

    pub fn antonyms(&self, p: &str, q: &str) -> bool {
        self.antonyms.get(p).is_some_and(|s| s.contains(q))
    }

    pub fn member(&self, b: &str, a: &str) -> bool {
        self.members.contains(&(b.to_string(), a.to_string()))
    }

    pub fn subset(&self, b: &str, a: &str) -> bool {
        self.subsets.contains(&(b.to_string(), a.to_string()))
    }

    /// Identical, or stated to denote the same individual.
    pub fn same(&self, a: &str, b: &str) -> bool {
        a == b || self.same.contains(&(a.to_string(), b.to_string()))
    }

    /// The verb a nominalization names an event of.
    pub fn nominal(&self, noun: &str) -> Option<&str> {
        self.nominal.get(noun).map(String::as_str)
    }

    /// Literals directly implied by `from`: plausible edges, then antonymy
    /// turning a positive literal into the negation of its antonyms.
    pub fn successors(&self, from: &Literal) -> Vec<(Literal, Step)> {
        let mut out: Vec<(Literal, Step)> = self
            .plausible
            .get(from)
            .into_iter()
            .flatten()
            .map(|to| (to.clone(), Step::Plausible(from.clone(), to.clone())))
            .collect();
        if from.1 {
            for a in self.antonyms.get(&from.0).into_iter().flatten() {
                out.push(((a.clone(), false), Step::Antonym(from.0.clone(), a.clone())));
            }
        }
        out
    }

    /// Shortest chain of at most `depth` plausible edges from `from` to
    /// `to`, optionally followed by one antonym step.
    pub fn implication_chain(&self, from: &Literal, to: &Literal, depth: usize) -> Option<Vec<Step>> {
        // A literal reached through the antonym step is a dead end, so it is
        // visited separately from the same literal reached by plausible edges.
        let mut seen = HashSet::from([(from.clone(), false)]);
        let mut queue = VecDeque::from([(from.clone(), Vec::<Step>::new())]);
        while let Some((lit, chain)) = queue.pop_front() {
            if lit == *to {
                return Some(chain);
            }
            let edges = chain.iter().filter(|s| matches!(s, Step::Plausible(..))).count();
            if chain.iter().any(|s| matches!(s, Step::Antonym(..))) {
                continue;
            }
            for (next, step) in self.successors(&lit) {
                let antonym = matches!(step, Step::Antonym(..));
                if !antonym && edges >= depth {
                    continue;
                }
                if seen.insert((next.clone(), antonym)) {
                    let mut c = chain.clone();
                    c.push(step);
                    queue.push_back((next, c));
                }
            }
        }
        None
    }

    /// Every stated plausible edge, for independent checking.
    pub fn plausible_edges(&self) -> impl Iterator<Item = (&Literal, &Literal)> {
        self.plausible.iter().flat_map(|(f, ts)| ts.iter().map(move |t| (f, t)))
    }

    pub fn entities(&self) -> impl Iterator<Item = &str> {
        self.props.keys().map(String::as_str)
    }
}

fn literal(s: &str) -> Literal {
    match s.strip_prefix('~') {
        Some(rest) => (rest.to_string(), false),
        None => (s.to_string(), true),
    }
}

/// One link in an abduced implication chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Step {
    Plausible(Literal, Literal),
    Antonym(String, String),
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lit = |l: &Literal| if l.1 { l.0.clone() } else { format!("~{}", l.0) };
        match self {
            Step::Plausible(a, b) => write!(f, "plausible {} {}", lit(a), lit(b)),
            Step::Antonym(a, b) => write!(f, "antonym {a} {b}"),
        }
    }
}
