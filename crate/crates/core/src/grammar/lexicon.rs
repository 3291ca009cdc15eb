use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use crate::lamcore::{is_constant_name, parse_term, parse_type, SemType, Term};
use crate::syntree::{Category, LemmaTable};

use super::GrammarError;

/// What a word contributes to composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexSem {
    /// No semantic contribution (determiners, tense auxiliaries, case markers).
    Vacuous,
    Term(Term),
    /// Introduces an anaphoric assumption of the entry's type.
    Anaphor,
    /// Denotes the entity named by the node's `ref` feature.
    Referent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub word: String,
    pub cat: Category,
    pub ty: Option<SemType>,
    pub sem: LexSem,
    pub lemma: String,
    pub features: BTreeSet<String>,
}

impl LexEntry {
    pub fn has(&self, feature: &str) -> bool {
        self.features.contains(feature)
    }
}

/// A closed lexicon, keyed by word and category.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: HashMap<(String, Category), LexEntry>,
    signature: BTreeMap<String, SemType>,
}

impl Lexicon {
    pub fn load(path: impl AsRef<Path>) -> Result<Lexicon, GrammarError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| GrammarError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Lexicon::parse(&text)
    }

    /// Reads `word<TAB>category<TAB>semtype<TAB>constant<TAB>lemma<TAB>features`
    /// records. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Lexicon, GrammarError> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim_end();
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            if fields.len() != 6 {
                return Err(GrammarError::Lexicon {
                    line: i + 1,
                    message: format!("expected 6 tab-separated fields, found {}", fields.len()),
                });
            }
            rows.push((i + 1, fields));
        }

        let mut lex = Lexicon::default();
        // Plain constants first, so lambda-term entries can refer to them.
        for (line, f) in &rows {
            if is_constant_name(f[3]) {
                let ty = parse_type(f[2]).map_err(|e| GrammarError::Lexicon { line: *line, message: e.to_string() })?;
                if let Some(prev) = lex.signature.insert(f[3].to_string(), ty.clone()) {
                    if prev != ty {
                        return Err(GrammarError::Lexicon {
                            line: *line,
                            message: format!("constant '{}' declared with types {prev} and {ty}", f[3]),
                        });
                    }
                }
            }
        }
        for (line, f) in rows {
            let err = |message: String| GrammarError::Lexicon { line, message };
            let cat: Category = f[1].parse().map_err(|e: crate::syntree::SyntreeError| err(e.to_string()))?;
            let ty = match f[2] {
                "-" => None,
                s => Some(parse_type(s).map_err(|e| err(e.to_string()))?),
            };
            let sem = match (f[3], &ty) {
                ("-", _) => LexSem::Vacuous,
                ("?", Some(_)) => LexSem::Anaphor,
                ("*", Some(_)) => LexSem::Referent,
                (_, None) => return Err(err(format!("'{}' needs a semantic type", f[0]))),
                (s, Some(ty)) => {
                    let term = parse_term(s, &lex.signature).map_err(|e| err(e.to_string()))?;
                    if term.typecheck().map_err(|e| err(e.to_string()))? != *ty {
                        return Err(err(format!("term {term} does not have type {ty}")));
                    }
                    LexSem::Term(term)
                }
            };
            let features = match f[5] {
                "-" => BTreeSet::new(),
                s => s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
            };
            let lemma = if f[4] == "-" { f[0].to_string() } else { f[4].to_string() };
            let entry = LexEntry { word: f[0].to_string(), cat, ty, sem, lemma, features };
            if lex.entries.insert((f[0].to_string(), cat), entry).is_some() {
                return Err(err(format!("duplicate entry for '{}' as {cat}", f[0])));
            }
        }
        Ok(lex)
    }

    pub fn lookup(&self, word: &str, cat: Category) -> Option<&LexEntry> {
        self.entries.get(&(word.to_string(), cat))
    }

    /// Types of every plain constant the lexicon declares.
    pub fn signature(&self) -> &BTreeMap<String, SemType> {
        &self.signature
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl LemmaTable for Lexicon {
    fn lemma(&self, word: &str, cat: Category) -> Option<String> {
        self.lookup(word, cat).map(|e| e.lemma.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# word\tcat\ttype\tconst\tlemma\tfeatures
Bill\tNP\te\tbill\t-\t-
became\tV\t(e->t)->e->t\tbecome\tbecome\t-
upset\tAP\te->t\tupset\t-\t-
not\tADV\tt->t\tnot\t-\t-
didn't\tAUX\t(e->t)->e->t\t\\v0:e->t.\\v1:e.not(v0(v1))\tdo\tnegative
did\tAUX\t-\t-\tdo\t-
it\tNP\te->t\t?\t-\tevent-pronoun
she\tNP\te\t*\t-\tpronoun
";

    #[test]
    fn loads_entries_and_terms() {
        let lex = Lexicon::parse(SAMPLE).unwrap();
        assert_eq!(lex.len(), 8);
        let didnt = lex.lookup("didn't", Category::AUX).unwrap();
        assert_eq!(didnt.lemma, "do");
        assert!(matches!(&didnt.sem, LexSem::Term(t) if t.to_string() == "\\v0:e->t.\\v1:e.not(v0(v1))"));
        assert_eq!(lex.lookup("did", Category::AUX).unwrap().sem, LexSem::Vacuous);
        assert_eq!(lex.lookup("it", Category::NP).unwrap().sem, LexSem::Anaphor);
        assert_eq!(lex.lookup("she", Category::NP).unwrap().sem, LexSem::Referent);
        assert_eq!(lex.lemma("became", Category::V).as_deref(), Some("become"));
        assert!(lex.lookup("Bill", Category::V).is_none());
    }

    #[test]
    fn rejects_bad_records() {
        assert!(matches!(Lexicon::parse("Bill\tNP\te\tbill\n"), Err(GrammarError::Lexicon { line: 1, .. })));
        assert!(Lexicon::parse("Bill\tNP\te\tbill\t-\t-\nBill\tNP\te\tbill\t-\t-\n").is_err());
        assert!(Lexicon::parse("x\tNP\te\tupset(bill)\t-\t-\n").is_err());
        assert!(Lexicon::parse("x\tQQ\te\tx\t-\t-\n").is_err());
    }
}
