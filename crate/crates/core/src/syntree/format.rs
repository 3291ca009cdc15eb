//! Bracketed tree text: `(CAT[feat=val,...] child ...)`, terminals as bare
//! words, empty nodes as `(CAT[elided])`.
//!
//! `(VP[elided] (AUX did))` is shorthand for a VP holding the auxiliary
//! followed by an empty VP; it parses to that expanded shape and prints in
//! expanded form.

use std::fmt;

use super::node::{Category, Features, SynNode};
use super::SyntreeError;

impl fmt::Display for SynNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.cat)?;
        let feats = feature_strings(self);
        if !feats.is_empty() {
            write!(f, "[{}]", feats.join(","))?;
        }
        if let Some(w) = &self.word {
            write!(f, " {w}")?;
        }
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

fn feature_strings(n: &SynNode) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(v) = n.feats.voice {
        out.push(format!("voice={}", v.as_str()));
    }
    if let Some(v) = n.feats.vform {
        out.push(format!("vform={}", v.as_str()));
    }
    if n.feats.gapped {
        out.push("gapped".into());
    }
    if n.feats.stripped {
        out.push("stripped".into());
    }
    if let Some(r) = &n.feats.referent {
        out.push(format!("ref={r}"));
    }
    if let Some(id) = n.trace {
        out.push(format!("trace={id}"));
    }
    if let Some(id) = n.binds {
        out.push(format!("binds={id}"));
    }
    if let Some(id) = n.anaphor {
        out.push(format!("anaphor={id}"));
    }
    if n.empty {
        out.push("elided".into());
    }
    out
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn err(&self, message: impl Into<String>) -> SyntreeError {
        SyntreeError::Syntax { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn token(&mut self) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_whitespace() || matches!(c, '(' | ')' | '[' | ']') {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn node(&mut self) -> Result<SynNode, SyntreeError> {
        self.skip_ws();
        if self.peek() != Some('(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        let cat_at = self.pos;
        let cat: Category = self.token().parse().map_err(|e: SyntreeError| SyntreeError::Syntax {
            offset: cat_at,
            message: e.to_string(),
        })?;
        let mut node = SynNode::new(cat, Vec::new());
        let mut elided = false;
        if self.peek() == Some('[') {
            self.pos += 1;
            let close = self.text[self.pos..].find(']').ok_or_else(|| {
                SyntreeError::Syntax { offset: self.text.len(), message: "unterminated feature list".into() }
            })?;
            let body = &self.text[self.pos..self.pos + close];
            let at = self.pos;
            for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                apply_feature(&mut node, &mut elided, item)
                    .map_err(|e| SyntreeError::Syntax { offset: at, message: e.to_string() })?;
            }
            self.pos += close + 1;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Err(self.err("unbalanced brackets: missing ')'")),
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                Some('(') => node.children.push(self.node()?),
                Some(_) => {
                    let at = self.pos;
                    let word = self.token();
                    if word.is_empty() {
                        return Err(self.err("unexpected character"));
                    }
                    if node.word.is_some() {
                        return Err(SyntreeError::Syntax { offset: at, message: "more than one word under a node".into() });
                    }
                    node.word = Some(word.to_string());
                }
            }
        }
        if node.word.is_some() && !node.children.is_empty() {
            return Err(self.err(format!("{} mixes a word with child nodes", node.cat)));
        }
        if elided {
            if node.children.is_empty() && node.word.is_none() {
                node.empty = true;
            } else if node.word.is_some() {
                return Err(self.err("an elided node cannot carry a word"));
            } else {
                // Shorthand: move the elision marker onto a new empty child.
                let mut gap = SynNode::empty(node.cat);
                gap.anaphor = node.anaphor.take();
                gap.trace = node.trace.take();
                node.children.push(gap);
            }
        }
        Ok(node)
    }
}

fn apply_feature(node: &mut SynNode, elided: &mut bool, item: &str) -> Result<(), SyntreeError> {
    let f: &mut Features = &mut node.feats;
    match item.split_once('=') {
        None => match item {
            "gapped" => f.gapped = true,
            "stripped" => f.stripped = true,
            "elided" => *elided = true,
            other => return Err(SyntreeError::BadFeature(other.to_string())),
        },
        Some((key, val)) => {
            let id = || val.parse::<usize>().map_err(|_| SyntreeError::BadFeature(item.to_string()));
            match key {
                "voice" => f.voice = Some(val.parse()?),
                "vform" => f.vform = Some(val.parse()?),
                "ref" => f.referent = Some(val.to_string()),
                "trace" => node.trace = Some(id()?),
                "binds" => node.binds = Some(id()?),
                "anaphor" => node.anaphor = Some(id()?),
                _ => return Err(SyntreeError::BadFeature(item.to_string())),
            }
        }
    }
    Ok(())
}

/// Reads one bracketed tree. Lexical checks happen in the grammar layer.
pub fn parse_bracketed(text: &str) -> Result<SynNode, SyntreeError> {
    let mut r = Reader { text, pos: 0 };
    let node = r.node()?;
    r.skip_ws();
    if r.pos != text.len() {
        return Err(r.err("trailing input after tree"));
    }
    Ok(node)
}
