//! Text syntax for types and terms.
//!
//! Types: `e`, `t`, `v`, arrows `a->b` (right associative), parentheses.
//! Terms: lowercase constants, variables `v<N>`, application written as a
//! head followed by parenthesized arguments (`become(upset)(bill)`), and
//! abstraction `\v0:e.body` whose body extends as far right as possible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::term::{var_index, Term};
use super::types::SemType;
use super::LambdaError;

/// Supplies the types of constants while parsing.
pub trait Signature {
    fn const_type(&self, name: &str) -> Option<SemType>;
}

impl Signature for HashMap<String, SemType> {
    fn const_type(&self, name: &str) -> Option<SemType> {
        self.get(name).cloned()
    }
}

impl Signature for BTreeMap<String, SemType> {
    fn const_type(&self, name: &str) -> Option<SemType> {
        self.get(name).cloned()
    }
}

impl<F: Fn(&str) -> Option<SemType>> Signature for F {
    fn const_type(&self, name: &str) -> Option<SemType> {
        self(name)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const { name, .. } | Term::Var { name, .. } => f.write_str(name),
            Term::Abs { var, ty, body } => write!(f, "\\{var}:{ty}.{body}"),
            Term::App(..) => {
                let (head, args) = self.spine();
                if matches!(head, Term::Abs { .. }) {
                    write!(f, "({head})")?;
                } else {
                    write!(f, "{head}")?;
                }
                for a in args {
                    write!(f, "({a})")?;
                }
                Ok(())
            }
        }
    }
}

pub fn is_constant_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && s.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' || c == '-')
        && var_index(s).is_none()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Lambda,
    Dot,
    Colon,
    Arrow,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, LambdaError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '\\' => {
                out.push((i, Tok::Lambda));
                i += 1;
            }
            '.' => {
                out.push((i, Tok::Dot));
                i += 1;
            }
            ':' => {
                out.push((i, Tok::Colon));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            '-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Tok::Arrow));
                i += 2;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    let arrow = c == '-' && bytes.get(i + 1) == Some(&b'>');
                    if (c.is_ascii_alphanumeric() || c == '_' || c == '-') && !arrow {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(LambdaError::Syntax { offset: i, message: format!("unexpected character '{other}'") })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, S: ?Sized> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    sig: &'a S,
    scope: Vec<(String, SemType)>,
}

impl<S: Signature + ?Sized> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err(&self, message: impl Into<String>) -> LambdaError {
        LambdaError::Syntax { offset: self.offset(), message: message.into() }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LambdaError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {tok:?}")))
        }
    }

    fn ty(&mut self) -> Result<SemType, LambdaError> {
        let left = match self.peek().cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.ty()?;
                self.expect(Tok::Close)?;
                inner
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "e" => SemType::Entity,
                    "t" => SemType::Truth,
                    "v" => SemType::Event,
                    _ => {
                        self.pos -= 1;
                        return Err(self.err(format!("unknown base type '{name}'")));
                    }
                }
            }
            _ => return Err(self.err("expected a type")),
        };
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            Ok(SemType::arrow(left, self.ty()?))
        } else {
            Ok(left)
        }
    }

    fn term(&mut self) -> Result<Term, LambdaError> {
        if self.peek() == Some(&Tok::Lambda) {
            self.pos += 1;
            let var = match self.peek().cloned() {
                Some(Tok::Ident(v)) if var_index(&v).is_some() => v,
                _ => return Err(self.err("expected a variable v<N> after '\\'")),
            };
            self.pos += 1;
            self.expect(Tok::Colon)?;
            let ty = self.ty()?;
            self.expect(Tok::Dot)?;
            self.scope.push((var.clone(), ty.clone()));
            let body = self.term();
            self.scope.pop();
            return Ok(Term::abs(var, ty, body?));
        }
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Open) {
            let at = self.offset();
            self.pos += 1;
            let arg = self.term()?;
            self.expect(Tok::Close)?;
            acc = Term::app(acc, arg).map_err(|e| LambdaError::Syntax { offset: at, message: e.to_string() })?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, LambdaError> {
        match self.peek().cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.term()?;
                self.expect(Tok::Close)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                if var_index(&name).is_some() {
                    let found = self.scope.iter().rev().find(|(v, _)| *v == name).map(|(_, t)| t.clone());
                    match found {
                        Some(ty) => {
                            self.pos += 1;
                            Ok(Term::var(name, ty))
                        }
                        None => Err(self.err(format!("unbound variable '{name}'"))),
                    }
                } else if is_constant_name(&name) {
                    match self.sig.const_type(&name) {
                        Some(ty) => {
                            self.pos += 1;
                            Ok(Term::constant(name, ty))
                        }
                        None => Err(LambdaError::UnknownConstant(name)),
                    }
                } else {
                    Err(self.err(format!("'{name}' is neither a constant nor a variable")))
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

pub fn parse_type(text: &str) -> Result<SemType, LambdaError> {
    let empty = HashMap::<String, SemType>::new();
    let mut p = Parser { toks: tokenize(text)?, pos: 0, end: text.len(), sig: &empty, scope: Vec::new() };
    let ty = p.ty()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after type"));
    }
    Ok(ty)
}

/// Parses a closed term; constant types come from `sig`.
pub fn parse_term<S: Signature + ?Sized>(text: &str, sig: &S) -> Result<Term, LambdaError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, end: text.len(), sig, scope: Vec::new() };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after term"));
    }
    Ok(t)
}
