//! Shared test support: an independent de Bruijn evaluator used as an
//! oracle for the library's named-variable implementation, and seeded
//! generators of random well-typed terms.
#![allow(dead_code)]

use coherent_ellipsis::lamcore::{SemType, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

pub fn data(file: &str) -> String {
    format!("{DATA}/{file}")
}

/// Nameless terms. Free variables keep their names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Db {
    Const(String, SemType),
    Bound(usize),
    Free(String),
    App(Box<Db>, Box<Db>),
    Abs(SemType, Box<Db>),
}

pub fn to_db(t: &Term) -> Db {
    fn go(t: &Term, scope: &mut Vec<String>) -> Db {
        match t {
            Term::Const { name, ty } => Db::Const(name.clone(), ty.clone()),
            Term::Var { name, .. } => match scope.iter().rev().position(|n| n == name) {
                Some(i) => Db::Bound(i),
                None => Db::Free(name.clone()),
            },
            Term::App(f, a) => Db::App(Box::new(go(f, scope)), Box::new(go(a, scope))),
            Term::Abs { var, ty, body } => {
                scope.push(var.clone());
                let b = go(body, scope);
                scope.pop();
                Db::Abs(ty.clone(), Box::new(b))
            }
        }
    }
    go(t, &mut Vec::new())
}

fn shift(d: &Db, delta: isize, cutoff: usize) -> Db {
    match d {
        Db::Bound(i) if *i >= cutoff => Db::Bound((*i as isize + delta) as usize),
        Db::App(f, a) => Db::App(Box::new(shift(f, delta, cutoff)), Box::new(shift(a, delta, cutoff))),
        Db::Abs(ty, b) => Db::Abs(ty.clone(), Box::new(shift(b, delta, cutoff + 1))),
        other => other.clone(),
    }
}

fn subst(d: &Db, j: usize, s: &Db) -> Db {
    match d {
        Db::Bound(i) if *i == j => s.clone(),
        Db::App(f, a) => Db::App(Box::new(subst(f, j, s)), Box::new(subst(a, j, s))),
        Db::Abs(ty, b) => Db::Abs(ty.clone(), Box::new(subst(b, j + 1, &shift(s, 1, 0)))),
        other => other.clone(),
    }
}

fn beta(body: &Db, arg: &Db) -> Db {
    shift(&subst(body, 0, &shift(arg, 1, 0)), -1, 0)
}

fn whnf(d: &Db) -> Db {
    match d {
        Db::App(f, a) => match whnf(f) {
            Db::Abs(_, b) => whnf(&beta(&b, a)),
            f2 => Db::App(Box::new(f2), a.clone()),
        },
        other => other.clone(),
    }
}

/// Normal-order normal form.
pub fn normalize(d: &Db) -> Db {
    match whnf(d) {
        Db::Abs(ty, b) => Db::Abs(ty, Box::new(normalize(&b))),
        Db::App(f, a) => Db::App(Box::new(normalize(&f)), Box::new(normalize(&a))),
        other => other,
    }
}

pub fn oracle_nf(t: &Term) -> Db {
    normalize(&to_db(t))
}

pub fn oracle_alpha_eq(a: &Term, b: &Term) -> bool {
    to_db(a) == to_db(b)
}

pub fn has_redex(d: &Db) -> bool {
    match d {
        Db::App(f, a) => matches!(**f, Db::Abs(..)) || has_redex(f) || has_redex(a),
        Db::Abs(_, b) => has_redex(b),
        _ => false,
    }
}

pub fn e() -> SemType {
    SemType::Entity
}

pub fn t() -> SemType {
    SemType::Truth
}

pub fn arrow(a: SemType, b: SemType) -> SemType {
    SemType::arrow(a, b)
}

/// Constants the generator draws on.
pub fn signature() -> Vec<(&'static str, SemType)> {
    let p = arrow(e(), t());
    vec![
        ("bill", e()),
        ("hillary", e()),
        ("clinton", e()),
        ("upset", p.clone()),
        ("angry", p.clone()),
        ("become", arrow(p.clone(), p.clone())),
        ("support", arrow(e(), p.clone())),
        ("not", arrow(t(), t())),
        ("ask", arrow(t(), p.clone())),
        ("both", arrow(t(), arrow(t(), t()))),
        ("every", arrow(p.clone(), arrow(p.clone(), t()))),
    ]
}

/// Seeded generator of random well-typed terms. Variable names are drawn
/// from a small pool so that shadowing and capture situations are common.
pub struct TermGen {
    pub rng: ChaCha8Rng,
}

/// `env` with `var` rebound, so shadowed entries are not reachable.
fn extend(env: &[(String, SemType)], var: &str, ty: &SemType) -> Vec<(String, SemType)> {
    let mut out: Vec<_> = env.iter().filter(|(n, _)| n != var).cloned().collect();
    out.push((var.to_string(), ty.clone()));
    out
}

fn small_types() -> Vec<SemType> {
    vec![e(), t(), arrow(e(), t())]
}

impl TermGen {
    pub fn new(seed: u64) -> TermGen {
        TermGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn var_name(&mut self) -> String {
        format!("v{}", self.rng.gen_range(0..4))
    }

    /// A term of type `ty` whose free variables come from `env`.
    pub fn term(&mut self, ty: &SemType, env: &[(String, SemType)], depth: usize) -> Term {
        let vars: Vec<&(String, SemType)> = env.iter().filter(|(_, vt)| vt == ty).collect();
        let consts: Vec<(&str, SemType)> = signature().into_iter().filter(|(_, ct)| ct == ty).collect();
        let choice = if depth == 0 { self.rng.gen_range(0..3) } else { self.rng.gen_range(0..7) };
        let picked = match choice {
            0 | 1 if !vars.is_empty() && self.rng.gen_bool(0.6) => {
                let (n, vt) = vars.choose(&mut self.rng).unwrap();
                Some(Term::var(n.clone(), vt.clone()))
            }
            0..=2 if !consts.is_empty() => {
                let (n, ct) = consts.choose(&mut self.rng).unwrap();
                Some(Term::constant(*n, ct.clone()))
            }
            3 if ty.is_arrow() => self.abstraction(ty, env, depth),
            4 => {
                // A redex: (\x:A. body) arg.
                let a = small_types().choose(&mut self.rng).unwrap().clone();
                let var = self.var_name();
                let inner = extend(env, &var, &a);
                let body = self.term(ty, &inner, depth - 1);
                let arg = self.term(&a, env, depth - 1);
                Some(Term::app(Term::abs(var, a, body), arg).unwrap())
            }
            _ => self.application(ty, env, depth),
        };
        picked.unwrap_or_else(|| self.fallback(ty, env, depth))
    }

    fn abstraction(&mut self, ty: &SemType, env: &[(String, SemType)], depth: usize) -> Option<Term> {
        let (a, b) = ty.split()?;
        let var = self.var_name();
        let inner = extend(env, &var, a);
        let body = self.term(b, &inner, depth.saturating_sub(1));
        Some(Term::abs(var, a.clone(), body))
    }

    /// A constant or variable whose type ends in `ty`, applied to enough
    /// generated arguments.
    fn application(&mut self, ty: &SemType, env: &[(String, SemType)], depth: usize) -> Option<Term> {
        let mut heads: Vec<(Term, Vec<SemType>)> = Vec::new();
        let mut consider = |head: Term| {
            let mut args = Vec::new();
            let mut cur = head.ty();
            loop {
                if cur == *ty && !args.is_empty() {
                    heads.push((head.clone(), args.clone()));
                }
                match cur.split() {
                    Some((a, b)) => {
                        args.push(a.clone());
                        cur = b.clone();
                    }
                    None => break,
                }
            }
        };
        for (n, ct) in signature() {
            consider(Term::constant(n, ct));
        }
        for (n, vt) in env {
            consider(Term::var(n.clone(), vt.clone()));
        }
        let (head, args) = heads.choose(&mut self.rng)?.clone();
        let mut out = head;
        for a in args {
            let arg = self.term(&a, env, depth.saturating_sub(1));
            out = Term::app(out, arg).unwrap();
        }
        Some(out)
    }

    fn fallback(&mut self, ty: &SemType, env: &[(String, SemType)], depth: usize) -> Term {
        if let Some((n, ct)) = signature().into_iter().find(|(_, ct)| ct == ty) {
            return Term::constant(n, ct);
        }
        if ty.is_arrow() {
            return self.abstraction(ty, env, depth).unwrap();
        }
        // `t` has no constant: build upset(bill).
        Term::app(Term::constant("upset", arrow(e(), t())), Term::constant("bill", e())).unwrap()
    }

    pub fn closed(&mut self, ty: &SemType, depth: usize) -> Term {
        self.term(ty, &[], depth)
    }

    /// Closed subterms of `t`, deduplicated by printed form.
    pub fn closed_subterms(t: &Term) -> Vec<Term> {
        let mut out: Vec<Term> = Vec::new();
        t.walk(&mut |s: &Term| {
            if s.is_closed() && !out.iter().any(|o| o.to_string() == s.to_string()) {
                out.push(s.clone());
            }
        });
        out
    }

    pub fn pick<T: Clone>(&mut self, items: &[T], max: usize) -> Vec<T> {
        let n = self.rng.gen_range(0..=max.min(items.len()));
        items.choose_multiple(&mut self.rng, n).cloned().collect()
    }
}

/// Substitutes `s` for the free variable `name`, shifting under binders.
pub fn subst_free(d: &Db, name: &str, s: &Db) -> Db {
    fn go(d: &Db, name: &str, s: &Db, depth: usize) -> Db {
        match d {
            Db::Free(n) if n == name => shift(s, depth as isize, 0),
            Db::App(f, a) => Db::App(Box::new(go(f, name, s, depth)), Box::new(go(a, name, s, depth))),
            Db::Abs(ty, b) => Db::Abs(ty.clone(), Box::new(go(b, name, s, depth + 1))),
            other => other.clone(),
        }
    }
    go(d, name, s, 0)
}

pub fn sig_map() -> std::collections::HashMap<String, SemType> {
    signature().into_iter().map(|(n, t)| (n.to_string(), t)).collect()
}

pub const NAMES: [&str; 9] = ["Bill", "Hillary", "John", "Mary", "Fred", "Clinton", "Bush", "Gore", "George"];

/// Past tense transitive verbs. Each doubles as its passive participle.
pub const TRANSITIVES: [&str; 4] = ["supported", "introduced", "arrested", "reversed"];

/// A random full clause, as bracketed text.
#[derive(Debug, Clone)]
pub struct Clause {
    pub text: String,
    /// Active paraphrase with the same logical form.
    pub active: String,
    pub subject: String,
    /// Second argument: an object NP or an AP predicate.
    pub complement: (&'static str, String),
    /// Whether the main verb is present tense.
    pub present: bool,
    pub passive: bool,
}

pub fn name(rng: &mut ChaCha8Rng) -> String {
    NAMES.choose(rng).unwrap().to_string()
}

pub fn distinct_names(rng: &mut ChaCha8Rng, n: usize) -> Vec<String> {
    NAMES.choose_multiple(rng, n).map(|s| s.to_string()).collect()
}

pub fn clause(rng: &mut ChaCha8Rng) -> Clause {
    let names = distinct_names(rng, 2);
    let (s, o) = (names[0].clone(), names[1].clone());
    match rng.gen_range(0..4) {
        0 => {
            let a = ["upset", "angry", "dishonest", "honest"].choose(rng).unwrap().to_string();
            let text = format!("(S (NP {s}) (VP (V became) (AP {a})))");
            Clause { active: text.clone(), text, subject: s, complement: ("AP", a), present: false, passive: false }
        }
        1 => {
            let past = TRANSITIVES.choose(rng).unwrap();
            let active = format!("(S (NP {s}) (VP (V {past}) (NP {o})))");
            let text = format!(
                "(S (NP {o}) (VP[voice=passive] (AUX was) (V[vform=passive-participle] {past}) (PP (P by) (NP {s}))))"
            );
            Clause { text, active, subject: s, complement: ("NP", o), present: false, passive: true }
        }
        _ => {
            let present = rng.gen_bool(0.5);
            let verb = if present {
                ["supports", "dislikes", "deserves"].choose(rng).unwrap()
            } else {
                *TRANSITIVES.choose(rng).unwrap()
            };
            let text = format!("(S (NP {s}) (VP (V {verb}) (NP {o})))");
            Clause { active: text.clone(), text, subject: s, complement: ("NP", o), present, passive: false }
        }
    }
}

/// An active clause, so it can antecede an elided VP under do.
pub fn active_clause(rng: &mut ChaCha8Rng) -> Clause {
    loop {
        let c = clause(rng);
        if !c.passive {
            return c;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
