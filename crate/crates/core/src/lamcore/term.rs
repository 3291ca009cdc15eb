use std::collections::BTreeSet;

use super::types::SemType;
use super::LambdaError;

/// A simply-typed lambda term. Variables are named `v<N>`; constants carry
/// their type so every subterm can be typed without an environment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Const { name: String, ty: SemType },
    Var { name: String, ty: SemType },
    App(Box<Term>, Box<Term>),
    Abs { var: String, ty: SemType, body: Box<Term> },
}

impl Term {
    pub fn constant(name: impl Into<String>, ty: SemType) -> Term {
        Term::Const { name: name.into(), ty }
    }

    pub fn var(name: impl Into<String>, ty: SemType) -> Term {
        Term::Var { name: name.into(), ty }
    }

    /// Variable `v<index>`.
    pub fn indexed_var(index: usize, ty: SemType) -> Term {
        Term::Var { name: format!("v{index}"), ty }
    }

    pub fn abs(var: impl Into<String>, ty: SemType, body: Term) -> Term {
        Term::Abs { var: var.into(), ty, body: Box::new(body) }
    }

    /// Type-checked application.
    pub fn app(f: Term, arg: Term) -> Result<Term, LambdaError> {
        let fty = f.ty();
        let aty = arg.ty();
        if fty.apply(&aty).is_none() {
            return Err(LambdaError::TypeMismatch {
                function: f.to_string(),
                expected: fty.split().map(|(a, _)| a.to_string()).unwrap_or_else(|| "a function".into()),
                found: aty.to_string(),
            });
        }
        Ok(Term::App(Box::new(f), Box::new(arg)))
    }

    /// Applies `f` to each argument in order: `f(a0)(a1)...`.
    pub fn apply_all<'a>(f: Term, args: impl IntoIterator<Item = &'a Term>) -> Result<Term, LambdaError> {
        args.into_iter().try_fold(f, |acc, a| Term::app(acc, a.clone()))
    }

    /// The type of a well-typed term.
    pub fn ty(&self) -> SemType {
        match self {
            Term::Const { ty, .. } | Term::Var { ty, .. } => ty.clone(),
            Term::Abs { ty, body, .. } => SemType::arrow(ty.clone(), body.ty()),
            Term::App(f, _) => match f.ty() {
                SemType::Arrow(_, r) => *r,
                other => other,
            },
        }
    }

    /// Full type check; constructors outside [`Term::app`] do not check.
    pub fn typecheck(&self) -> Result<SemType, LambdaError> {
        match self {
            Term::Const { ty, .. } | Term::Var { ty, .. } => Ok(ty.clone()),
            Term::Abs { ty, body, var } => {
                body.check_var_uses(var, ty)?;
                Ok(SemType::arrow(ty.clone(), body.typecheck()?))
            }
            Term::App(f, a) => {
                let fty = f.typecheck()?;
                let aty = a.typecheck()?;
                fty.apply(&aty).cloned().ok_or_else(|| LambdaError::TypeMismatch {
                    function: f.to_string(),
                    expected: fty.split().map(|(a, _)| a.to_string()).unwrap_or_else(|| "a function".into()),
                    found: aty.to_string(),
                })
            }
        }
    }

    fn check_var_uses(&self, var: &str, ty: &SemType) -> Result<(), LambdaError> {
        match self {
            Term::Var { name, ty: vty } if name == var && vty != ty => Err(LambdaError::TypeMismatch {
                function: format!("\\{var}"),
                expected: ty.to_string(),
                found: vty.to_string(),
            }),
            Term::Abs { var: inner, .. } if inner == var => Ok(()),
            Term::Abs { body, .. } => body.check_var_uses(var, ty),
            Term::App(f, a) => {
                f.check_var_uses(var, ty)?;
                a.check_var_uses(var, ty)
            }
            _ => Ok(()),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var { name, .. } => {
                if !bound.contains(&name.as_str()) {
                    out.insert(name.clone());
                }
            }
            Term::Const { .. } => {}
            Term::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            Term::Abs { var, body, .. } => {
                bound.push(var);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn occurs_free(&self, var: &str) -> bool {
        match self {
            Term::Var { name, .. } => name == var,
            Term::Const { .. } => false,
            Term::App(f, a) => f.occurs_free(var) || a.occurs_free(var),
            Term::Abs { var: bound, body, .. } => bound != var && body.occurs_free(var),
        }
    }

    /// Highest `N` among variables named `v<N>`, bound or free.
    pub(crate) fn max_var_index(&self) -> Option<usize> {
        match self {
            Term::Var { name, .. } => var_index(name),
            Term::Const { .. } => None,
            Term::App(f, a) => f.max_var_index().max(a.max_var_index()),
            Term::Abs { var, body, .. } => var_index(var).max(body.max_var_index()),
        }
    }

    /// All constants in the term, leftmost first, without duplicates.
    pub fn constants(&self) -> Vec<(String, SemType)> {
        let mut out: Vec<(String, SemType)> = Vec::new();
        self.walk(&mut |t| {
            if let Term::Const { name, ty } = t {
                if !out.iter().any(|(n, _)| n == name) {
                    out.push((name.clone(), ty.clone()));
                }
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Term)) {
        visit(self);
        match self {
            Term::App(f, a) => {
                f.walk(visit);
                a.walk(visit);
            }
            Term::Abs { body, .. } => body.walk(visit),
            _ => {}
        }
    }

    /// Head and arguments of an application spine: `f(a)(b)` gives `(f, [a, b])`.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut head = self;
        while let Term::App(f, a) = head {
            args.push(a.as_ref());
            head = f;
        }
        args.reverse();
        (head, args)
    }

    pub fn const_name(&self) -> Option<&str> {
        match self {
            Term::Const { name, .. } => Some(name),
            _ => None,
        }
    }

    /// Capture-avoiding substitution of `replacement` for free `var`.
    pub fn subst(&self, var: &str, replacement: &Term) -> Term {
        if !self.occurs_free(var) {
            return self.clone();
        }
        match self {
            Term::Var { .. } => replacement.clone(),
            Term::Const { .. } => self.clone(),
            Term::App(f, a) => Term::App(
                Box::new(f.subst(var, replacement)),
                Box::new(a.subst(var, replacement)),
            ),
            Term::Abs { var: bound, ty, body } => {
                if replacement.occurs_free(bound) {
                    let next = fresh_index([self, replacement]).max(var_index(var).map_or(0, |i| i + 1));
                    let renamed = format!("v{next}");
                    let body = body.subst(bound, &Term::var(renamed.clone(), ty.clone()));
                    Term::abs(renamed, ty.clone(), body.subst(var, replacement))
                } else {
                    Term::abs(bound.clone(), ty.clone(), body.subst(var, replacement))
                }
            }
        }
    }

    /// Replaces every constant named `name` by `with`.
    pub fn replace_const(&self, name: &str, with: &Term) -> Term {
        match self {
            Term::Const { name: n, .. } if n == name => with.clone(),
            Term::App(f, a) => Term::App(
                Box::new(f.replace_const(name, with)),
                Box::new(a.replace_const(name, with)),
            ),
            Term::Abs { var, ty, body } => Term::abs(var.clone(), ty.clone(), body.replace_const(name, with)),
            _ => self.clone(),
        }
    }

    /// Renames bound variables to `v0, v1, ...` in binding order, skipping
    /// indices used by free variables. Alpha-equal terms canonicalize to
    /// identical terms.
    pub fn canonical(&self) -> Term {
        let taken: BTreeSet<usize> = self.free_vars().iter().filter_map(|v| var_index(v)).collect();
        let mut next = 0;
        self.canonical_in(&mut Vec::new(), &taken, &mut next)
    }

    fn canonical_in(&self, env: &mut Vec<(String, String)>, taken: &BTreeSet<usize>, next: &mut usize) -> Term {
        match self {
            Term::Var { name, ty } => {
                let mapped = env.iter().rev().find(|(old, _)| old == name).map(|(_, new)| new.clone());
                Term::var(mapped.unwrap_or_else(|| name.clone()), ty.clone())
            }
            Term::Const { .. } => self.clone(),
            Term::App(f, a) => Term::App(
                Box::new(f.canonical_in(env, taken, next)),
                Box::new(a.canonical_in(env, taken, next)),
            ),
            Term::Abs { var, ty, body } => {
                while taken.contains(next) {
                    *next += 1;
                }
                let new = format!("v{next}");
                *next += 1;
                env.push((var.clone(), new.clone()));
                let body = body.canonical_in(env, taken, next);
                env.pop();
                Term::abs(new, ty.clone(), body)
            }
        }
    }
}

pub(crate) fn var_index(name: &str) -> Option<usize> {
    name.strip_prefix('v').and_then(|rest| {
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            None
        } else {
            rest.parse().ok()
        }
    })
}

/// Smallest index strictly above every `v<N>` in the given terms.
pub(crate) fn fresh_index<'a>(terms: impl IntoIterator<Item = &'a Term>) -> usize {
    terms
        .into_iter()
        .filter_map(Term::max_var_index)
        .max()
        .map_or(0, |m| m + 1)
}

/// Whether a pending variable stands for a trace or an anaphor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Trace,
    Anaphor,
}

/// A pending assumption: a free variable waiting to be discharged by
/// substituting a closed term for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assumption {
    pub id: usize,
    pub flavor: Flavor,
    pub var: String,
    pub ty: SemType,
}

impl Assumption {
    /// Variables for assumptions live above the range used by lexical
    /// terms so they never collide with lexicon binders.
    pub const VAR_BASE: usize = 1000;

    pub fn new(id: usize, flavor: Flavor, ty: SemType) -> Assumption {
        Assumption { id, flavor, var: format!("v{}", Self::VAR_BASE + id), ty }
    }

    pub fn as_term(&self) -> Term {
        Term::var(self.var.clone(), self.ty.clone())
    }

    /// Substitutes the closed `value` for this assumption's variable.
    pub fn discharge(&self, term: &Term, value: &Term) -> Result<Term, LambdaError> {
        if value.ty() != self.ty {
            return Err(LambdaError::TypeMismatch {
                function: self.var.clone(),
                expected: self.ty.to_string(),
                found: value.ty().to_string(),
            });
        }
        if !value.is_closed() {
            return Err(LambdaError::NotClosed(value.to_string()));
        }
        Ok(term.subst(&self.var, value))
    }
}
