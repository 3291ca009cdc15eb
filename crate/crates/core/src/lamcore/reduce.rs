use super::term::Term;

/// Beta-normal form by leftmost-outermost reduction. No eta steps.
pub fn beta_normalize(term: &Term) -> Term {
    match term {
        Term::Const { .. } | Term::Var { .. } => term.clone(),
        Term::Abs { var, ty, body } => Term::abs(var.clone(), ty.clone(), beta_normalize(body)),
        Term::App(f, a) => match beta_normalize(f) {
            Term::Abs { var, body, .. } => beta_normalize(&body.subst(&var, a)),
            head => Term::App(Box::new(head), Box::new(beta_normalize(a))),
        },
    }
}

pub fn is_beta_normal(term: &Term) -> bool {
    match term {
        Term::Const { .. } | Term::Var { .. } => true,
        Term::Abs { body, .. } => is_beta_normal(body),
        Term::App(f, a) => !matches!(**f, Term::Abs { .. }) && is_beta_normal(f) && is_beta_normal(a),
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    eq_in(t1, t2, &mut Vec::new(), &mut Vec::new())
}

fn eq_in<'a>(a: &'a Term, b: &'a Term, env_a: &mut Vec<&'a str>, env_b: &mut Vec<&'a str>) -> bool {
    match (a, b) {
        (Term::Const { name: n1, ty: t1 }, Term::Const { name: n2, ty: t2 }) => n1 == n2 && t1 == t2,
        (Term::Var { name: n1, ty: t1 }, Term::Var { name: n2, ty: t2 }) => {
            let i1 = env_a.iter().rposition(|v| v == n1);
            let i2 = env_b.iter().rposition(|v| v == n2);
            match (i1, i2) {
                (Some(i), Some(j)) => i == j,
                (None, None) => n1 == n2 && t1 == t2,
                _ => false,
            }
        }
        (Term::App(f1, a1), Term::App(f2, a2)) => {
            eq_in(f1, f2, env_a, env_b) && eq_in(a1, a2, env_a, env_b)
        }
        (Term::Abs { var: v1, ty: t1, body: b1 }, Term::Abs { var: v2, ty: t2, body: b2 }) => {
            if t1 != t2 {
                return false;
            }
            env_a.push(v1);
            env_b.push(v2);
            let same = eq_in(b1, b2, env_a, env_b);
            env_a.pop();
            env_b.pop();
            same
        }
        _ => false,
    }
}
