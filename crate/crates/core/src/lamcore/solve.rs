use super::reduce::{alpha_eq, beta_normalize};
use super::term::{fresh_index, Term};
use super::LambdaError;

/// Builds the open proposition `\v_n...\v_1. term[pivot_i := v_i]`.
///
/// Every occurrence of each pivot is abstracted. A pivot that does not occur
/// yields a vacuous binder. The innermost binder belongs to the first pivot,
/// so the result is re-applied to the pivots last-to-first (see [`reapply`]).
pub fn abstract_over(term: &Term, pivots: &[Term]) -> Term {
    let first = fresh_index(std::iter::once(term).chain(pivots.iter()));
    let mut body = term.clone();
    let mut binders = Vec::with_capacity(pivots.len());
    for (k, pivot) in pivots.iter().enumerate() {
        let var = format!("v{}", first + k);
        body = replace_subterm(&body, pivot, &Term::var(var.clone(), pivot.ty()));
        binders.push((var, pivot.ty()));
    }
    for (var, ty) in binders {
        body = Term::abs(var, ty, body);
    }
    body
}

/// Applies an [`abstract_over`] result to replacement values given in pivot
/// order, and normalizes.
pub fn reapply(open: &Term, values: &[Term]) -> Result<Term, LambdaError> {
    let applied = Term::apply_all(open.clone(), values.iter().rev())?;
    Ok(beta_normalize(&applied))
}

fn replace_subterm(term: &Term, pivot: &Term, with: &Term) -> Term {
    if alpha_eq(term, pivot) {
        return with.clone();
    }
    match term {
        Term::App(f, a) => Term::App(
            Box::new(replace_subterm(f, pivot, with)),
            Box::new(replace_subterm(a, pivot, with)),
        ),
        Term::Abs { var, ty, body } => Term::abs(var.clone(), ty.clone(), replace_subterm(body, pivot, with)),
        _ => term.clone(),
    }
}

/// Solves `anaphor(args...) = rhs` for the anaphor, abstracting every
/// occurrence of each argument.
pub fn solve_anaphor(anaphor: &Term, args: &[Term], rhs: &Term) -> Result<Term, LambdaError> {
    let Term::Var { ty: wanted, .. } = anaphor else {
        return Err(LambdaError::NotAVariable(anaphor.to_string()));
    };
    for t in args.iter().chain(std::iter::once(rhs)) {
        if !t.is_closed() {
            return Err(LambdaError::NotClosed(t.to_string()));
        }
    }
    let rhs = beta_normalize(rhs);
    let reversed: Vec<Term> = args.iter().rev().cloned().collect();
    let solution = abstract_over(&rhs, &reversed);
    if solution.ty() != *wanted {
        return Err(LambdaError::TypeMismatch {
            function: anaphor.to_string(),
            expected: wanted.to_string(),
            found: solution.ty().to_string(),
        });
    }
    let check = beta_normalize(&Term::apply_all(solution.clone(), args)?);
    debug_assert!(alpha_eq(&check, &rhs));
    Ok(solution)
}
