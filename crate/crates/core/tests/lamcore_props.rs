mod common;

use coherent_ellipsis::lamcore::{
    abstract_over, alpha_eq, beta_normalize, is_beta_normal, parse_term, reapply, solve_anaphor, Term,
};
use common::*;
use proptest::prelude::*;

fn closed_term(seed: u64) -> Term {
    let mut g = TermGen::new(seed);
    let ty = [e(), t(), arrow(e(), t())][(seed % 3) as usize].clone();
    g.closed(&ty, 4)
}

/// A term with free variables `v0:e` and `v1:t`.
fn open_term(seed: u64) -> Term {
    let env = vec![("v0".to_string(), e()), ("v1".to_string(), t())];
    TermGen::new(seed).term(&t(), &env, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn generated_terms_typecheck(seed in any::<u64>()) {
        let term = closed_term(seed);
        prop_assert_eq!(term.typecheck().unwrap(), term.ty());
    }

    #[test]
    fn normalization_agrees_with_oracle(seed in any::<u64>()) {
        let term = closed_term(seed);
        let nf = beta_normalize(&term);
        prop_assert_eq!(to_db(&nf), oracle_nf(&term), "term {}", term);
        prop_assert!(!has_redex(&to_db(&nf)));
    }

    #[test]
    fn normalization_of_open_terms_agrees_with_oracle(seed in any::<u64>()) {
        let term = open_term(seed);
        prop_assert_eq!(to_db(&beta_normalize(&term)), oracle_nf(&term), "term {}", term);
    }

    #[test]
    fn normalization_is_idempotent_and_type_preserving(seed in any::<u64>()) {
        let term = closed_term(seed);
        let nf = beta_normalize(&term);
        prop_assert!(is_beta_normal(&nf));
        prop_assert_eq!(beta_normalize(&nf), nf.clone());
        prop_assert_eq!(nf.typecheck().unwrap(), term.ty());
    }

    #[test]
    fn alpha_equality_agrees_with_oracle(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (beta_normalize(&closed_term(a)), beta_normalize(&closed_term(b)));
        prop_assert_eq!(alpha_eq(&x, &y), oracle_alpha_eq(&x, &y));
        prop_assert!(alpha_eq(&x, &x.canonical()));
        prop_assert!(oracle_alpha_eq(&x, &x.canonical()));
    }

    #[test]
    fn substitution_avoids_capture(seed in any::<u64>(), rseed in any::<u64>()) {
        let term = open_term(seed);
        // The replacement mentions v1 free, which the target often binds.
        let replacement = TermGen::new(rseed).term(&e(), &[("v1".to_string(), e())], 2);
        let replacement = replacement.subst("v1", &Term::var("v3", e()));
        let got = term.subst("v0", &replacement);
        let want = subst_free(&to_db(&term), "v0", &to_db(&replacement));
        prop_assert_eq!(to_db(&got), want);
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        let term = closed_term(seed);
        let parsed = parse_term(&term.to_string(), &sig_map()).unwrap();
        prop_assert!(alpha_eq(&parsed, &term), "{} reparsed as {}", term, parsed);
    }

    #[test]
    fn abstraction_round_trips(seed in any::<u64>(), pick in any::<u64>()) {
        let term = closed_term(seed);
        let subs = TermGen::closed_subterms(&term);
        let mut g = TermGen::new(pick);
        let pivots = g.pick(&subs, 3);
        let open = abstract_over(&term, &pivots);
        prop_assert!(open.is_closed());
        let back = reapply(&open, &pivots).unwrap();
        prop_assert_eq!(to_db(&back), oracle_nf(&term));
    }

    #[test]
    fn solutions_reproduce_the_right_hand_side(seed in any::<u64>(), pick in any::<u64>()) {
        let rhs = beta_normalize(&TermGen::new(seed).closed(&t(), 4));
        let subs = TermGen::closed_subterms(&rhs);
        let args = TermGen::new(pick).pick(&subs, 3);
        let wanted = args.iter().rev().fold(t(), |acc, a| arrow(a.ty(), acc));
        let solution = solve_anaphor(&Term::var("v0", wanted), &args, &rhs).unwrap();
        let applied = Term::apply_all(solution, &args).unwrap();
        prop_assert_eq!(oracle_nf(&applied), oracle_nf(&rhs));
    }
}

#[test]
fn capture_in_a_known_case() {
    // (\v0:e.\v1:e.support(v0)(v1))(v1) must not capture the free v1.
    let body = parse_term("\\v0:e.\\v1:e.support(v0)(v1)", &sig_map()).unwrap();
    let redex = Term::app(body, Term::var("v1", e())).unwrap();
    let nf = beta_normalize(&redex);
    assert_eq!(to_db(&nf), oracle_nf(&redex));
    assert!(nf.occurs_free("v1"));
}

#[test]
fn solver_rejects_wrong_type_and_open_terms() {
    let rhs = parse_term("upset(bill)", &sig_map()).unwrap();
    let bill = Term::constant("bill", e());
    assert!(solve_anaphor(&Term::var("v0", t()), std::slice::from_ref(&bill), &rhs).is_err());
    let open = Term::app(Term::constant("upset", arrow(e(), t())), Term::var("v5", e())).unwrap();
    assert!(solve_anaphor(&Term::var("v0", arrow(e(), t())), &[bill], &open).is_err());
}

#[test]
fn generator_exercises_redexes_and_shadowing() {
    let terms: Vec<Term> = (0..300).map(closed_term).collect();
    let redexes = terms.iter().filter(|t| has_redex(&to_db(t))).count();
    let shadowing = terms
        .iter()
        .filter(|t| {
            let mut seen = false;
            t.walk(&mut |s| {
                if let Term::Abs { var, body, .. } = s {
                    body.walk(&mut |b| {
                        if matches!(b, Term::Abs { var: inner, .. } if inner == var) {
                            seen = true;
                        }
                    });
                }
            });
            seen
        })
        .count();
    assert!(redexes > 60, "only {redexes} terms with redexes");
    assert!(shadowing > 10, "only {shadowing} terms with shadowing");
}
