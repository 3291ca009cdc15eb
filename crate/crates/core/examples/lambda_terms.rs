//! Parsing, normalizing, abstracting and solving typed lambda terms.

use std::collections::HashMap;

use coherent_ellipsis::lamcore::{abstract_over, beta_normalize, parse_term, reapply, solve_anaphor, SemType, Term};

fn main() {
    let e = SemType::Entity;
    let p = SemType::property();
    let sig: HashMap<String, SemType> = [
        ("bill", e.clone()),
        ("hillary", e.clone()),
        ("upset", p.clone()),
        ("angry", p.clone()),
        ("become", SemType::arrow(p.clone(), p.clone())),
    ]
    .into_iter()
    .map(|(n, t)| (n.to_string(), t))
    .collect();

    let redex = parse_term(r"(\v0:e->t.\v1:e.become(v0)(v1))(upset)(bill)", &sig).unwrap();
    let source = beta_normalize(&redex);
    println!("{redex}\n  => {source} : {}", source.ty());

    // Abstract the parallel elements, then fill in the target's.
    let pivots = [Term::constant("bill", e.clone()), Term::constant("upset", p.clone())];
    let open = abstract_over(&source, &pivots);
    println!("open proposition: {open}");
    let values = [Term::constant("hillary", e.clone()), Term::constant("angry", p.clone())];
    println!("applied to hillary, angry: {}", reapply(&open, &values).unwrap());

    // Solve P(bill) = become(upset)(bill) for the property P.
    let solution = solve_anaphor(&Term::var("v0", p), &pivots[..1], &source).unwrap();
    println!("P = {solution}");
}
