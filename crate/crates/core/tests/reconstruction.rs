mod common;

use std::collections::BTreeSet;

use coherent_ellipsis::ellipsis::{
    resolve_gapping, resolve_vpe_semantic, resolve_vpe_syntactic, EllipsisError, Route,
};
use coherent_ellipsis::grammar::{derive, node_semantics, parse_tree, Derivation, Lexicon};
use coherent_ellipsis::coherence::KnowledgeBase;
use coherent_ellipsis::lamcore::{abstract_over, alpha_eq, reapply};
use coherent_ellipsis::syntree::{
    align_parallel, copy_vp, front_parallel, parse_bracketed, Category, Supply, SynNode, SyntreeError,
};
use common::*;
use proptest::prelude::*;

fn lexicon() -> Lexicon {
    Lexicon::load(data("lexicon.tsv")).unwrap()
}

fn kb() -> KnowledgeBase {
    KnowledgeBase::load(data("kb.txt")).unwrap()
}

fn derived(text: &str, lex: &Lexicon) -> Derivation {
    derive(&parse_tree(text, lex).unwrap(), lex).unwrap()
}

fn argument_categories(tree: &SynNode) -> Vec<Category> {
    let mut out = vec![Category::NP];
    if let Some(vp) = tree.main_vp() {
        for c in &vp.children {
            if matches!(c.cat, Category::NP | Category::AP | Category::PP) {
                out.push(c.cat);
            }
        }
    }
    out
}

fn trace_ids(node: &SynNode) -> BTreeSet<usize> {
    node.nodes().iter().filter_map(|n| n.trace).collect()
}

fn binder_ids(node: &SynNode) -> BTreeSet<usize> {
    node.nodes().iter().filter_map(|n| n.binds).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fronting_preserves_semantics(seed in any::<u64>(), mask in 1u8..8) {
        let lex = lexicon();
        let c = clause(&mut rng(seed));
        let d = derived(&c.text, &lex);
        let cats: Vec<Category> = argument_categories(&d.tree)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, c)| c)
            .collect();
        let fronted = front_parallel(&d.tree, &cats, &mut Supply::new()).unwrap();
        let again = derive(&fronted, &lex).unwrap();
        prop_assert!(alpha_eq(again.lf.as_ref().unwrap(), d.lf.as_ref().unwrap()), "{}", fronted);
        prop_assert!(again.pending.is_empty());
    }

    #[test]
    fn gapping_reconstruction_matches_abstraction(seed in any::<u64>()) {
        let lex = lexicon();
        let mut r = rng(seed);
        let c = active_clause(&mut r);
        let (cat, _) = c.complement;
        let replacement = match cat {
            "AP" => ["upset", "angry", "dishonest", "honest"][(seed % 4) as usize].to_string(),
            _ => name(&mut r),
        };
        let remnant_subject = name(&mut r);
        let target_text = format!("(S[gapped] (NP {remnant_subject}) ({cat} {replacement}))");
        let source = derived(&c.text, &lex);
        let target = derived(&target_text, &lex);
        let pivots = [Category::NP, cat.parse().unwrap()];
        let got = resolve_gapping(&source, &target, &pivots, &lex, &mut Supply::new()).unwrap();

        let sem = |text: &str| node_semantics(&parse_tree(text, &lex).unwrap(), &lex).unwrap();
        let source_pivots = [sem(&format!("(NP {})", c.subject)), sem(&format!("({cat} {})", c.complement.1))];
        let target_values = [sem(&format!("(NP {remnant_subject})")), sem(&format!("({cat} {replacement})"))];
        let open = abstract_over(source.lf.as_ref().unwrap(), &source_pivots);
        let want = reapply(&open, &target_values).unwrap();
        prop_assert!(alpha_eq(&got.lf, &want), "{} vs {}", got.lf, want);
        prop_assert_eq!(got.route, Route::SyntacticCopy);
    }

    #[test]
    fn copied_vps_carry_no_outside_traces(seed in any::<u64>()) {
        let lex = lexicon();
        let c = active_clause(&mut rng(seed));
        let tree = parse_tree(&c.text, &lex).unwrap();
        let aux = SynNode::leaf(Category::AUX, if c.present { "does" } else { "did" });
        let copy = copy_vp(tree.main_vp().unwrap(), &aux, &lex, &mut Supply::new()).unwrap();
        prop_assert!(trace_ids(&copy).is_subset(&binder_ids(&copy)));

        // Once the complement has been fronted, the VP mentions a trace
        // bound outside it and cannot be copied.
        let fronted = front_parallel(&tree, &argument_categories(&tree), &mut Supply::new()).unwrap();
        let inner = fronted.children.last().unwrap();
        let vp = inner.main_vp().unwrap();
        let refused = copy_vp(vp, &aux, &lex, &mut Supply::new());
        prop_assert!(matches!(refused, Err(SyntreeError::UnsuitableAntecedent(_))), "{:?} from {}", refused, fronted);
    }

    #[test]
    fn alignment_is_symmetric(a in any::<u64>(), b in any::<u64>()) {
        let lex = lexicon();
        let x = parse_tree(&clause(&mut rng(a)).text, &lex).unwrap();
        let y = parse_tree(&clause(&mut rng(b)).text, &lex).unwrap();
        let xy = align_parallel(&x, &y);
        let yx = align_parallel(&y, &x);
        let swapped: Vec<_> = yx.pairs.iter().map(|(s, t)| (t.clone(), s.clone())).collect();
        prop_assert_eq!(xy.pairs, swapped);
        prop_assert_eq!(xy.unpaired_source, yx.unpaired_target);
        prop_assert_eq!(xy.unpaired_target, yx.unpaired_source);
    }

    #[test]
    fn trees_print_and_parse_back(seed in any::<u64>()) {
        let lex = lexicon();
        let c = clause(&mut rng(seed));
        let tree = parse_tree(&c.text, &lex).unwrap();
        prop_assert_eq!(parse_bracketed(&tree.to_string()).unwrap(), tree.clone());
        let fronted = front_parallel(&tree, &argument_categories(&tree), &mut Supply::new()).unwrap();
        prop_assert_eq!(parse_bracketed(&fronted.to_string()).unwrap(), fronted);
    }

    #[test]
    fn passive_and_active_paraphrases_agree(seed in any::<u64>()) {
        let lex = lexicon();
        let c = clause(&mut rng(seed));
        let a = derived(&c.text, &lex);
        let b = derived(&c.active, &lex);
        prop_assert!(alpha_eq(a.lf.as_ref().unwrap(), b.lf.as_ref().unwrap()));
    }

    #[test]
    fn elided_vp_routes_agree_on_active_sources(seed in any::<u64>()) {
        let lex = lexicon();
        let kb = kb();
        let mut r = rng(seed);
        let c = active_clause(&mut r);
        let aux = if c.present { "does" } else { "did" };
        let target_text = format!("(S (NP {}) (VP[elided] (AUX {aux}) (ADV too)))", name(&mut r));
        let source = derived(&c.text, &lex);
        let target = derived(&target_text, &lex);
        let mut supply = Supply::above([&source.tree, &target.tree]);
        let syn = resolve_vpe_syntactic(&source, &target, &lex, None, &mut supply).unwrap();
        let sem = resolve_vpe_semantic(&source, &target, &kb, &lex, None).unwrap();
        prop_assert!(alpha_eq(&syn.lf, &sem.lf), "{} vs {}", syn.lf, sem.lf);
        prop_assert_eq!(sem.route, Route::SemanticAnaphora);
        prop_assert!(sem.tree.is_none());
    }
}

#[test]
fn semantic_resolution_leaves_syntax_alone() {
    let lex = lexicon();
    let source = derived("(S (NP Bill) (VP (V became) (AP upset)))", &lex);
    let target = derived("(S (NP Hillary) (VP[elided] (AUX did) (ADV too)))", &lex);
    let before = target.clone();
    let res = resolve_vpe_semantic(&source, &target, &kb(), &lex, None).unwrap();
    assert_eq!(target, before);
    assert_eq!(res.lf.to_string(), "become(upset)(hillary)");
    let resolved = res.derivation(&target);
    assert_eq!(resolved.tree, target.tree);
    assert!(resolved.pending.is_empty());
}

#[test]
fn passive_sources_do_not_copy_under_do() {
    let lex = lexicon();
    let source = derived(
        "(S (NP the-decision) (VP[voice=passive] (AUX was) (V[vform=passive-participle] reversed) (PP (P by) (NP the-FBI))))",
        &lex,
    );
    let target = derived("(S (NP the-ICC) (VP[elided] (AUX did) (ADV too)))", &lex);
    let mut supply = Supply::above([&source.tree, &target.tree]);
    let err = resolve_vpe_syntactic(&source, &target, &lex, None, &mut supply).unwrap_err();
    assert!(matches!(err, EllipsisError::FormMismatch(_)), "{err}");
    let sem = resolve_vpe_semantic(&source, &target, &kb(), &lex, Some("reverse")).unwrap();
    assert_eq!(sem.lf.to_string(), "reverse(decision)(icc)");
}

#[test]
fn remnants_must_match_the_source() {
    let lex = lexicon();
    let source = derived("(S (NP Bill) (VP (V became) (AP upset)))", &lex);
    let target = derived("(S[gapped] (NP Hillary) (NP George))", &lex);
    let err = resolve_gapping(&source, &target, &[Category::NP, Category::NP], &lex, &mut Supply::new()).unwrap_err();
    assert!(matches!(err, EllipsisError::RemnantMismatch(_)), "{err}");
}
