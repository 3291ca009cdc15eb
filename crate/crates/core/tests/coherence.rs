mod common;

use std::collections::BTreeSet;

use coherent_ellipsis::coherence::{
    candidate_relations, check_coherent_situation, CoherenceRelation, Family, KnowledgeBase, Literal, Step,
};
use coherent_ellipsis::grammar::{derive, parse_tree, Derivation, Lexicon};
use coherent_ellipsis::harness::{judge_link, load_corpus, Outcome, Reason, Resources};
use coherent_ellipsis::syntree::Supply;
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn lexicon() -> Lexicon {
    Lexicon::load(data("lexicon.tsv")).unwrap()
}

fn kb() -> KnowledgeBase {
    KnowledgeBase::load(data("kb.txt")).unwrap()
}

fn derived(text: &str, lex: &Lexicon) -> Derivation {
    derive(&parse_tree(text, lex).unwrap(), lex).unwrap()
}

fn cs_relations() -> Vec<CoherenceRelation> {
    CoherenceRelation::ALL.into_iter().filter(|r| r.family() == Family::CoherentSituation).collect()
}

/// Every chain of at most `depth` plausible edges, optionally followed by
/// one antonym step, enumerated without any visited-set pruning.
fn reachable(kb_edges: &[(Literal, Literal)], antonyms: &[(String, String)], from: &Literal, depth: usize) -> BTreeSet<Literal> {
    let mut frontier = vec![from.clone()];
    let mut out: BTreeSet<Literal> = BTreeSet::from([from.clone()]);
    for _ in 0..depth {
        let mut next = Vec::new();
        for lit in &frontier {
            for (a, b) in kb_edges {
                if a == lit {
                    next.push(b.clone());
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    let mut with_antonyms = out.clone();
    for lit in out.iter().filter(|l| l.1) {
        for (a, b) in antonyms {
            if *a == lit.0 {
                with_antonyms.insert((b.clone(), false));
            }
            if *b == lit.0 {
                with_antonyms.insert((a.clone(), false));
            }
        }
    }
    with_antonyms
}

fn chain_is_valid(kb: &KnowledgeBase, from: &Literal, to: &Literal, chain: &[Step], depth: usize) -> bool {
    let mut at = from.clone();
    let mut plausible = 0;
    for (i, step) in chain.iter().enumerate() {
        match step {
            Step::Plausible(a, b) => {
                if *a != at || !kb.plausible_edges().any(|(x, y)| x == a && y == b) {
                    return false;
                }
                plausible += 1;
                at = b.clone();
            }
            Step::Antonym(a, b) => {
                if i + 1 != chain.len() || !at.1 || at.0 != *a || !kb.antonyms(a, b) {
                    return false;
                }
                at = (b.clone(), false);
            }
        }
    }
    at == *to && plausible <= depth
}

/// A knowledge base with the plausible edges and antonym pairs it states.
type StatedKb = (KnowledgeBase, Vec<(Literal, Literal)>, Vec<(String, String)>);

fn random_kb(seed: u64) -> StatedKb {
    let mut r = rng(seed);
    let names = ["p", "q", "r", "s", "u"];
    let lit = |r: &mut rand_chacha::ChaCha8Rng| -> Literal {
        (names[r.gen_range(0..names.len())].to_string(), r.gen_bool(0.5))
    };
    let show = |l: &Literal| if l.1 { l.0.clone() } else { format!("~{}", l.0) };
    let mut text = String::new();
    let mut edges = Vec::new();
    for _ in 0..r.gen_range(0..14) {
        let (a, b) = (lit(&mut r), lit(&mut r));
        text.push_str(&format!("plausible {} {}\n", show(&a), show(&b)));
        edges.push((a, b));
    }
    let mut antonyms = Vec::new();
    for _ in 0..r.gen_range(0..5) {
        let (a, b) = (lit(&mut r).0, lit(&mut r).0);
        if a != b {
            text.push_str(&format!("antonym {a} {b}\n"));
            antonyms.push((a, b));
        }
    }
    (KnowledgeBase::parse(&text).unwrap(), edges, antonyms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn abduction_agrees_with_exhaustive_search(seed in any::<u64>(), depth in 0usize..4) {
        let (kb, edges, antonyms) = random_kb(seed);
        let names = ["p", "q", "r", "s", "u"];
        let lits: Vec<Literal> = names.iter().flat_map(|n| [(n.to_string(), true), (n.to_string(), false)]).collect();
        for from in &lits {
            let reach = reachable(&edges, &antonyms, from, depth);
            for to in &lits {
                let found = kb.implication_chain(from, to, depth);
                prop_assert_eq!(found.is_some(), reach.contains(to), "{:?} -> {:?}", from, to);
                if let Some(chain) = found {
                    prop_assert!(chain_is_valid(&kb, from, to, &chain, depth), "{:?}", chain);
                }
            }
        }
    }

    #[test]
    fn situation_verdicts_ignore_syntactic_form(seed in any::<u64>()) {
        let lex = lexicon();
        let kb = kb();
        let mut r = rng(seed);
        let a = clause(&mut r);
        let b = clause(&mut r);
        let res = Resources { lexicon: &lex, kb: &kb };
        for rel in cs_relations() {
            let surface = judge_link(&derived(&a.text, &lex), &derived(&b.text, &lex), rel, res, None, &mut Supply::new());
            let active = judge_link(&derived(&a.active, &lex), &derived(&b.active, &lex), rel, res, None, &mut Supply::new());
            prop_assert_eq!(surface.outcome, active.outcome);
            prop_assert_eq!(surface.lf.map(|t| t.canonical()), active.lf.map(|t| t.canonical()));
        }
    }
}

#[test]
fn conjunctions_select_relations() {
    use CoherenceRelation::*;
    assert_eq!(candidate_relations("and", None).unwrap(), vec![Parallel, Result]);
    assert_eq!(candidate_relations("and", Some("symmetric")).unwrap(), vec![Parallel]);
    assert_eq!(candidate_relations("and", Some("asymmetric")).unwrap(), vec![Result]);
    assert_eq!(candidate_relations("but", Some("violated-expectation")).unwrap(), vec![ViolatedExpectation]);
    assert_eq!(candidate_relations("even though", None).unwrap(), vec![DenialOfPreventer]);
    assert!(candidate_relations("because", Some("parallel")).is_err());
    assert!(candidate_relations("whereupon", None).is_err());
}

#[test]
fn situation_schemas_follow_the_knowledge_base() {
    let lex = lexicon();
    let kb = kb();
    let politician = derived("(S (NP Bill) (VP (AUX is) (NP (DET a) (N politician))))", &lex);
    let dishonest = derived("(S (NP[ref=bill] he) (VP (AUX is) (AP dishonest)))", &lex);
    let honest = derived("(S (NP[ref=bill] he) (VP (AUX is) (AP honest)))", &lex);
    let check = |rel, a: &Derivation, b: &Derivation| {
        check_coherent_situation(rel, a.closed_lf(), b.closed_lf(), &kb).unwrap().satisfied
    };
    assert!(check(CoherenceRelation::Result, &politician, &dishonest));
    assert!(!check(CoherenceRelation::Result, &dishonest, &politician));
    assert!(check(CoherenceRelation::Explanation, &dishonest, &politician));
    assert!(check(CoherenceRelation::ViolatedExpectation, &politician, &honest));
    assert!(check(CoherenceRelation::DenialOfPreventer, &honest, &politician));
    assert!(!check(CoherenceRelation::ViolatedExpectation, &politician, &dishonest));
}

#[test]
fn gapped_targets_are_unavailable_to_situation_relations() {
    let lex = lexicon();
    let kb = kb();
    let res = Resources { lexicon: &lex, kb: &kb };
    let source = derived("(S (NP Bill) (VP (V became) (AP upset)))", &lex);
    for target in ["(S[gapped] (NP Hillary) (AP angry))", "(S[stripped] (NP Hillary) (ADV too))"] {
        let target = derived(target, &lex);
        for rel in cs_relations() {
            let mut supply = Supply::above([&source.tree, &target.tree]);
            let v = judge_link(&source, &target, rel, res, None, &mut supply);
            assert_eq!(v.outcome, Outcome::Infelicitous(Reason::NoSententialSemantics));
            assert_eq!(supply.transforms(), 0);
        }
        let mut supply = Supply::above([&source.tree, &target.tree]);
        let v = judge_link(&source, &target, CoherenceRelation::Parallel, res, None, &mut supply);
        assert!(v.felicitous());
        assert!(supply.transforms() > 0);
    }
}

#[test]
fn only_common_topic_judgments_reconstruct_over_the_corpus() {
    let lex = lexicon();
    let kb = kb();
    let items = load_corpus(data("corpus.jsonl")).unwrap();
    let report = coherent_ellipsis::harness::judge_corpus(&items, &lex, &kb).unwrap();
    let mut ct_rebuilds = 0;
    for item in &report.items {
        for (_, v) in item.verdicts() {
            match v.relation.family() {
                Family::CoherentSituation => assert_eq!(v.reconstructions, 0, "{} {}", item.id, v.relation),
                Family::CommonTopic => ct_rebuilds += v.reconstructions,
            }
        }
    }
    assert!(ct_rebuilds > 0);
}
