//! Rebuilding a gapped clause from its source, and what happens to the
//! same clause under a cause-effect reading.

use coherent_ellipsis::coherence::{CoherenceRelation, KnowledgeBase};
use coherent_ellipsis::ellipsis::{gapping_pivots, resolve_gapping};
use coherent_ellipsis::grammar::{derive, parse_tree, Lexicon};
use coherent_ellipsis::harness::{judge_link, Resources};
use coherent_ellipsis::syntree::Supply;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let lexicon = Lexicon::load(format!("{data}/lexicon.tsv")).unwrap();
    let kb = KnowledgeBase::load(format!("{data}/kb.txt")).unwrap();
    let clause = |s: &str| derive(&parse_tree(s, &lexicon).unwrap(), &lexicon).unwrap();

    let source = clause("(S (NP Bill) (VP (V became) (AP upset)))");
    let target = clause("(S[gapped] (NP Hillary) (AP angry))");
    println!("gapped target LF: {:?}", target.lf);

    let pivots = gapping_pivots(&target.tree);
    let rebuilt = resolve_gapping(&source, &target, &pivots, &lexicon, &mut Supply::new()).unwrap();
    for note in &rebuilt.notes {
        println!("{note}");
    }
    println!("LF: {}", rebuilt.lf);

    let res = Resources { lexicon: &lexicon, kb: &kb };
    for rel in [CoherenceRelation::Parallel, CoherenceRelation::Result] {
        let v = judge_link(&source, &target, rel, res, None, &mut Supply::new());
        println!("{rel}: {:?}", v.outcome);
    }
}
