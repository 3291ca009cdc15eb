//! The two ways of resolving an elided VP: copying source syntax, or
//! solving for the missing property in the semantics.

use coherent_ellipsis::coherence::KnowledgeBase;
use coherent_ellipsis::ellipsis::{resolve_vpe_semantic, resolve_vpe_syntactic};
use coherent_ellipsis::grammar::{derive, parse_tree, Lexicon};
use coherent_ellipsis::syntree::Supply;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let lexicon = Lexicon::load(format!("{data}/lexicon.tsv")).unwrap();
    let kb = KnowledgeBase::load(format!("{data}/kb.txt")).unwrap();
    let clause = |s: &str| derive(&parse_tree(s, &lexicon).unwrap(), &lexicon).unwrap();

    let target = clause("(S (NP the-ICC) (VP[elided] (AUX did) (ADV too)))");
    for source in [
        "(S (NP the-FBI) (VP (V reversed) (NP the-decision)))",
        "(S (NP the-decision) (VP[voice=passive] (AUX was) (V[vform=passive-participle] reversed) (PP (P by) (NP the-FBI))))",
    ] {
        let source = clause(source);
        println!("source: {}", source.tree);
        let mut supply = Supply::above([&source.tree, &target.tree]);
        match resolve_vpe_syntactic(&source, &target, &lexicon, Some("reverse"), &mut supply) {
            Ok(r) => println!("  syntactic copy:    {}", r.lf),
            Err(e) => println!("  syntactic copy:    fails ({e})"),
        }
        match resolve_vpe_semantic(&source, &target, &kb, &lexicon, Some("reverse")) {
            Ok(r) => println!("  semantic anaphora: {}", r.lf),
            Err(e) => println!("  semantic anaphora: fails ({e})"),
        }
    }
}
