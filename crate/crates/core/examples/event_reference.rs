//! Event pronouns after main-verb "do" pick up the source event.

use coherent_ellipsis::coherence::KnowledgeBase;
use coherent_ellipsis::ellipsis::resolve_event_ref;
use coherent_ellipsis::grammar::{classify_form, derive, parse_tree, Lexicon};

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let lexicon = Lexicon::load(format!("{data}/lexicon.tsv")).unwrap();
    let kb = KnowledgeBase::load(format!("{data}/kb.txt")).unwrap();
    let clause = |s: &str| derive(&parse_tree(s, &lexicon).unwrap(), &lexicon).unwrap();

    let target = clause("(S (NP Hillary) (VP (V did) (NP it) (ADV too)))");
    println!("form: {:?}", classify_form(&target.tree));
    for source in ["(S (NP Bill) (VP (V supported) (NP Clinton)))", "(S (NP Bill) (VP (V dislikes) (NP George)))"] {
        match resolve_event_ref(&clause(source), &target, &kb, &lexicon, None) {
            Ok(r) => println!("{source}\n  => {}", r.lf),
            Err(e) => println!("{source}\n  => {e}"),
        }
    }
    // "it" needs main-verb do to be interpretable.
    let bad = parse_tree("(S (NP Bill) (VP (AUX was) (NP it) (ADV too)))", &lexicon).unwrap();
    println!("{}", derive(&bad, &lexicon).unwrap_err());
}
