//! Common Topic and Coherent Situation checks on full clauses.

use coherent_ellipsis::coherence::{check_common_topic, check_coherent_situation, CoherenceRelation, KnowledgeBase};
use coherent_ellipsis::grammar::{derive, parse_tree, Lexicon};

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let lexicon = Lexicon::load(format!("{data}/lexicon.tsv")).unwrap();
    let kb = KnowledgeBase::load(format!("{data}/kb.txt")).unwrap();
    let clause = |s: &str| derive(&parse_tree(s, &lexicon).unwrap(), &lexicon).unwrap();

    let a = clause("(S (NP John) (VP (V organized-rallies) (PP (P for) (NP Clinton))))");
    let b = clause("(S (NP Fred) (VP (V distributed-pamphlets) (PP (P for) (NP Clinton))))");
    let ct = check_common_topic(CoherenceRelation::Parallel, &a, &b, &kb, &lexicon).unwrap();
    println!("Parallel: satisfied={} via {:?}", ct.satisfied, ct.generalized);

    let politician = clause("(S (NP Bill) (VP (AUX is) (NP (DET a) (N politician))))");
    let dishonest = clause("(S (NP[ref=bill] he) (VP (AUX is) (AP dishonest)))");
    let honest = clause("(S (NP[ref=bill] he) (VP (AUX is) (AP honest)))");
    for (rel, x, y) in [
        (CoherenceRelation::Result, &politician, &dishonest),
        (CoherenceRelation::ViolatedExpectation, &politician, &honest),
        (CoherenceRelation::Result, &politician, &honest),
    ] {
        let cs = check_coherent_situation(rel, x.closed_lf(), y.closed_lf(), &kb).unwrap();
        println!("{rel}: satisfied={} presupposing {} {:?}", cs.satisfied, cs.presupposition, cs.chain);
    }
}
