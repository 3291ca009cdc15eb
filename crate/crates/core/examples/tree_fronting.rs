//! Reading bracketed trees, fronting parallel constituents and aligning
//! clauses.

use coherent_ellipsis::grammar::{derive, parse_tree, Lexicon};
use coherent_ellipsis::syntree::{align_parallel, front_parallel, Category, Supply};

fn main() {
    let lexicon = Lexicon::load(concat!(env!("CARGO_MANIFEST_DIR"), "/data/lexicon.tsv")).unwrap();
    let tree = parse_tree("(S (NP John) (VP (V supports) (NP Clinton)))", &lexicon).unwrap();
    let fronted = front_parallel(&tree, &[Category::NP, Category::NP], &mut Supply::new()).unwrap();
    println!("original: {tree}");
    println!("fronted:  {fronted}");
    println!("LF before: {}", derive(&tree, &lexicon).unwrap().lf.unwrap());
    println!("LF after:  {}", derive(&fronted, &lexicon).unwrap().lf.unwrap());

    let passive = parse_tree(
        "(S (NP Clinton) (VP[voice=passive] (AUX was) (V[vform=passive-participle] supported) (PP (P by) (NP Mary))))",
        &lexicon,
    )
    .unwrap();
    for (s, t) in align_parallel(&tree, &passive).pairs {
        println!("aligned {s} ~ {t}");
    }
}
