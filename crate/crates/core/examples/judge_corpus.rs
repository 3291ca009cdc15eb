//! Judging the bundled corpus and summarizing agreement with its gold
//! marks.

use coherent_ellipsis::harness::{run_corpus, Format, Options};

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let report = run_corpus(
        format!("{data}/corpus.jsonl"),
        format!("{data}/lexicon.tsv"),
        format!("{data}/kb.txt"),
    )
    .unwrap();
    let options = Options { format: Format::Text, explain: Some("ell2".into()), relation: None };
    let text = report.render(&options);
    for line in text.lines().filter(|l| l.starts_with("ell2") || l.starts_with("  |") || l.starts_with("matched")) {
        println!("{line}");
    }
}
