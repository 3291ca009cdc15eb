use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use coherent_ellipsis::coherence::CoherenceRelation;
use coherent_ellipsis::harness::{run_corpus, Format, Options};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Records,
}

/// Judges a corpus of discourses against its gold felicity marks.
#[derive(Debug, Parser)]
#[command(name = "judge", version)]
struct Args {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long)]
    kb: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Print derivation traces for this item.
    #[arg(long, value_name = "ITEM_ID")]
    explain: Option<String>,
    /// Show verdicts for one relation only.
    #[arg(long, value_name = "NAME")]
    relation: Option<String>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let relation = match args.relation.as_deref().map(str::parse::<CoherenceRelation>).transpose() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("judge: {e}");
            return ExitCode::from(2);
        }
    };
    let options = Options {
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Records => Format::Records,
        },
        explain: args.explain,
        relation,
    };
    match run_corpus(&args.corpus, &args.lexicon, &args.kb) {
        Ok(report) => {
            if let Some(id) = &options.explain {
                if !report.items.iter().any(|i| &i.id == id) {
                    eprintln!("judge: no item '{id}' in the corpus");
                    return ExitCode::from(2);
                }
            }
            print!("{}", report.render(&options));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("judge: {e}");
            ExitCode::from(2)
        }
    }
}
