//! The `split` subcommand: deterministic learning/testing manifests.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;

use gurmukhi_prep::corpus::SplitAssignment;
use gurmukhi_prep::split_corpus;

#[derive(Args)]
pub struct SplitArgs {
    /// Corpus root directory.
    pub corpus: PathBuf,
    /// Learning-set fraction, strictly between 0 and 1.
    #[arg(long, default_value_t = 0.7)]
    pub ratio: f64,
    /// Shuffle seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Manifest output path.
    #[arg(long, short = 'o')]
    pub out: PathBuf,
}

pub fn execute(args: SplitArgs) -> ExitCode {
    let files = match super::collect_corpus_files(&args.corpus) {
        Ok(files) => files,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    let manifest = match split_corpus(&files, args.ratio, args.seed) {
        Ok(manifest) => manifest,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    let file = match File::create(&args.out) {
        Ok(file) => file,
        Err(err) => {
            eprintln!("error: cannot create {}: {err}", args.out.display());
            return ExitCode::from(1);
        }
    };
    if let Err(err) = manifest.write_to(BufWriter::new(file)) {
        eprintln!("error: cannot write {}: {err}", args.out.display());
        return ExitCode::from(1);
    }
    let learning = manifest
        .entries
        .iter()
        .filter(|e| e.assignment == SplitAssignment::Learning)
        .count();
    println!(
        "{} files ({} learning, {} testing) -> {}",
        manifest.entries.len(),
        learning,
        manifest.entries.len() - learning,
        args.out.display()
    );
    ExitCode::SUCCESS
}
