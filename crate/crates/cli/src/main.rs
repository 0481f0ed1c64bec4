//! Command-line front end for the Gurmukhi pre-processing pipeline.
//!
//! Exit codes: 0 on success, 1 for configuration or resource failures
//! (and any failure under `--fail-fast`), 2 when a run succeeded but
//! skipped documents.

mod commands;
mod reports;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "gurmukhi-prep",
    version,
    about = "Pre-process Gurmukhi-script Punjabi text corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline over a document or corpus directory.
    Run(commands::run::RunArgs),
    /// Split a corpus into learning and testing sets.
    Split(commands::split::SplitArgs),
    /// Re-aggregate statistics from existing report files.
    Stats(commands::stats::StatsArgs),
    /// Validate a stop-list, dictionary, or gazetteer file.
    LexiconCheck(commands::lexicon_check::CheckArgs),
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run(args) => commands::run::execute(args),
        Command::Split(args) => commands::split::execute(args),
        Command::Stats(args) => commands::stats::execute(args),
        Command::LexiconCheck(args) => commands::lexicon_check::execute(args),
    }
}
